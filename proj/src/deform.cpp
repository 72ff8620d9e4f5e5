#include "trilie/deform.hpp"

#include "trilie/errors.hpp"

namespace trilie {

namespace {

void require_crossed_base(const Action& act, const LinearMap& H) {
  if (H.source_dim != act.g.dim() || H.target_dim != act.h.dim()) {
    throw DimensionMismatch("deformation base endpoints");
  }
  if (!check_crossed(act, H).ok()) {
    throw InvalidBase("the deformation base is not a crossed homomorphism");
  }
}

/// ad_X z = sum of X_{ij} [e_i, e_j, z]_g over the bivector's support.
Vec ad_bivector(const TriLieAlgebra& g, const Bivector& x, const Vec& z) {
  Vec out(g.dim());
  for (std::size_t r = 0; r < x.coeffs.size(); ++r) {
    if (x.coeffs[r] == 0) continue;
    const auto [i, j] = pair_unrank(g.dim(), r);
    vaxpy(out, x.coeffs[r],
          g.bracket(basis_vec(g.dim(), i), basis_vec(g.dim(), j), z));
  }
  return out;
}

/// rho(X) u = sum of X_{ij} rho(e_i, e_j) u over the bivector's support.
Vec rho_bivector(const Representation& rho, const Bivector& x,
                 const Vec& u) {
  Vec out(rho.space_dim());
  for (std::size_t r = 0; r < x.coeffs.size(); ++r) {
    if (x.coeffs[r] == 0) continue;
    const auto [i, j] = pair_unrank(rho.alg_dim(), r);
    vaxpy(out, x.coeffs[r], rho.apply_basis(i, j, u));
  }
  return out;
}

} // namespace

InfinitesimalVerdict check_infinitesimal(const Action& act,
                                         const DeformationCandidate& c) {
  require_crossed_base(act, c.base);
  const LinearMap& H = c.base;
  const LinearMap& D = c.direction;
  if (D.source_dim != act.g.dim() || D.target_dim != act.h.dim()) {
    throw DimensionMismatch("deformation direction endpoints");
  }
  const std::size_t d = act.g.dim();

  InfinitesimalVerdict out;
  // Route 1: the displayed t^1 identity on increasing basis triples.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        const Vec di = D.apply_basis(i), dj = D.apply_basis(j),
                  dk = D.apply_basis(k);
        const Vec hi = H.apply_basis(i), hj = H.apply_basis(j),
                  hk = H.apply_basis(k);
        Vec res = D.apply(act.g.bracket_basis(i, j, k));
        vaxpy(res, -1, act.rho.apply_basis(i, j, dk));
        vaxpy(res, -1, act.rho.apply_basis(j, k, di));
        vaxpy(res, 1, act.rho.apply_basis(i, k, dj)); // rho(k,i) = -rho(i,k)
        vaxpy(res, -1, act.h.bracket(di, hj, hk));
        vaxpy(res, -1, act.h.bracket(hi, dj, hk));
        vaxpy(res, -1, act.h.bracket(hi, hj, dk));
        if (!vzero(res)) {
          out.direct.violations.push_back({{i + 1, j + 1, k + 1}, res});
        }
      }
    }
  }

  // Route 2: kernel membership in the crossed complex.
  const Matrix d2 = coboundary_matrix(act.g, induced_representation(act, H),
                                      act.h.dim(), 1);
  out.kernel_member = vzero(mul(d2, cochain_from_map(D).coeffs));
  return out;
}

CohomologyClass cohomology_class(const Action& act,
                                 const DeformationCandidate& c) {
  const InfinitesimalVerdict v = check_infinitesimal(act, c);
  if (!v.ok()) {
    throw NotACocycle("the direction is not a 2-cocycle of the base");
  }
  const Matrix d1 = delta_matrix(act, c.base);
  const Matrix d2 = coboundary_matrix(
      act.g, induced_representation(act, c.base), act.h.dim(), 1);
  const Subspace b = column_space(d1);
  const Subspace z = kernel(d2);

  // Reduce the cocycle by the canonical coboundary basis. Reduced-echelon
  // rows each own their pivot column, so a single pass clears them.
  Vec red = cochain_from_map(c.direction).coeffs;
  std::vector<std::size_t> b_pivots;
  for (const Vec& row : b.basis) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    b_pivots.push_back(p);
    vaxpy(red, -red[p], row);
  }

  // Read the class off at the kernel pivots the coboundaries do not use.
  CohomologyClass out;
  out.representative = red;
  for (const Vec& row : z.basis) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    bool used = false;
    for (std::size_t q : b_pivots) used = used || q == p;
    if (!used) out.coordinates.push_back(red[p]);
  }
  return out;
}

EquivalenceReport check_equivalence(const Action& act, const LinearMap& H,
                                    const LinearMap& dir1,
                                    const LinearMap& dir2,
                                    const Bivector& X) {
  for (const LinearMap* d : {&dir1, &dir2}) {
    if (!check_infinitesimal(act, {H, *d}).ok()) {
      throw NotACocycle("equivalence requires 2-cocycle directions");
    }
  }
  if (X.alg_dim != act.g.dim()) {
    throw DimensionMismatch("witness bivector lives in a different algebra");
  }
  const std::size_t dg = act.g.dim();
  const std::size_t dh = act.h.dim();

  EquivalenceReport out;
  // The defining condition: (dir1 - dir2)(z) = delta(X)(z) per basis z.
  const Cochain dx = delta_apply(act, H, X);
  for (std::size_t zi = 0; zi < dg; ++zi) {
    Vec res = dir1.apply_basis(zi);
    vaxpy(res, -1, dir2.apply_basis(zi));
    vaxpy(res, -1, dx.eval_basis({zi}));
    if (!vzero(res)) out.witness.violations.push_back({{zi + 1}, res});
  }

  // t^1 of psi_g = Id + t ad_X being a bracket homomorphism: ad_X is a
  // derivation of g (an instance of the fundamental identity).
  out.psi_g_first_order = true;
  for (std::size_t i = 0; i < dg && out.psi_g_first_order; ++i) {
    for (std::size_t j = i + 1; j < dg && out.psi_g_first_order; ++j) {
      for (std::size_t k = j + 1; k < dg; ++k) {
        const Vec bi = basis_vec(dg, i), bj = basis_vec(dg, j),
                  bk = basis_vec(dg, k);
        Vec res = ad_bivector(act.g, X, act.g.bracket_basis(i, j, k));
        vaxpy(res, -1, act.g.bracket(ad_bivector(act.g, X, bi), bj, bk));
        vaxpy(res, -1, act.g.bracket(bi, ad_bivector(act.g, X, bj), bk));
        vaxpy(res, -1, act.g.bracket(bi, bj, ad_bivector(act.g, X, bk)));
        if (!vzero(res)) {
          out.psi_g_first_order = false;
          break;
        }
      }
    }
  }

  // t^1 of psi_h = Id + t rho(X) being a bracket homomorphism: both sides
  // vanish by the action axioms (centrality and bracket compatibility).
  out.psi_h_first_order = true;
  for (std::size_t u = 0; u < dh && out.psi_h_first_order; ++u) {
    for (std::size_t v = u + 1; v < dh && out.psi_h_first_order; ++v) {
      for (std::size_t w = v + 1; w < dh; ++w) {
        const Vec bu = basis_vec(dh, u), bv = basis_vec(dh, v),
                  bw = basis_vec(dh, w);
        Vec res = rho_bivector(act.rho, X, act.h.bracket_basis(u, v, w));
        vaxpy(res, -1, act.h.bracket(rho_bivector(act.rho, X, bu), bv, bw));
        vaxpy(res, -1, act.h.bracket(bu, rho_bivector(act.rho, X, bv), bw));
        vaxpy(res, -1, act.h.bracket(bu, bv, rho_bivector(act.rho, X, bw)));
        if (!vzero(res)) {
          out.psi_h_first_order = false;
          break;
        }
      }
    }
  }

  // t^1 of the intertwining condition rho(psi_g x, psi_g y) psi_h =
  // psi_h rho(x, y): an instance of the representation identities.
  out.intertwine_first_order = true;
  for (std::size_t i = 0; i < dg && out.intertwine_first_order; ++i) {
    for (std::size_t j = i + 1; j < dg && out.intertwine_first_order; ++j) {
      for (std::size_t u = 0; u < dh; ++u) {
        const Vec bu = basis_vec(dh, u);
        Vec res = rho_bivector(act.rho, X, act.rho.apply_basis(i, j, bu));
        vaxpy(res, -1, act.rho.apply(ad_bivector(act.g, X,
                                                 basis_vec(dg, i)),
                                     basis_vec(dg, j), bu));
        vaxpy(res, -1, act.rho.apply(basis_vec(dg, i),
                                     ad_bivector(act.g, X,
                                                 basis_vec(dg, j)),
                                     bu));
        vaxpy(res, -1,
              act.rho.apply_basis(i, j, rho_bivector(act.rho, X, bu)));
        if (!vzero(res)) {
          out.intertwine_first_order = false;
          break;
        }
      }
    }
  }
  return out;
}

std::optional<Bivector> find_equivalence_witness(const Action& act,
                                                 const LinearMap& H,
                                                 const LinearMap& dir1,
                                                 const LinearMap& dir2) {
  require_crossed_base(act, H);
  Vec rhs = cochain_from_map(dir1).coeffs;
  vaxpy(rhs, -1, cochain_from_map(dir2).coeffs);
  const std::optional<Vec> x = solve(delta_matrix(act, H), rhs);
  if (!x) return std::nullopt;
  Bivector out = Bivector::zero("X", act.g.dim());
  out.coeffs = *x;
  return out;
}

EquivalenceReport trivial_deformation(const Action& act,
                                      const DeformationCandidate& c,
                                      const Bivector& X) {
  return check_equivalence(act, c.base, c.direction,
                           LinearMap::zero("0", act.g.dim(), act.h.dim()),
                           X);
}

} // namespace trilie
