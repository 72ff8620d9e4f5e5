#include "trilie/algebra.hpp"

#include <algorithm>

#include "trilie/errors.hpp"

namespace trilie {

namespace {

// Union of the supports of several coordinate vectors, ascending.
std::vector<std::size_t> joint_support(std::initializer_list<const Vec*> vs) {
  std::size_t n = 0;
  for (const Vec* v : vs) n = std::max(n, v->size());
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) {
    for (const Vec* v : vs) {
      if (i < v->size() && (*v)[i] != 0) {
        idx.push_back(i);
        break;
      }
    }
  }
  return idx;
}

void require_dim(std::size_t expected, const Vec& v, const char* what) {
  if (v.size() != expected) {
    throw DimensionMismatch(std::string(what) + ": expected length " +
                            std::to_string(expected) + ", got " +
                            std::to_string(v.size()));
  }
}

} // namespace

void TriLieAlgebra::set_basis_bracket(std::size_t i, std::size_t j,
                                      std::size_t k, Vec value) {
  if (!(i < j && j < k && k < dim_)) {
    throw DimensionMismatch("structure triple must be strictly increasing");
  }
  require_dim(dim_, value, "structure vector");
  structure_[triple_rank(dim_, i, j, k)] = std::move(value);
}

Vec TriLieAlgebra::bracket_basis(std::size_t i, std::size_t j,
                                 std::size_t k) const {
  const Sorted3 s = sort3(i, j, k);
  if (s.sign == 0) return Vec(dim_);
  const Vec& v = structure_[triple_rank(dim_, s.idx[0], s.idx[1], s.idx[2])];
  return s.sign == 1 ? v : vscale(-1, v);
}

Vec TriLieAlgebra::bracket(const Vec& x, const Vec& y, const Vec& z) const {
  require_dim(dim_, x, "bracket argument");
  require_dim(dim_, y, "bracket argument");
  require_dim(dim_, z, "bracket argument");
  Vec out(dim_);
  const std::vector<std::size_t> sup = joint_support({&x, &y, &z});
  // [x,y,z] = sum over increasing triples of the 3x3 coordinate minor times
  // the structure vector of that triple.
  for (std::size_t a = 0; a + 2 < sup.size(); ++a) {
    for (std::size_t b = a + 1; b + 1 < sup.size(); ++b) {
      for (std::size_t c = b + 1; c < sup.size(); ++c) {
        const std::size_t i = sup[a], j = sup[b], k = sup[c];
        const Vec& s = structure_[triple_rank(dim_, i, j, k)];
        if (vzero(s)) continue;
        const Rational minor = x[i] * (y[j] * z[k] - y[k] * z[j]) -
                               x[j] * (y[i] * z[k] - y[k] * z[i]) +
                               x[k] * (y[i] * z[j] - y[j] * z[i]);
        if (minor != 0) vaxpy(out, minor, s);
      }
    }
  }
  return out;
}

Matrix& Representation::pair_matrix(std::size_t i, std::size_t j) {
  if (!(i < j && j < alg_dim_)) {
    throw DimensionMismatch("pair must be strictly increasing");
  }
  return mats_[pair_rank(alg_dim_, i, j)];
}

const Matrix& Representation::pair_matrix(std::size_t i,
                                          std::size_t j) const {
  if (!(i < j && j < alg_dim_)) {
    throw DimensionMismatch("pair must be strictly increasing");
  }
  return mats_[pair_rank(alg_dim_, i, j)];
}

Vec Representation::apply_basis(std::size_t i, std::size_t j,
                                const Vec& u) const {
  const Sorted2 s = sort2(i, j);
  if (s.sign == 0) return Vec(space_dim_);
  Vec v = mul(mats_[pair_rank(alg_dim_, s.i, s.j)], u);
  return s.sign == 1 ? v : vscale(-1, v);
}

Vec Representation::apply(const Vec& x, const Vec& y, const Vec& u) const {
  require_dim(alg_dim_, x, "rho argument");
  require_dim(alg_dim_, y, "rho argument");
  require_dim(space_dim_, u, "rho operand");
  Vec out(space_dim_);
  if (vzero(u)) return out;
  const std::vector<std::size_t> sup = joint_support({&x, &y});
  for (std::size_t a = 0; a + 1 < sup.size(); ++a) {
    for (std::size_t b = a + 1; b < sup.size(); ++b) {
      const std::size_t i = sup[a], j = sup[b];
      const Rational minor = x[i] * y[j] - x[j] * y[i];
      if (minor == 0) continue;
      Vec v = mul(mats_[pair_rank(alg_dim_, i, j)], u);
      vaxpy(out, minor, v);
    }
  }
  return out;
}

Representation adjoint_rep(const TriLieAlgebra& g) {
  const std::size_t d = g.dim();
  Representation rho(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      Matrix& m = rho.pair_matrix(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        m.set_col(k, g.bracket_basis(i, j, k));
      }
    }
  }
  return rho;
}

Action adjoint_action(const TriLieAlgebra& g) {
  return Action{"adjoint", g, g, adjoint_rep(g)};
}

Bivector Bivector::wedge_basis(std::size_t d, std::size_t i, std::size_t j) {
  Bivector b = Bivector::zero("", d);
  const Sorted2 s = sort2(i, j);
  if (s.sign != 0) b.coeffs[pair_rank(d, s.i, s.j)] = s.sign;
  return b;
}

Verdict check_fundamental_identity(const TriLieAlgebra& a) {
  Verdict v;
  const std::size_t d = a.dim();
  for (std::size_t x1 = 0; x1 < d; ++x1) {
    for (std::size_t x2 = x1 + 1; x2 < d; ++x2) {
      for (std::size_t x3 = 0; x3 < d; ++x3) {
        for (std::size_t x4 = x3 + 1; x4 < d; ++x4) {
          for (std::size_t x5 = x4 + 1; x5 < d; ++x5) {
            Vec lhs = a.bracket(basis_vec(d, x1), basis_vec(d, x2),
                                a.bracket_basis(x3, x4, x5));
            Vec rhs = a.bracket(a.bracket_basis(x1, x2, x3),
                                basis_vec(d, x4), basis_vec(d, x5));
            vaxpy(rhs, 1,
                  a.bracket(basis_vec(d, x3), a.bracket_basis(x1, x2, x4),
                            basis_vec(d, x5)));
            vaxpy(rhs, 1,
                  a.bracket(basis_vec(d, x3), basis_vec(d, x4),
                            a.bracket_basis(x1, x2, x5)));
            Vec res = vsub(lhs, rhs);
            if (!vzero(res)) {
              v.violations.push_back(
                  {{x1 + 1, x2 + 1, x3 + 1, x4 + 1, x5 + 1},
                   std::move(res)});
            }
          }
        }
      }
    }
  }
  return v;
}

Verdict check_representation(const TriLieAlgebra& g,
                             const Representation& rho) {
  if (rho.alg_dim() != g.dim()) {
    throw DimensionMismatch("representation is over a different algebra");
  }
  Verdict v;
  const std::size_t d = g.dim();
  const std::size_t w = rho.space_dim();
  const auto e = [&](std::size_t i) { return basis_vec(d, i); };
  // First equation, scanned over pairs (x1<x2), (x3<x4) and basis u.
  for (std::size_t x1 = 0; x1 < d; ++x1) {
    for (std::size_t x2 = x1 + 1; x2 < d; ++x2) {
      for (std::size_t x3 = 0; x3 < d; ++x3) {
        for (std::size_t x4 = x3 + 1; x4 < d; ++x4) {
          for (std::size_t u = 0; u < w; ++u) {
            const Vec eu = basis_vec(w, u);
            Vec lhs = rho.apply_basis(x1, x2, rho.apply_basis(x3, x4, eu));
            vaxpy(lhs, -1,
                  rho.apply_basis(x3, x4, rho.apply_basis(x1, x2, eu)));
            Vec rhs = rho.apply(g.bracket_basis(x1, x2, x3), e(x4), eu);
            vaxpy(rhs, 1, rho.apply(e(x3), g.bracket_basis(x1, x2, x4), eu));
            Vec res = vsub(lhs, rhs);
            if (!vzero(res)) {
              v.violations.push_back(
                  {{x1 + 1, x2 + 1, x3 + 1, x4 + 1, u + 1}, std::move(res)});
            }
          }
        }
      }
    }
  }
  // Second equation, scanned over x1 and x2<x3<x4 and basis u.
  for (std::size_t x1 = 0; x1 < d; ++x1) {
    for (std::size_t x2 = 0; x2 < d; ++x2) {
      for (std::size_t x3 = x2 + 1; x3 < d; ++x3) {
        for (std::size_t x4 = x3 + 1; x4 < d; ++x4) {
          for (std::size_t u = 0; u < w; ++u) {
            const Vec eu = basis_vec(w, u);
            Vec lhs = rho.apply(e(x1), g.bracket_basis(x2, x3, x4), eu);
            Vec rhs = rho.apply_basis(x3, x4, rho.apply_basis(x1, x2, eu));
            vaxpy(rhs, -1,
                  rho.apply_basis(x2, x4, rho.apply_basis(x1, x3, eu)));
            vaxpy(rhs, 1,
                  rho.apply_basis(x2, x3, rho.apply_basis(x1, x4, eu)));
            Vec res = vsub(lhs, rhs);
            if (!vzero(res)) {
              v.violations.push_back(
                  {{x1 + 1, x2 + 1, x3 + 1, x4 + 1, u + 1}, std::move(res)});
            }
          }
        }
      }
    }
  }
  return v;
}

ActionVerdict check_action(const Action& act) {
  ActionVerdict v;
  v.representation = check_representation(act.g, act.rho);
  const std::size_t d = act.g.dim();
  const std::size_t m = act.h.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t u = 0; u < m; ++u) {
        const Vec img = act.rho.apply_basis(i, j, basis_vec(m, u));
        if (vzero(img)) continue;
        // Centrality of rho(e_i,e_j)u in h.
        for (std::size_t p = 0; p < m; ++p) {
          for (std::size_t q = p + 1; q < m; ++q) {
            Vec res = act.h.bracket(img, basis_vec(m, p), basis_vec(m, q));
            if (!vzero(res)) {
              v.centrality.violations.push_back(
                  {{i + 1, j + 1, u + 1, p + 1, q + 1}, std::move(res)});
            }
          }
        }
      }
      // rho kills brackets of h.
      for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t p = u + 1; p < m; ++p) {
          for (std::size_t q = p + 1; q < m; ++q) {
            Vec res =
                act.rho.apply_basis(i, j, act.h.bracket_basis(u, p, q));
            if (!vzero(res)) {
              v.bracket_compat.violations.push_back(
                  {{i + 1, j + 1, u + 1, p + 1, q + 1}, std::move(res)});
            }
          }
        }
      }
    }
  }
  return v;
}

Vec semidirect_bracket(const Action& act, const Vec& X, const Vec& Y,
                       const Vec& Z) {
  const std::size_t dg = act.g.dim();
  const std::size_t dh = act.h.dim();
  require_dim(dg + dh, X, "semidirect argument");
  require_dim(dg + dh, Y, "semidirect argument");
  require_dim(dg + dh, Z, "semidirect argument");
  const auto gpart = [&](const Vec& v) {
    return Vec(v.begin(), v.begin() + dg);
  };
  const auto hpart = [&](const Vec& v) {
    return Vec(v.begin() + dg, v.end());
  };
  const Vec x = gpart(X), y = gpart(Y), z = gpart(Z);
  const Vec u = hpart(X), v = hpart(Y), w = hpart(Z);

  const Vec gval = act.g.bracket(x, y, z);
  Vec hval = act.rho.apply(x, y, w);
  vaxpy(hval, 1, act.rho.apply(y, z, u));
  vaxpy(hval, 1, act.rho.apply(z, x, v));
  vaxpy(hval, 1, act.h.bracket(u, v, w));

  Vec out(dg + dh);
  for (std::size_t i = 0; i < dg; ++i) out[i] = gval[i];
  for (std::size_t i = 0; i < dh; ++i) out[dg + i] = hval[i];
  return out;
}

TriLieAlgebra semidirect(const Action& act, std::string name) {
  if (name.empty()) name = act.g.name() + "_semidirect_" + act.h.name();
  const std::size_t d = act.g.dim() + act.h.dim();
  TriLieAlgebra e(std::move(name), d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        e.set_basis_bracket(i, j, k,
                            semidirect_bracket(act, basis_vec(d, i),
                                               basis_vec(d, j),
                                               basis_vec(d, k)));
      }
    }
  }
  return e;
}

Subspace center(const TriLieAlgebra& a) {
  const std::size_t d = a.dim();
  // Stack the operators x |-> [x, e_j, e_k] over all pairs j<k.
  Matrix m(d * n_pairs(d), d);
  std::size_t block = 0;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) {
      for (std::size_t i = 0; i < d; ++i) {
        const Vec b = a.bracket_basis(i, j, k);
        for (std::size_t r = 0; r < d; ++r) m(block * d + r, i) = b[r];
      }
      ++block;
    }
  }
  return kernel(m);
}

Subspace derived_algebra(const TriLieAlgebra& a) {
  std::vector<Vec> values;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      for (std::size_t k = j + 1; k < a.dim(); ++k) {
        values.push_back(a.bracket_basis(i, j, k));
      }
    }
  }
  return span_of(a.dim(), values);
}

Verdict check_homomorphism(const LinearMap& phi, const TriLieAlgebra& a,
                           const TriLieAlgebra& b) {
  if (phi.source_dim != a.dim() || phi.target_dim != b.dim()) {
    throw DimensionMismatch("homomorphism endpoints");
  }
  Verdict v;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      for (std::size_t k = j + 1; k < a.dim(); ++k) {
        Vec lhs = phi.apply(a.bracket_basis(i, j, k));
        Vec rhs = b.bracket(phi.apply_basis(i), phi.apply_basis(j),
                            phi.apply_basis(k));
        Vec res = vsub(lhs, rhs);
        if (!vzero(res)) {
          v.violations.push_back({{i + 1, j + 1, k + 1}, std::move(res)});
        }
      }
    }
  }
  return v;
}

Vec crossed_residual(const Action& act, const LinearMap& H, std::size_t i,
                     std::size_t j, std::size_t k) {
  const std::size_t dg = act.g.dim();
  const Vec hi = H.apply_basis(i), hj = H.apply_basis(j),
            hk = H.apply_basis(k);
  Vec res = H.apply(act.g.bracket_basis(i, j, k));
  vaxpy(res, -1, act.rho.apply(basis_vec(dg, i), basis_vec(dg, j), hk));
  vaxpy(res, -1, act.rho.apply(basis_vec(dg, j), basis_vec(dg, k), hi));
  vaxpy(res, -1, act.rho.apply(basis_vec(dg, k), basis_vec(dg, i), hj));
  vaxpy(res, -1, act.h.bracket(hi, hj, hk));
  return res;
}

Verdict check_crossed(const Action& act, const LinearMap& H) {
  if (H.source_dim != act.g.dim() || H.target_dim != act.h.dim()) {
    throw DimensionMismatch("crossed homomorphism endpoints");
  }
  Verdict v;
  for (std::size_t i = 0; i < act.g.dim(); ++i) {
    for (std::size_t j = i + 1; j < act.g.dim(); ++j) {
      for (std::size_t k = j + 1; k < act.g.dim(); ++k) {
        Vec res = crossed_residual(act, H, i, j, k);
        if (!vzero(res)) {
          v.violations.push_back({{i + 1, j + 1, k + 1}, std::move(res)});
        }
      }
    }
  }
  return v;
}

GraphEmbedding graph_embedding(const Action& act, const LinearMap& H) {
  const std::size_t dg = act.g.dim();
  const std::size_t dh = act.h.dim();
  LinearMap phi = LinearMap::zero("graph_" + H.name, dg, dg + dh);
  for (std::size_t i = 0; i < dg; ++i) {
    phi.mat(i, i) = 1;
    for (std::size_t r = 0; r < dh; ++r) phi.mat(dg + r, i) = H.mat(r, i);
  }
  GraphEmbedding out{std::move(phi), {}};
  out.hom = check_homomorphism(out.phi, act.g, semidirect(act));
  return out;
}

FamilyConstraintReport check_crossed_family_constraints(const Matrix& H) {
  if (H.rows() != 4 || H.cols() != 4) {
    throw DimensionMismatch("family constraints expect a 4x4 matrix");
  }
  const auto a = [&](std::size_t r, std::size_t c) {
    return H(r - 1, c - 1); // the constraint display uses 1-based entries
  };
  FamilyConstraintReport rep;
  rep.lower_column_zero = a(2, 1) == 0 && a(3, 1) == 0 && a(4, 1) == 0;
  rep.cubic_residual =
      a(1, 1) - (a(2, 2) + a(3, 3) + a(4, 4) + a(2, 3) * a(3, 4) * a(4, 2) +
                 a(2, 4) * a(3, 2) * a(4, 3) + a(2, 2) * a(3, 3) * a(4, 4) -
                 a(2, 4) * a(3, 3) * a(4, 2) - a(2, 2) * a(3, 4) * a(4, 3) -
                 a(2, 3) * a(3, 2) * a(4, 4));
  return rep;
}

Verdict check_rota_baxter(const Action& act, const LinearMap& T,
                          const Rational& weight) {
  if (T.source_dim != act.h.dim() || T.target_dim != act.g.dim()) {
    throw DimensionMismatch("Rota-Baxter operator endpoints");
  }
  Verdict v;
  const std::size_t m = act.h.dim();
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t p = u + 1; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        const Vec tu = T.apply_basis(u), tp = T.apply_basis(p),
                  tq = T.apply_basis(q);
        const Vec eu = basis_vec(m, u), ep = basis_vec(m, p),
                  eq = basis_vec(m, q);
        Vec inner = act.rho.apply(tu, tp, eq);
        vaxpy(inner, 1, act.rho.apply(tp, tq, eu));
        vaxpy(inner, 1, act.rho.apply(tq, tu, ep));
        vaxpy(inner, weight, act.h.bracket_basis(u, p, q));
        Vec res = vsub(act.g.bracket(tu, tp, tq), T.apply(inner));
        if (!vzero(res)) {
          v.violations.push_back({{u + 1, p + 1, q + 1}, std::move(res)});
        }
      }
    }
  }
  return v;
}

CorrespondenceReport crossed_rb_correspondence(const Action& act,
                                               const LinearMap& H) {
  CorrespondenceReport rep;
  rep.crossed = check_crossed(act, H);
  LinearMap hinv{H.name + "_inv", H.target_dim, H.source_dim,
                 inverse(H.mat)};
  rep.rb_of_inverse = check_rota_baxter(act, hinv, 1);
  return rep;
}

MorphismVerdict check_crossed_hom_morphism(const Action& act,
                                           const LinearMap& H1,
                                           const LinearMap& H2,
                                           const LinearMap& psi_g,
                                           const LinearMap& psi_h) {
  MorphismVerdict v;
  v.psi_g_hom = check_homomorphism(psi_g, act.g, act.g);
  v.psi_h_hom = check_homomorphism(psi_h, act.h, act.h);
  // Condition 1: psi_h o H1 = H2 o psi_g, columnwise.
  const Matrix lhs = mul(psi_h.mat, H1.mat);
  const Matrix rhs = mul(H2.mat, psi_g.mat);
  for (std::size_t i = 0; i < act.g.dim(); ++i) {
    Vec res = vsub(lhs.col(i), rhs.col(i));
    if (!vzero(res)) v.condition1.violations.push_back({{i + 1}, std::move(res)});
  }
  // Condition 2 on basis pairs and basis operands.
  for (std::size_t i = 0; i < act.g.dim(); ++i) {
    for (std::size_t j = i + 1; j < act.g.dim(); ++j) {
      for (std::size_t u = 0; u < act.h.dim(); ++u) {
        const Vec eu = basis_vec(act.h.dim(), u);
        Vec l = psi_h.apply(act.rho.apply_basis(i, j, eu));
        Vec r = act.rho.apply(psi_g.apply_basis(i), psi_g.apply_basis(j),
                              psi_h.apply(eu));
        Vec res = vsub(l, r);
        if (!vzero(res)) {
          v.condition2.violations.push_back(
              {{i + 1, j + 1, u + 1}, std::move(res)});
        }
      }
    }
  }
  return v;
}

LinearMap conjugate_crossed(const LinearMap& H, const LinearMap& psi_g,
                            const LinearMap& psi_h) {
  if (psi_g.source_dim != H.source_dim ||
      psi_h.source_dim != H.target_dim) {
    throw DimensionMismatch("conjugation endpoints");
  }
  return LinearMap{psi_h.name + "_" + H.name + "_" + psi_g.name + "_inv",
                   H.source_dim, H.target_dim,
                   mul(psi_h.mat, mul(H.mat, inverse(psi_g.mat)))};
}

} // namespace trilie
