#include "trilie/cochain.hpp"

#include <functional>

#include "trilie/errors.hpp"

namespace trilie {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

} // namespace

CochainSpace::CochainSpace(std::size_t alg_dim, std::size_t val_dim,
                           std::size_t degree)
    : alg_dim_(alg_dim), val_dim_(val_dim), degree_(degree) {
  if (degree == 0) throw DimensionMismatch("cochain degree must be >= 1");
  tuples_ = (degree == 1)
                ? alg_dim
                : power(n_pairs(alg_dim), degree - 2) * n_triples(alg_dim);
}

std::size_t CochainSpace::tuple_rank(const BasisTuple& t) const {
  if (t.pair_ranks.size() != leading_pairs()) {
    throw DimensionMismatch("tuple has wrong number of leading pairs");
  }
  if (degree_ == 1) return t.tail;
  std::size_t r = 0;
  for (std::size_t p : t.pair_ranks) r = r * n_pairs(alg_dim_) + p;
  return r * n_triples(alg_dim_) + t.tail;
}

CochainSpace::BasisTuple CochainSpace::tuple_unrank(std::size_t r) const {
  BasisTuple t;
  if (degree_ == 1) {
    t.tail = r;
    return t;
  }
  t.tail = r % n_triples(alg_dim_);
  r /= n_triples(alg_dim_);
  t.pair_ranks.assign(leading_pairs(), 0);
  for (std::size_t a = leading_pairs(); a-- > 0;) {
    t.pair_ranks[a] = r % n_pairs(alg_dim_);
    r /= n_pairs(alg_dim_);
  }
  return t;
}

std::vector<Vec> CochainSpace::tuple_args(std::size_t r) const {
  const BasisTuple t = tuple_unrank(r);
  std::vector<Vec> args;
  if (degree_ == 1) {
    args.push_back(basis_vec(alg_dim_, t.tail));
    return args;
  }
  for (std::size_t p : t.pair_ranks) {
    auto [i, j] = pair_unrank(alg_dim_, p);
    args.push_back(basis_vec(alg_dim_, i));
    args.push_back(basis_vec(alg_dim_, j));
  }
  const auto tri = triple_unrank(alg_dim_, t.tail);
  for (std::size_t i : tri) args.push_back(basis_vec(alg_dim_, i));
  return args;
}

Cochain Cochain::unit(const CochainSpace& s, std::size_t coeff_index) {
  Cochain c = Cochain::zero(s);
  c.coeffs.at(coeff_index) = 1;
  return c;
}

Vec Cochain::eval_basis(const std::vector<std::size_t>& slot_indices) const {
  if (slot_indices.size() != space.arg_count()) {
    throw DimensionMismatch("cochain basis arguments");
  }
  Vec out(space.val_dim());
  int sign = 1;
  CochainSpace::BasisTuple t;
  if (space.degree() == 1) {
    t.tail = slot_indices[0];
  } else {
    for (std::size_t a = 0; a < space.leading_pairs(); ++a) {
      const Sorted2 s2 = sort2(slot_indices[2 * a], slot_indices[2 * a + 1]);
      if (s2.sign == 0) return out;
      sign *= s2.sign;
      t.pair_ranks.push_back(pair_rank(space.alg_dim(), s2.i, s2.j));
    }
    const std::size_t base = 2 * space.leading_pairs();
    const Sorted3 s3 = sort3(slot_indices[base], slot_indices[base + 1],
                             slot_indices[base + 2]);
    if (s3.sign == 0) return out;
    sign *= s3.sign;
    t.tail = triple_rank(space.alg_dim(), s3.idx[0], s3.idx[1], s3.idx[2]);
  }
  const std::size_t offset = space.tuple_rank(t) * space.val_dim();
  for (std::size_t c = 0; c < space.val_dim(); ++c) {
    if (coeffs[offset + c] != 0) {
      out[c] = (sign == 1) ? coeffs[offset + c] : -coeffs[offset + c];
    }
  }
  return out;
}

Vec Cochain::eval(const std::vector<Vec>& args) const {
  const std::size_t slots = space.arg_count();
  if (args.size() != slots) {
    throw DimensionMismatch("cochain evaluation arity");
  }
  for (const Vec& a : args) {
    if (a.size() != space.alg_dim()) {
      throw DimensionMismatch("cochain argument length");
    }
  }
  Vec out(space.val_dim());
  std::vector<std::size_t> idx(slots);
  // Expand slot by slot over the supports; symmetry is applied at the base.
  std::function<void(std::size_t, const Rational&)> rec =
      [&](std::size_t s, const Rational& coef) {
        if (s == slots) {
          const Vec v = eval_basis(idx);
          if (!vzero(v)) vaxpy(out, coef, v);
          return;
        }
        const Vec& a = args[s];
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i] == 0) continue;
          idx[s] = i;
          rec(s + 1, coef * a[i]);
        }
      };
  rec(0, Rational(1));
  return out;
}

Cochain cochain_add(const Cochain& a, const Cochain& b) {
  if (!(a.space == b.space)) throw DimensionMismatch("cochain spaces differ");
  return {a.space, vadd(a.coeffs, b.coeffs)};
}

Cochain cochain_sub(const Cochain& a, const Cochain& b) {
  if (!(a.space == b.space)) throw DimensionMismatch("cochain spaces differ");
  return {a.space, vsub(a.coeffs, b.coeffs)};
}

Cochain cochain_scale(const Rational& c, const Cochain& a) {
  return {a.space, vscale(c, a.coeffs)};
}

Cochain cochain_from_map(const LinearMap& H) {
  CochainSpace s(H.source_dim, H.target_dim, 1);
  Cochain c = Cochain::zero(s);
  for (std::size_t a = 0; a < H.source_dim; ++a) {
    for (std::size_t v = 0; v < H.target_dim; ++v) {
      c.coeffs[a * H.target_dim + v] = H.mat(v, a);
    }
  }
  return c;
}

LinearMap map_from_cochain(const Cochain& f, std::string name) {
  if (f.space.degree() != 1) {
    throw DimensionMismatch("only degree-1 cochains are linear maps");
  }
  LinearMap h = LinearMap::zero(std::move(name), f.space.alg_dim(),
                                f.space.val_dim());
  for (std::size_t a = 0; a < h.source_dim; ++a) {
    for (std::size_t v = 0; v < h.target_dim; ++v) {
      h.mat(v, a) = f.coeffs[a * h.target_dim + v];
    }
  }
  return h;
}

Vec coboundary_eval(const TriLieAlgebra& g, const Representation& rho,
                    const Cochain& f, const std::vector<Vec>& args) {
  const std::size_t n = f.space.degree();
  if (g.dim() != f.space.alg_dim() || rho.alg_dim() != g.dim() ||
      rho.space_dim() != f.space.val_dim()) {
    throw DimensionMismatch("coboundary data mismatch");
  }
  if (args.size() != 2 * n + 1) {
    throw DimensionMismatch("coboundary arity: expected 2n+1 arguments");
  }
  // 1-based pair accessors matching the operator's usual display.
  const auto x = [&](std::size_t j) -> const Vec& { return args[2 * j - 2]; };
  const auto y = [&](std::size_t j) -> const Vec& { return args[2 * j - 1]; };
  const Vec& last = args[2 * n];

  // f's arguments with pair j omitted, pair k (if nonzero) replaced by
  // (a, b), and the final slot set to `fin`.
  const auto f_args = [&](std::size_t j, std::size_t k, const Vec& a,
                          const Vec& b, const Vec& fin) {
    std::vector<Vec> fa;
    for (std::size_t m = 1; m <= n; ++m) {
      if (m == j) continue;
      if (m == k) {
        fa.push_back(a);
        fa.push_back(b);
      } else {
        fa.push_back(x(m));
        fa.push_back(y(m));
      }
    }
    fa.push_back(fin);
    return fa;
  };

  Vec out(f.space.val_dim());
  for (std::size_t j = 1; j <= n; ++j) {
    const Rational sj = (j % 2 == 0) ? 1 : -1; // (-1)^j
    // Insertions of [x_j, y_j, -] into every later pair slot.
    for (std::size_t k = j + 1; k <= n; ++k) {
      vaxpy(out, sj,
            f.eval(f_args(j, k, g.bracket(x(j), y(j), x(k)), y(k), last)));
      vaxpy(out, sj,
            f.eval(f_args(j, k, x(k), g.bracket(x(j), y(j), y(k)), last)));
    }
    // Insertion into the final argument.
    vaxpy(out, sj, f.eval(f_args(j, 0, last, last,
                                 g.bracket(x(j), y(j), last))));
    // rho(X_j) acting on f with X_j omitted.
    vaxpy(out, -sj, rho.apply(x(j), y(j), f.eval(f_args(j, 0, last, last,
                                                        last))));
  }
  const Rational sn = (n % 2 == 0) ? -1 : 1; // (-1)^{n+1}
  vaxpy(out, sn,
        rho.apply(y(n), last, f.eval(f_args(n, 0, last, last, x(n)))));
  vaxpy(out, sn,
        rho.apply(last, x(n), f.eval(f_args(n, 0, last, last, y(n)))));
  return out;
}

Cochain coboundary(const TriLieAlgebra& g, const Representation& rho,
                   const Cochain& f) {
  const CochainSpace target(f.space.alg_dim(), f.space.val_dim(),
                            f.space.degree() + 1);
  Cochain out = Cochain::zero(target);
  for (std::size_t r = 0; r < target.tuples(); ++r) {
    const Vec v = coboundary_eval(g, rho, f, target.tuple_args(r));
    for (std::size_t c = 0; c < target.val_dim(); ++c) {
      out.coeffs[r * target.val_dim() + c] = v[c];
    }
  }
  return out;
}

Matrix coboundary_matrix(const TriLieAlgebra& g, const Representation& rho,
                         std::size_t val_dim, std::size_t degree_n) {
  const CochainSpace source(g.dim(), val_dim, degree_n);
  const CochainSpace target(g.dim(), val_dim, degree_n + 1);
  Matrix m(target.dim(), source.dim());
  for (std::size_t col = 0; col < source.dim(); ++col) {
    m.set_col(col, coboundary(g, rho, Cochain::unit(source, col)).coeffs);
  }
  return m;
}

Representation induced_representation(const Action& act,
                                      const LinearMap& H) {
  if (H.source_dim != act.g.dim() || H.target_dim != act.h.dim()) {
    throw DimensionMismatch("induced representation endpoints");
  }
  const std::size_t d = act.g.dim();
  const std::size_t m = act.h.dim();
  Representation out(d, m);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      Matrix mat = act.rho.pair_matrix(i, j);
      const Vec hi = H.apply_basis(i), hj = H.apply_basis(j);
      for (std::size_t u = 0; u < m; ++u) {
        const Vec b = act.h.bracket(hi, hj, basis_vec(m, u));
        for (std::size_t r = 0; r < m; ++r) mat(r, u) += b[r];
      }
      out.pair_matrix(i, j) = std::move(mat);
    }
  }
  return out;
}

Matrix delta_matrix(const Action& act, const LinearMap& H) {
  const std::size_t d = act.g.dim();
  const std::size_t m = act.h.dim();
  Matrix out(d * m, n_pairs(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vec hi = H.apply_basis(i), hj = H.apply_basis(j);
      Vec col(d * m);
      for (std::size_t z = 0; z < d; ++z) {
        Vec v = act.rho.apply_basis(j, z, hi);
        vaxpy(v, -1, act.rho.apply_basis(i, z, hj)); // rho(z,x) = -rho(x,z)
        vaxpy(v, 1, act.h.bracket(hi, hj, H.apply_basis(z)));
        for (std::size_t c = 0; c < m; ++c) col[z * m + c] = v[c];
      }
      out.set_col(pair_rank(d, i, j), col);
    }
  }
  return out;
}

Cochain delta_apply(const Action& act, const LinearMap& H,
                    const Bivector& X) {
  if (X.alg_dim != act.g.dim()) {
    throw DimensionMismatch("bivector lives in a different algebra");
  }
  const Vec coeffs = mul(delta_matrix(act, H), X.coeffs);
  CochainSpace s(act.g.dim(), act.h.dim(), 1);
  return {s, coeffs};
}

Cochain transport_cochain(const Cochain& omega, const LinearMap& psi_g,
                          const LinearMap& psi_h) {
  if (psi_g.source_dim != omega.space.alg_dim() ||
      psi_h.source_dim != omega.space.val_dim()) {
    throw DimensionMismatch("transport endpoints");
  }
  const Matrix gi = inverse(psi_g.mat);
  Cochain out = Cochain::zero(omega.space);
  for (std::size_t r = 0; r < omega.space.tuples(); ++r) {
    std::vector<Vec> args = omega.space.tuple_args(r);
    for (Vec& a : args) a = mul(gi, a);
    const Vec v = psi_h.apply(omega.eval(args));
    for (std::size_t c = 0; c < omega.space.val_dim(); ++c) {
      out.coeffs[r * omega.space.val_dim() + c] = v[c];
    }
  }
  return out;
}

CrossedComplex crossed_complex(const Action& act, const LinearMap& H,
                               std::size_t max_degree) {
  if (max_degree < 1) throw DimensionMismatch("max degree must be >= 1");
  CrossedComplex c{act, H, induced_representation(act, H), max_degree, {}, {}};
  const std::size_t dg = act.g.dim();
  const std::size_t dh = act.h.dim();
  c.space_dims.push_back(n_pairs(dg));
  for (std::size_t n = 2; n <= max_degree + 1; ++n) {
    c.space_dims.push_back(CochainSpace(dg, dh, n - 1).dim());
  }
  c.differentials.push_back(delta_matrix(act, H));
  for (std::size_t n = 2; n <= max_degree; ++n) {
    c.differentials.push_back(coboundary_matrix(act.g, c.rho_H, dh, n - 1));
  }
  return c;
}

CohomologyDims cohomology_dims(const CrossedComplex& c, std::size_t n) {
  if (n < 1 || n > c.max_degree) {
    throw DimensionMismatch("degree outside the computed complex");
  }
  CohomologyDims dims;
  const Matrix& dn = c.differentials[n - 1];
  dims.space = dn.cols();
  const Subspace z = kernel(dn);
  dims.cocycles = z.dim();
  // Degree 1 has no incoming differential: its coboundary space is zero by
  // convention.
  const Subspace b = (n == 1) ? Subspace{dims.space, {}}
                              : column_space(c.differentials[n - 2]);
  dims.coboundaries = b.dim();
  dims.cohomology = quotient_dim(z, b);
  return dims;
}

} // namespace trilie
