#include "trilie/sampling.hpp"

#include "trilie/combin.hpp"
#include "trilie/examples.hpp"

namespace trilie {

Rational DetRng::rational() {
  return Rational(integer(-4, 4), integer(1, 3));
}

Rational DetRng::nonzero_rational() {
  Rational q = rational();
  while (q == 0) q = rational();
  return q;
}

Vec DetRng::vec(std::size_t n) {
  Vec v(n);
  for (Rational& q : v) q = rational();
  return v;
}

Vec DetRng::nonzero_vec(std::size_t n) {
  Vec v = vec(n);
  while (vzero(v)) v = vec(n);
  return v;
}

Matrix DetRng::matrix(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational();
  }
  return m;
}

Matrix DetRng::invertible(std::size_t n) {
  Matrix m = matrix(n, n);
  while (determinant(m) == 0) m = matrix(n, n);
  return m;
}

std::uint64_t substream(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 1469598103934665603ull; // FNV-1a over the label
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::uint64_t z = seed ^ h; // splitmix64 finalizer decorrelates streams
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace samples {

LinearMap map(DetRng& rng, std::string name, std::size_t src,
              std::size_t tgt) {
  LinearMap m = LinearMap::zero(std::move(name), src, tgt);
  m.mat = rng.matrix(tgt, src);
  return m;
}

LinearMap family_member(DetRng& rng) {
  return examples::dim4_family_map(rng.matrix(3, 3), rng.vec(3));
}

LinearMap family_violation(DetRng& rng) {
  LinearMap h = family_member(rng);
  h.name = "Hbad";
  if (rng.coin()) {
    // Nonzero entry below the corner.
    h.mat(1 + rng.index(3), 0) = rng.nonzero_rational();
  } else {
    // Corner pushed off the cubic.
    h.mat(0, 0) += rng.nonzero_rational();
  }
  return h;
}

LinearMap invertible_family_member(DetRng& rng) {
  LinearMap h = family_member(rng);
  while (determinant(h.mat) == 0) h = family_member(rng);
  return h;
}

LinearMap invertible_non_crossed(DetRng& rng) {
  const Action act = examples::dim4_action();
  LinearMap h = LinearMap::zero("H", 4, 4);
  do {
    h.mat = rng.invertible(4);
  } while (check_crossed(act, h).ok());
  return h;
}

TriLieAlgebra dim3_algebra(DetRng& rng, std::string name) {
  // Only [e1,e2,e3] is stored in dimension 3; any value satisfies the
  // fundamental identity (both sides of every instance involve a bracket
  // with a repeated argument after expansion).
  TriLieAlgebra g(std::move(name), 3);
  g.set_basis_bracket(0, 1, 2, rng.vec(3));
  return g;
}

namespace {

/// The skew matrix with kernel containing `a` (the cross-product matrix);
/// its entries define a skew form vanishing against `a`.
Matrix cross_matrix(const Vec& a) {
  Matrix c(3, 3);
  c(0, 1) = -a[2];
  c(0, 2) = a[1];
  c(1, 2) = -a[0];
  c(1, 0) = a[2];
  c(2, 0) = -a[1];
  c(2, 1) = a[0];
  return c;
}

} // namespace

Instance instance(DetRng& rng) {
  const std::size_t dh = 2 + rng.index(4); // total dimension 5..8

  // The acting algebra: abelian with an arbitrary skew form, or a random
  // bracket with the form chosen to annihilate the derived ideal.
  TriLieAlgebra g("g", 3);
  Matrix form(3, 3);
  if (rng.coin()) {
    form = cross_matrix(rng.vec(3));
  } else {
    const Vec w = rng.nonzero_vec(3);
    g.set_basis_bracket(0, 1, 2, w);
    form = cross_matrix(vscale(rng.rational(), w));
  }
  const TriLieAlgebra h = TriLieAlgebra::abelian("h", dh);

  // A rank-one square-zero operator u v^T with v orthogonal to u. All
  // operator products inside the representation equations then vanish,
  // and the remaining terms vanish because the form kills the derived
  // ideal, so the axioms hold by construction.
  const Vec u = rng.nonzero_vec(dh);
  std::size_t k = 0;
  while (u[k] == 0) ++k;
  Vec v;
  do {
    v = rng.vec(dh);
    Rational dot = 0;
    for (std::size_t i = 0; i < dh; ++i) {
      if (i != k) dot += v[i] * u[i];
    }
    v[k] = -dot / u[k];
  } while (vzero(v));
  Matrix n(dh, dh);
  for (std::size_t r = 0; r < dh; ++r) {
    for (std::size_t c = 0; c < dh; ++c) n(r, c) = u[r] * v[c];
  }

  Representation rho(3, dh);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      rho.pair_matrix(i, j) = mscale(form(i, j), n);
    }
  }
  Action act{"sampled", g, h, rho};

  // With h abelian the crossed-homomorphism equation is linear in the
  // map, so its full solution space is a matrix kernel; sample from it.
  const Subspace sols = kernel(coboundary_matrix(g, rho, dh, 1));
  Cochain c = Cochain::zero(CochainSpace(3, dh, 1));
  for (const Vec& b : sols.basis) vaxpy(c.coeffs, rng.rational(), b);
  return {std::move(act), map_from_cochain(c, "H")};
}

Bivector bivector(DetRng& rng, std::string name, std::size_t d) {
  Bivector x = Bivector::zero(std::move(name), d);
  x.coeffs = rng.vec(n_pairs(d));
  return x;
}

Cochain cochain(DetRng& rng, const CochainSpace& space) {
  return {space, rng.vec(space.dim())};
}

LinearMap kernel_cocycle(DetRng& rng, const Action& act,
                         const LinearMap& base) {
  const Matrix d2 = coboundary_matrix(
      act.g, induced_representation(act, base), act.h.dim(), 1);
  const Subspace z = kernel(d2);
  Cochain c = Cochain::zero(CochainSpace(act.g.dim(), act.h.dim(), 1));
  for (const Vec& b : z.basis) vaxpy(c.coeffs, rng.rational(), b);
  return map_from_cochain(c, "D");
}

LinearMap dim4_automorphism(DetRng& rng, bool sparse) {
  Matrix block(3, 3);
  if (sparse) {
    // A scaled permutation plus at most one off-diagonal entry: preimages
    // of basis vectors then have at most two nonzero coordinates.
    do {
      block = Matrix(3, 3);
      std::size_t perm[3] = {0, 1, 2};
      const std::size_t s = rng.index(3);
      std::swap(perm[s], perm[rng.index(3)]);
      for (std::size_t i = 0; i < 3; ++i) {
        block(perm[i], i) = rng.nonzero_rational();
      }
      const std::size_t r = rng.index(3), c = rng.index(3);
      if (block(r, c) == 0) block(r, c) = rng.rational();
    } while (determinant(block) == 0);
  } else {
    block = rng.invertible(3);
  }

  LinearMap psi = LinearMap::zero("psi", 4, 4);
  psi.mat(0, 0) = determinant(block);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) psi.mat(r + 1, c + 1) = block(r, c);
  }
  if (!sparse) {
    for (std::size_t c = 1; c < 4; ++c) psi.mat(0, c) = rng.rational();
  }
  return psi;
}

} // namespace samples
} // namespace trilie
