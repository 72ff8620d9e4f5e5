#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "trilie/algebra.hpp"
#include "trilie/cochain.hpp"

namespace trilie {

/// Deterministic random source for property testing and report generation.
/// std::mt19937_64 emits the same word sequence on every platform; values
/// are derived by modular reduction directly from the raw words (the
/// standard distributions are implementation-defined, which would break
/// byte-identical reports). The slight modulo bias is irrelevant here.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  /// Uniform-ish index in [0, n); n must be positive.
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(raw() % n);
  }

  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi) {
    return lo + static_cast<long>(raw() % static_cast<std::uint64_t>(
                                            hi - lo + 1));
  }

  bool coin() { return (raw() & 1u) != 0; }

  /// Small rational: numerator in [-4, 4], denominator in [1, 3]. Small
  /// entries keep exact arithmetic fast without losing generality for
  /// identities that hold (or fail) over the whole field.
  Rational rational();
  Rational nonzero_rational();

  Vec vec(std::size_t n);
  Vec nonzero_vec(std::size_t n);
  Matrix matrix(std::size_t rows, std::size_t cols);
  /// Resamples until the determinant is nonzero.
  Matrix invertible(std::size_t n);

 private:
  std::mt19937_64 eng_;
};

/// Derives an independent stream for a named sub-experiment, so adding or
/// reordering experiments does not shift the samples of the others.
std::uint64_t substream(std::uint64_t seed, std::string_view label);

namespace samples {

/// Linear map with random small-rational entries.
LinearMap map(DetRng& rng, std::string name, std::size_t src,
              std::size_t tgt);

/// A crossed endomorphism of the 4-dim example algebra: random 3x3 block
/// and free top-row entries, corner entry filled in from the variety
/// constraint.
LinearMap family_member(DetRng& rng);

/// An endomorphism violating the variety: either a nonzero entry below
/// the corner or a corner offset, chosen at random.
LinearMap family_violation(DetRng& rng);

/// A crossed family member resampled until it is invertible (nonzero
/// block determinant and nonzero corner).
LinearMap invertible_family_member(DetRng& rng);

/// An invertible endomorphism that fails check_crossed for the adjoint
/// action of the example algebra.
LinearMap invertible_non_crossed(DetRng& rng);

/// A 3-dimensional algebra with a random bracket. Every skew trilinear
/// bracket in dimension 3 satisfies the fundamental identity, so the
/// result is always valid.
TriLieAlgebra dim3_algebra(DetRng& rng, std::string name);

/// A randomized valid (action, crossed map) pair of total dimension at
/// most 8: a 3-dim algebra acting on an abelian algebra of dimension 2..5
/// through a rank-one square-zero operator scaled by a compatible skew
/// form, with the crossed map drawn from the exact solution space of the
/// (linear, since h is abelian) crossed-homomorphism equation.
struct Instance {
  Action act;
  LinearMap crossed;
};
Instance instance(DetRng& rng);

/// Random bivector with small rational coefficients.
Bivector bivector(DetRng& rng, std::string name, std::size_t d);

/// Random cochain over the given space.
Cochain cochain(DetRng& rng, const CochainSpace& space);

/// Random 2-cocycle of the crossed complex of (act, base): a random
/// combination of the kernel basis of the degree-2 differential.
LinearMap kernel_cocycle(DetRng& rng, const Action& act,
                         const LinearMap& base);

/// An automorphism of the 4-dim example algebra: an invertible block on
/// e2..e4 with e1 scaled by the block determinant, plus (optionally) free
/// e1-components on the images of e2..e4. `sparse` restricts the block to
/// a scaled permutation with at most one extra off-diagonal entry and
/// zero free components, keeping preimages small for transport tests on
/// high-degree cochains.
LinearMap dim4_automorphism(DetRng& rng, bool sparse = false);

} // namespace samples
} // namespace trilie
