#pragma once

#include <cstddef>
#include <vector>

#include "trilie/algebra.hpp"

namespace trilie {

/// The space of n-cochains on an algebra of dimension alg_dim with values
/// in a space of dimension val_dim: multilinear maps
///   f(X_1, ..., X_{n-1}, z),   X_a = x_a ^ y_a a pair slot,
/// skew inside each pair, with the last pair and the final argument
/// totally skew together (a wedge-3 tail). The canonical basis is indexed
/// by (n-2) increasing pairs, one increasing triple, and a value
/// component; degree 1 is plain Hom(g, V).
///
/// Coefficient layout: leading pair ranks vary slowest, then the tail
/// rank, then the value component (fastest).
class CochainSpace {
 public:
  CochainSpace(std::size_t alg_dim, std::size_t val_dim, std::size_t degree);

  std::size_t alg_dim() const { return alg_dim_; }
  std::size_t val_dim() const { return val_dim_; }
  std::size_t degree() const { return degree_; }

  /// Number of leading pair slots (degree - 2, or 0 in degree 1).
  std::size_t leading_pairs() const {
    return degree_ >= 2 ? degree_ - 2 : 0;
  }
  /// Number of flattened vector arguments: 2(n-1)+1, or 1 in degree 1.
  std::size_t arg_count() const {
    return degree_ == 1 ? 1 : 2 * (degree_ - 1) + 1;
  }
  /// Number of canonical basis argument tuples.
  std::size_t tuples() const { return tuples_; }
  /// Dimension of the space: tuples() * val_dim().
  std::size_t dim() const { return tuples_ * val_dim_; }

  /// Decoded canonical tuple: ranks of the leading pairs plus the tail
  /// (a triple rank for degree >= 2, a basis index for degree 1).
  struct BasisTuple {
    std::vector<std::size_t> pair_ranks;
    std::size_t tail = 0;
  };
  std::size_t tuple_rank(const BasisTuple& t) const;
  BasisTuple tuple_unrank(std::size_t r) const;

  /// Flattened basis-vector arguments realizing the canonical tuple.
  std::vector<Vec> tuple_args(std::size_t r) const;

  friend bool operator==(const CochainSpace& a, const CochainSpace& b) {
    return a.alg_dim_ == b.alg_dim_ && a.val_dim_ == b.val_dim_ &&
           a.degree_ == b.degree_;
  }

 private:
  std::size_t alg_dim_;
  std::size_t val_dim_;
  std::size_t degree_;
  std::size_t tuples_;
};

/// An element of a cochain space, stored by its coefficients on the
/// canonical basis.
struct Cochain {
  CochainSpace space;
  Vec coeffs;

  static Cochain zero(const CochainSpace& s) {
    return {s, Vec(s.dim())};
  }
  static Cochain unit(const CochainSpace& s, std::size_t coeff_index);

  bool is_zero() const { return vzero(coeffs); }

  /// Value on basis arguments given by flattened slot indices (arbitrary
  /// order; symmetry normalization applies signs, repeated indices in a
  /// skew group give zero).
  Vec eval_basis(const std::vector<std::size_t>& slot_indices) const;

  /// Full multilinear extension to arbitrary coordinate vectors
  /// (arg_count() slots).
  Vec eval(const std::vector<Vec>& args) const;
};

Cochain cochain_add(const Cochain& a, const Cochain& b);
Cochain cochain_sub(const Cochain& a, const Cochain& b);
Cochain cochain_scale(const Rational& c, const Cochain& a);

/// Hom(g, V) as a degree-1 cochain and back.
Cochain cochain_from_map(const LinearMap& H);
LinearMap map_from_cochain(const Cochain& f, std::string name = "");

/// Value of (d_rho f) at arbitrary flattened arguments (2n+1 slots for f
/// of degree n): the alternating sum over
///   - bracket insertions of X_j into each later pair slot,
///   - bracket insertion of X_j into the final argument,
///   - rho(X_j) acting on f with X_j omitted,
///   - the two trailing terms rho(y_n, x_{n+1}) f(..., x_n) and
///     rho(x_{n+1}, x_n) f(..., y_n).
Vec coboundary_eval(const TriLieAlgebra& g, const Representation& rho,
                    const Cochain& f, const std::vector<Vec>& args);

/// The same operator materialized: d_rho f as an (n+1)-cochain.
Cochain coboundary(const TriLieAlgebra& g, const Representation& rho,
                   const Cochain& f);

/// Matrix of d_rho: c^n -> c^{n+1} over the canonical bases.
Matrix coboundary_matrix(const TriLieAlgebra& g, const Representation& rho,
                         std::size_t val_dim, std::size_t degree_n);

/// rho_H(x,y) u = rho(x,y) u + [Hx, Hy, u]_h, the representation twisted
/// by a crossed homomorphism.
Representation induced_representation(const Action& act, const LinearMap& H);

/// delta(x ^ y)(z) = rho(y,z)Hx + rho(z,x)Hy + [Hx,Hy,Hz]_h, extended
/// bilinearly; the degree-1 head of the crossed complex, as a matrix from
/// bivector coordinates to Hom(g,h) coordinates.
Matrix delta_matrix(const Action& act, const LinearMap& H);

/// delta applied to one bivector, as a degree-1 cochain.
Cochain delta_apply(const Action& act, const LinearMap& H,
                    const Bivector& X);

/// Transport of a cochain along an invertible pair:
///   (p omega)(X_1,...,z) = psi_h( omega(psi_g^{-1} x_1 ^ psi_g^{-1} y_1,
///                                  ..., psi_g^{-1} z) ).
/// Throws NotInvertible when psi_g is singular.
Cochain transport_cochain(const Cochain& omega, const LinearMap& psi_g,
                          const LinearMap& psi_h);

/// The cochain complex of a crossed homomorphism: space 1 is the bivector
/// space of g with differential delta; space n >= 2 is the (n-1)-cochain
/// space of g with values in h and differential d_{rho_H}. By convention
/// the degree-1 coboundary space is zero.
struct CrossedComplex {
  Action act;
  LinearMap H;
  Representation rho_H;
  std::size_t max_degree;          // differentials partial_1..partial_max
  std::vector<std::size_t> space_dims; // dims of spaces 1..max_degree+1
  std::vector<Matrix> differentials;   // partial_n : space n -> space n+1
};

CrossedComplex crossed_complex(const Action& act, const LinearMap& H,
                               std::size_t max_degree);

/// Dimensions at degree n (1 <= n <= max_degree): the space, its cocycles,
/// its coboundaries, and the quotient. Inclusion of coboundaries in
/// cocycles is verified exactly; a failure would throw NotASubspace.
struct CohomologyDims {
  std::size_t space = 0;
  std::size_t cocycles = 0;
  std::size_t coboundaries = 0;
  std::size_t cohomology = 0;
};
CohomologyDims cohomology_dims(const CrossedComplex& c, std::size_t n);

} // namespace trilie
