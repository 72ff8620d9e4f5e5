#pragma once

#include <string>
#include <vector>

#include "trilie/combin.hpp"
#include "trilie/linalg.hpp"
#include "trilie/verdict.hpp"

namespace trilie {

/// A finite-dimensional 3-Lie algebra over Q: a vector space with a
/// skew-symmetric trilinear bracket. Structure constants are stored only
/// for strictly increasing basis triples; all other orderings are derived
/// from the permutation sign, and repeated indices give zero. The
/// fundamental identity is *not* assumed: it is what
/// check_fundamental_identity decides.
class TriLieAlgebra {
 public:
  TriLieAlgebra() = default;
  TriLieAlgebra(std::string name, std::size_t dim)
      : name_(std::move(name)),
        dim_(dim),
        structure_(n_triples(dim), Vec(dim)) {}

  static TriLieAlgebra abelian(std::string name, std::size_t dim) {
    return TriLieAlgebra(std::move(name), dim);
  }

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }

  /// Defines [e_i, e_j, e_k] = value for a strictly increasing triple.
  void set_basis_bracket(std::size_t i, std::size_t j, std::size_t k,
                         Vec value);

  /// [e_i, e_j, e_k] for any index order; zero on repeated indices.
  Vec bracket_basis(std::size_t i, std::size_t j, std::size_t k) const;

  /// Structure vector for the increasing triple of the given rank.
  const Vec& structure_at(std::size_t triple_r) const {
    return structure_[triple_r];
  }

  /// Trilinear extension of the bracket to arbitrary coordinate vectors.
  Vec bracket(const Vec& x, const Vec& y, const Vec& z) const;

 private:
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<Vec> structure_;
};

/// A linear map between coordinate spaces, kept together with its matrix
/// (target_dim x source_dim). Which algebras the two sides belong to is
/// contextual: every operation that needs brackets takes them explicitly.
struct LinearMap {
  std::string name;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  Matrix mat;

  static LinearMap zero(std::string name, std::size_t src, std::size_t tgt) {
    return {std::move(name), src, tgt, Matrix(tgt, src)};
  }
  static LinearMap identity(std::string name, std::size_t dim) {
    return {std::move(name), dim, dim, Matrix::identity(dim)};
  }

  Vec apply(const Vec& x) const { return mul(mat, x); }
  Vec apply_basis(std::size_t i) const { return mat.col(i); }
};

/// A bilinear skew map from pairs of algebra elements to operators on a
/// space of dimension space_dim; the candidate data for a representation.
/// Matrices are stored for strictly increasing pairs only.
class Representation {
 public:
  Representation() = default;
  Representation(std::size_t alg_dim, std::size_t space_dim)
      : alg_dim_(alg_dim),
        space_dim_(space_dim),
        mats_(n_pairs(alg_dim), Matrix(space_dim, space_dim)) {}

  std::size_t alg_dim() const { return alg_dim_; }
  std::size_t space_dim() const { return space_dim_; }

  /// Mutable operator for a strictly increasing pair.
  Matrix& pair_matrix(std::size_t i, std::size_t j);
  const Matrix& pair_matrix(std::size_t i, std::size_t j) const;

  /// rho(e_i, e_j) u for any index order; zero when i == j.
  Vec apply_basis(std::size_t i, std::size_t j, const Vec& u) const;

  /// Bilinear extension: rho(x, y) u.
  Vec apply(const Vec& x, const Vec& y, const Vec& u) const;

 private:
  std::size_t alg_dim_ = 0;
  std::size_t space_dim_ = 0;
  std::vector<Matrix> mats_;
};

/// The adjoint data ad(e_i, e_j) = [e_i, e_j, -] of an algebra.
Representation adjoint_rep(const TriLieAlgebra& g);

/// An algebra g acting on the underlying space of another algebra h.
struct Action {
  std::string name;
  TriLieAlgebra g;
  TriLieAlgebra h;
  Representation rho; // alg_dim = g.dim(), space_dim = h.dim()
};

/// The adjoint action of g on itself.
Action adjoint_action(const TriLieAlgebra& g);

/// A bivector (element of the second exterior power) of a d-dimensional
/// algebra, stored by coefficients on e_i ^ e_j for i < j in pair-rank
/// order.
struct Bivector {
  std::string name;
  std::size_t alg_dim = 0;
  Vec coeffs; // length n_pairs(alg_dim)

  static Bivector zero(std::string name, std::size_t d) {
    return {std::move(name), d, Vec(n_pairs(d))};
  }
  static Bivector wedge_basis(std::size_t d, std::size_t i, std::size_t j);
};

// ---------------------------------------------------------------------------
// Structure checks. All scans run over the canonical tuple set for the
// identity's symmetry type (strictly increasing inside each skew group);
// multilinearity and built-in skewness extend the verdict to all arguments.
// ---------------------------------------------------------------------------

/// Fundamental identity
///   [x1,x2,[x3,x4,x5]] =
///     [[x1,x2,x3],x4,x5] + [x3,[x1,x2,x4],x5] + [x3,x4,[x1,x2,x5]]
/// scanned over x1<x2 and x3<x4<x5.
Verdict check_fundamental_identity(const TriLieAlgebra& a);

/// Representation equations for rho against the bracket of g:
///   rho(x1,x2) rho(x3,x4) - rho(x3,x4) rho(x1,x2)
///     = rho([x1,x2,x3],x4) + rho(x3,[x1,x2,x4])
///   rho(x1,[x2,x3,x4])
///     = rho(x3,x4) rho(x1,x2) - rho(x2,x4) rho(x1,x3)
///       + rho(x2,x3) rho(x1,x4)
/// Violation tuples are (i1,i2,i3,i4,u) resp. (i1,i2,i3,i4,u) with u the
/// basis vector the operator residual was applied to.
Verdict check_representation(const TriLieAlgebra& g,
                             const Representation& rho);

/// Action checks on top of the representation equations: values of rho must
/// be central in h, and rho must kill h-brackets.
struct ActionVerdict {
  Verdict representation;
  Verdict centrality;     // [rho(x,y)u, v, w]_h = 0, tuples (i,j,u,v,w)
  Verdict bracket_compat; // rho(x,y)[u,v,w]_h = 0, tuples (i,j,u,v,w)
  bool ok() const {
    return representation.ok() && centrality.ok() && bracket_compat.ok();
  }
};
ActionVerdict check_action(const Action& act);

/// Bracket of the semidirect sum g x| h on E = g (+) h coordinates:
///   [x+u, y+v, z+w] = [x,y,z]_g + rho(x,y)w + rho(y,z)u + rho(z,x)v
///                     + [u,v,w]_h.
/// g coordinates occupy positions 0..dim g - 1, h the rest.
Vec semidirect_bracket(const Action& act, const Vec& X, const Vec& Y,
                       const Vec& Z);

/// Materializes the semidirect sum as an algebra on dim g + dim h.
TriLieAlgebra semidirect(const Action& act, std::string name = "");

/// Center {x : [x, g, g] = 0}, as a canonical subspace.
Subspace center(const TriLieAlgebra& a);

/// Derived algebra [g, g, g], the span of all basis brackets.
Subspace derived_algebra(const TriLieAlgebra& a);

/// phi[x,y,z]_a = [phi x, phi y, phi z]_b on increasing basis triples.
Verdict check_homomorphism(const LinearMap& phi, const TriLieAlgebra& a,
                           const TriLieAlgebra& b);

/// Crossed-homomorphism residual at the basis triple (i,j,k), 0-based:
///   H[x,y,z]_g - rho(x,y)Hz - rho(y,z)Hx - rho(z,x)Hy - [Hx,Hy,Hz]_h.
Vec crossed_residual(const Action& act, const LinearMap& H, std::size_t i,
                     std::size_t j, std::size_t k);

/// H: g -> h is a crossed homomorphism iff every residual vanishes.
Verdict check_crossed(const Action& act, const LinearMap& H);

/// The graph embedding x |-> (x, Hx) into the semidirect sum, along with
/// the verdict of its homomorphism property (which holds iff H is crossed).
struct GraphEmbedding {
  LinearMap phi;
  Verdict hom;
};
GraphEmbedding graph_embedding(const Action& act, const LinearMap& H);

/// Closed-form membership test for the crossed-homomorphism variety of the
/// 4-dimensional example algebra ([e2,e3,e4] = e1) under its adjoint
/// action: first column below the diagonal vanishes and
///   a11 = a22+a33+a44 + a23*a34*a42 + a24*a32*a43 + a22*a33*a44
///         - a24*a33*a42 - a22*a34*a43 - a23*a32*a44.
/// Entries are 1-based positions in the matrix of H.
struct FamilyConstraintReport {
  bool lower_column_zero = false; // a21 = a31 = a41 = 0
  Rational cubic_residual;        // a11 - (the right-hand side above)
  bool ok() const { return lower_column_zero && cubic_residual == 0; }
};
FamilyConstraintReport check_crossed_family_constraints(const Matrix& H);

/// Relative Rota-Baxter operator of weight lambda: T: h -> g with
///   [Tu,Tv,Tw]_g = T( rho(Tu,Tv)w + rho(Tv,Tw)u + rho(Tw,Tu)v
///                     + lambda [u,v,w]_h )
/// scanned over increasing basis triples of h.
Verdict check_rota_baxter(const Action& act, const LinearMap& T,
                          const Rational& weight);

/// For invertible H: H is crossed iff H^{-1} is a relative Rota-Baxter
/// operator of weight 1. Returns both verdicts so the equivalence is
/// observable. Throws NotInvertible when H is singular.
struct CorrespondenceReport {
  Verdict crossed;
  Verdict rb_of_inverse;
  bool agree() const { return crossed.ok() == rb_of_inverse.ok(); }
};
CorrespondenceReport crossed_rb_correspondence(const Action& act,
                                               const LinearMap& H);

/// Homomorphism of crossed homomorphisms (psi_g, psi_h): H1 -> H2:
/// both maps are algebra endomorphism candidates, psi_h H1 = H2 psi_g
/// (condition 1) and psi_h rho(x,y)u = rho(psi_g x, psi_g y) psi_h u
/// (condition 2).
struct MorphismVerdict {
  Verdict psi_g_hom;
  Verdict psi_h_hom;
  Verdict condition1; // tuples (i): basis vector of g
  Verdict condition2; // tuples (i,j,u)
  bool ok() const {
    return psi_g_hom.ok() && psi_h_hom.ok() && condition1.ok() &&
           condition2.ok();
  }
};
MorphismVerdict check_crossed_hom_morphism(const Action& act,
                                           const LinearMap& H1,
                                           const LinearMap& H2,
                                           const LinearMap& psi_g,
                                           const LinearMap& psi_h);

/// psi_h o H o psi_g^{-1}; crossed again whenever (psi_g, psi_h) respects
/// the action (condition 2) and both are automorphisms. Throws
/// NotInvertible when psi_g is singular.
LinearMap conjugate_crossed(const LinearMap& H, const LinearMap& psi_g,
                            const LinearMap& psi_h);

} // namespace trilie
