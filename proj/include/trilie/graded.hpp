#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "trilie/algebra.hpp"
#include "trilie/cochain.hpp"

namespace trilie {

/// An element of the graded Lie algebra of cochains on a single space E:
/// degree p >= 0 means a multilinear map with p pair slots and one final
/// argument (2p+1 slots in all), E-valued, with the same symmetry type as
/// Cochain of degree p+1.
///
/// Elements are held as lazy expression trees (sums, scalings, shuffle
/// compositions over leaf tables and structure brackets) and evaluated on
/// demand; `materialize` produces the coefficient table when the ambient
/// space is small enough to want one. Evaluation is linear in every slot,
/// so agreement on canonical basis tuples decides equality.
class GradedElement {
 public:
  struct Expr;

  std::size_t ambient() const;
  std::size_t degree() const;
  std::size_t arg_count() const { return 2 * degree() + 1; }

  /// Value on arbitrary coordinate vectors (2p+1 of them, length ambient).
  Vec eval(const std::vector<Vec>& args) const;
  /// Value on basis vectors given by index.
  Vec eval_basis(const std::vector<std::size_t>& idx) const;

  /// Coefficient table over CochainSpace(ambient, ambient, degree+1).
  Cochain materialize() const;

  /// The zero element of a given degree.
  static GradedElement zero(std::size_t ambient, std::size_t degree);
  /// A coefficient table as a leaf (requires val_dim == alg_dim); the
  /// graded degree is the cochain degree minus one.
  static GradedElement from_cochain(const Cochain& c);
  /// The bracket of an algebra as a degree-1 element evaluated from the
  /// structure constants. For a semidirect sum this is the element
  /// Delta = pi + rho + mu controlling the whole construction.
  static GradedElement bracket_element(const TriLieAlgebra& a);

  explicit GradedElement(std::shared_ptr<const Expr> impl)
      : impl_(std::move(impl)) {}

  /// The underlying expression node (opaque outside the implementation).
  const std::shared_ptr<const Expr>& impl() const { return impl_; }

 private:
  std::shared_ptr<const Expr> impl_;
};

/// Sum and scalar multiple (degrees and ambients must agree).
GradedElement graded_add(const GradedElement& a, const GradedElement& b);
GradedElement graded_scale(const Rational& c, const GradedElement& a);

/// The shuffle-sign composition (P, Q) -> P . Q of degrees p, q:
///   - for every pair slot k of P and every (k-1, q)-shuffle of the first
///     k+q-1 pairs, Q applied to the right block and the first (resp.
///     second) member of pair k+q, wedged into slot k, with the sign
///     (-1)^{(k-1)q} eps(sigma);
///   - for every (p, q)-shuffle of all p+q pairs, Q applied to the right
///     block and the final argument, fed to P's final slot, with the sign
///     (-1)^{pq} eps(sigma).
/// For p = 0 only the second family survives (post-composition).
GradedElement compose(const GradedElement& p, const GradedElement& q);

/// The graded commutator [P,Q] = P.Q - (-1)^{pq} Q.P.
GradedElement nr_bracket(const GradedElement& p, const GradedElement& q);

/// The controlling data of an action: the semidirect space E = g (+) h
/// with its bracket as the distinguished degree-1 element. The relative
/// cochains (arguments from g, values in h) form the abelian subalgebra
/// picked out by the projection below, and the action axioms guarantee
/// the master equation [Delta, Delta] = 0.
struct VData {
  Action act;
  GradedElement Delta;

  std::size_t g_dim() const { return act.g.dim(); }
  std::size_t h_dim() const { return act.h.dim(); }
  std::size_t ambient() const { return act.g.dim() + act.h.dim(); }
};

/// Builds the V-data of an action after validating the action axioms;
/// throws InvalidStructure when they fail (the master equation would not
/// hold).
VData make_v_data(const Action& act);

/// Extension by zero: arguments projected to g, the value of f included
/// into the h block. A cochain of degree n embeds with graded degree n-1.
GradedElement embed_relative(const VData& vd, const Cochain& f);

/// The projection onto relative cochains: arguments restricted to g, the
/// value's h component kept. Returns the coefficient table of the degree
/// p+1 relative cochain.
Cochain project_relative(const VData& vd, const GradedElement& p);

/// The nested derived bracket P[...[[Delta, a_1], a_2]..., a_k] of one or
/// more relative cochains (k = args.size()).
Cochain derived_bracket(const VData& vd, const std::vector<Cochain>& args);

/// The unary and ternary structure maps of the controlling homotopy
/// algebra; the binary map and all maps of arity >= 4 vanish (validated
/// by sampling in the verification suite).
Cochain derived_bracket_l1(const VData& vd, const Cochain& f);
Cochain derived_bracket_l3(const VData& vd, const Cochain& p,
                           const Cochain& q, const Cochain& r);

/// l1(H) + (1/6) l3(H, H, H) for a degree-0 relative cochain (a linear
/// map g -> h): the Maurer-Cartan residual. It vanishes exactly when H is
/// a crossed homomorphism, and equals minus the crossed-homomorphism
/// residual pointwise.
Cochain mc_residual(const VData& vd, const LinearMap& H);

/// The structure maps twisted by a Maurer-Cartan element H:
///   l1_H(f)    = l1(f) + (1/2) l3(H, H, f)
///   l2_H(f, g) = l3(H, f, g)
///   l3_H       = l3
/// The two inner brackets with H are materialized once (they are small)
/// and reused across evaluations.
class TwistedBrackets {
 public:
  TwistedBrackets(VData vd, const LinearMap& H);

  Cochain l1(const Cochain& f) const;
  Cochain l2(const Cochain& f, const Cochain& g) const;
  Cochain l3(const Cochain& f, const Cochain& g, const Cochain& h) const;

  const VData& v_data() const { return vd_; }

 private:
  VData vd_;
  GradedElement delta_h_;    // [Delta, i(H)], materialized
  GradedElement delta_h_h_;  // [[Delta, i(H)], i(H)], materialized
};

/// Twisted brackets for a crossed homomorphism H; throws NotMaurerCartan
/// when mc_residual(H) != 0.
TwistedBrackets twisted_brackets(const VData& vd, const LinearMap& H);

/// l1_H(H') + (1/2) l2_H(H', H') + (1/6) l3_H(H', H', H'): zero exactly
/// when H + H' is again a crossed homomorphism. Throws NotMaurerCartan
/// when H itself is not one.
Cochain twisted_mc_residual(const VData& vd, const LinearMap& H,
                            const LinearMap& H2);

} // namespace trilie
