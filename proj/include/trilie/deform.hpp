#pragma once

#include <optional>

#include "trilie/algebra.hpp"
#include "trilie/cochain.hpp"

namespace trilie {

/// A first-order deformation H + t*direction of a crossed homomorphism H.
/// All checks work modulo t^2: the t^0 equations hold because the base is
/// crossed, and the t^1 equations are what the operations below verify.
struct DeformationCandidate {
  LinearMap base;      // H, a crossed homomorphism g -> h
  LinearMap direction; // the deformation direction g -> h
};

/// The t^1 coefficient of the crossed-homomorphism equation for
/// H + t*direction, checked two independent ways: the displayed six-term
/// identity scanned over basis triples, and membership of the direction
/// in the kernel of the degree-2 differential of the crossed complex.
struct InfinitesimalVerdict {
  Verdict direct;     // violating triples of the displayed identity
  bool kernel_member; // partial_2 applied to the direction vanishes
  /// The two routes must always agree; false would indicate an internal
  /// inconsistency rather than a property of the input.
  bool routes_agree() const { return direct.ok() == kernel_member; }
  bool ok() const { return direct.ok() && kernel_member; }
};

/// Validates that the direction is a 2-cocycle for the base. Throws
/// InvalidBase when the base map fails check_crossed.
InfinitesimalVerdict check_infinitesimal(const Action& act,
                                         const DeformationCandidate& c);

/// A cocycle's class in degree-2 cohomology, in canonical coordinates:
/// the cocycle is reduced by the reduced-echelon basis of the coboundary
/// space, and the reduced vector is read off at the kernel pivots that
/// the coboundaries do not occupy. Equal coordinates are equivalent to
/// the difference being a coboundary.
struct CohomologyClass {
  Vec representative; // the reduced cocycle (full coefficient vector)
  Vec coordinates;    // one entry per cohomology dimension

  friend bool operator==(const CohomologyClass& a,
                         const CohomologyClass& b) = default;
};

/// Computes the class of a valid deformation direction. Throws
/// InvalidBase / NotACocycle when the preconditions fail.
CohomologyClass cohomology_class(const Action& act,
                                 const DeformationCandidate& c);

/// The first-order equivalence report for two deformation directions of
/// the same base along a bivector witness X:
///   - `witness`: the defining condition d1 - d2 = delta(X) per basis
///     vector (the verdict of the equivalence itself);
///   - the remaining flags are the t^1 coefficients of the homomorphism
///     conditions of the pair (Id + t ad_X, Id + t rho(X)); the axioms of
///     the structures make them automatic, and they are verified and
///     reported separately rather than folded into the verdict.
struct EquivalenceReport {
  Verdict witness;
  bool psi_g_first_order = false;    // ad_X is a bracket derivation
  bool psi_h_first_order = false;    // rho(X) is a bracket derivation
  bool intertwine_first_order = false; // rho(X) intertwines with rho
  bool equivalent() const { return witness.ok(); }
};

/// Checks whether direction-1 and direction-2 give equivalent first-order
/// deformations of H via the witness X. Throws InvalidBase when H is not
/// crossed and NotACocycle when either direction fails
/// check_infinitesimal.
EquivalenceReport check_equivalence(const Action& act, const LinearMap& H,
                                    const LinearMap& dir1,
                                    const LinearMap& dir2,
                                    const Bivector& X);

/// Solves delta(X) = dir1 - dir2 for a witness bivector. Returns an
/// empty optional exactly when the two directions lie in distinct
/// cohomology classes (the linear system is infeasible).
std::optional<Bivector> find_equivalence_witness(const Action& act,
                                                 const LinearMap& H,
                                                 const LinearMap& dir1,
                                                 const LinearMap& dir2);

/// Equivalence of the candidate with the undeformed base (direction 0)
/// via the witness X: the deformation is trivial when this holds.
EquivalenceReport trivial_deformation(const Action& act,
                                      const DeformationCandidate& c,
                                      const Bivector& X);

} // namespace trilie
