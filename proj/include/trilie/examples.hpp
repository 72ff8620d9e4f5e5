#pragma once

#include "trilie/algebra.hpp"

namespace trilie::examples {

/// The 4-dimensional algebra with [e2,e3,e4] = e1 and all other basis
/// brackets zero. Its center is spanned by e1.
TriLieAlgebra dim4_algebra();

/// The adjoint action of dim4_algebra() on itself.
Action dim4_action();

/// The diagonal crossed homomorphism e1 -> 0, e2 -> e2, e3 -> e3,
/// e4 -> -e4 for dim4_action().
LinearMap dim4_crossed_map();

/// A crossed homomorphism of the dim-4 family from its free parameters:
/// the 3x3 block rows 2..4 x cols 2..4 and the free top-row entries
/// (a12, a13, a14). a11 is filled in from the variety constraint; the
/// first column below the diagonal is zero.
LinearMap dim4_family_map(const Matrix& block3,
                          const Vec& top_row_free);

/// A 4-dimensional bracket that fails the fundamental identity:
/// [e2,e3,e4] = e1 together with [e1,e2,e3] = e2.
TriLieAlgebra dim4_fi_violation();

} // namespace trilie::examples
