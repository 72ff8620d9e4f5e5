#pragma once

#include <cstddef>
#include <vector>

#include "trilie/linalg.hpp"

namespace trilie {

/// One violated instance of a multilinear identity: the basis tuple at
/// which it failed (1-based indices, matching the definition-file
/// convention) and the residual coordinates (lhs - rhs).
struct Violation {
  std::vector<std::size_t> where;
  Vec residual;
};

/// Outcome of an identity check. Violations are listed in lexicographic
/// order of their tuples, so output is deterministic.
struct Verdict {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

} // namespace trilie
