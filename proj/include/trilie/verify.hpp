#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trilie {

/// Outcome of one named library invariant checked on randomized inputs.
/// `detail` is deterministic in (seed, trials): a sample count on success,
/// the first failing sample on failure.
struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The names of the registered invariants, in execution order.
std::vector<std::string> property_names();

/// Runs the full randomized invariant suite. Each property draws from its
/// own sub-stream of `seed`, so results do not depend on the order the
/// properties run in; `trials` scales the sample count per property.
std::vector<PropertyResult> run_properties(std::uint64_t seed,
                                           std::size_t trials);

} // namespace trilie
