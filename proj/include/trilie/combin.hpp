#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace trilie {

/// Number of unordered pairs from d elements, C(d,2).
inline std::size_t n_pairs(std::size_t d) { return d * (d - 1) / 2; }

/// Number of unordered triples from d elements, C(d,3).
inline std::size_t n_triples(std::size_t d) {
  return d * (d - 1) * (d - 2) / 6;
}

/// Lexicographic rank of the pair (i,j), 0 <= i < j < d.
inline std::size_t pair_rank(std::size_t d, std::size_t i, std::size_t j) {
  return i * d - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> pair_unrank(std::size_t d, std::size_t r);

/// Lexicographic rank of the triple (i,j,k), 0 <= i < j < k < d.
std::size_t triple_rank(std::size_t d, std::size_t i, std::size_t j,
                        std::size_t k);

std::array<std::size_t, 3> triple_unrank(std::size_t d, std::size_t r);

/// Indices sorted ascending together with the sign of the sorting
/// permutation; sign == 0 when two indices coincide.
struct Sorted2 {
  int sign;
  std::size_t i, j;
};
inline Sorted2 sort2(std::size_t i, std::size_t j) {
  if (i == j) return {0, i, j};
  return (i < j) ? Sorted2{1, i, j} : Sorted2{-1, j, i};
}

struct Sorted3 {
  int sign;
  std::array<std::size_t, 3> idx;
};
Sorted3 sort3(std::size_t i, std::size_t j, std::size_t k);

/// An (a,b)-shuffle of {0,...,a+b-1}: `left` and `right` are the two
/// increasing blocks, `sign` the parity of the permutation (left|right).
struct Shuffle {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  int sign;
};

/// All (a,b)-shuffles, enumerated with `left` in lexicographic order.
std::vector<Shuffle> shuffles(std::size_t a, std::size_t b);

} // namespace trilie
