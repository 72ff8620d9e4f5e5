#include "trilie/combin.hpp"

#include <algorithm>

namespace trilie {

std::pair<std::size_t, std::size_t> pair_unrank(std::size_t d,
                                                std::size_t r) {
  for (std::size_t i = 0; i + 1 < d; ++i) {
    const std::size_t block = d - 1 - i;
    if (r < block) return {i, i + 1 + r};
    r -= block;
  }
  return {0, 0}; // unreachable for valid input
}

std::size_t triple_rank(std::size_t d, std::size_t i, std::size_t j,
                        std::size_t k) {
  // Triples below (i,*,*), then pairs (j,k) within the block of first
  // coordinate i, which is a pair rank in a (d-1-i)-element set.
  std::size_t r = 0;
  for (std::size_t a = 0; a < i; ++a) r += n_pairs(d - 1 - a);
  return r + pair_rank(d - 1 - i, j - i - 1, k - i - 1);
}

std::array<std::size_t, 3> triple_unrank(std::size_t d, std::size_t r) {
  for (std::size_t a = 0; a + 2 < d; ++a) {
    const std::size_t block = n_pairs(d - 1 - a);
    if (r < block) {
      auto [x, y] = pair_unrank(d - 1 - a, r);
      return {a, a + 1 + x, a + 1 + y};
    }
    r -= block;
  }
  return {0, 0, 0}; // unreachable for valid input
}

Sorted3 sort3(std::size_t i, std::size_t j, std::size_t k) {
  if (i == j || j == k || i == k) return {0, {i, j, k}};
  int sign = 1;
  std::array<std::size_t, 3> a{i, j, k};
  if (a[0] > a[1]) {
    std::swap(a[0], a[1]);
    sign = -sign;
  }
  if (a[1] > a[2]) {
    std::swap(a[1], a[2]);
    sign = -sign;
  }
  if (a[0] > a[1]) {
    std::swap(a[0], a[1]);
    sign = -sign;
  }
  return {sign, a};
}

std::vector<Shuffle> shuffles(std::size_t a, std::size_t b) {
  std::vector<Shuffle> out;
  const std::size_t n = a + b;
  // Enumerate a-subsets of {0..n-1} in lexicographic order.
  std::vector<std::size_t> left(a);
  for (std::size_t i = 0; i < a; ++i) left[i] = i;
  while (true) {
    Shuffle s;
    s.left = left;
    std::vector<bool> in_left(n, false);
    for (std::size_t x : left) in_left[x] = true;
    for (std::size_t x = 0; x < n; ++x) {
      if (!in_left[x]) s.right.push_back(x);
    }
    // Parity of the concatenated sequence (left | right): count inversions.
    std::size_t inv = 0;
    for (std::size_t x : s.right) {
      for (std::size_t y : left) {
        if (y > x) ++inv;
      }
    }
    s.sign = (inv % 2 == 0) ? 1 : -1;
    out.push_back(std::move(s));

    if (a == 0) break;
    // Next a-subset in lexicographic order.
    std::size_t i = a;
    while (i > 0 && left[i - 1] == n - a + (i - 1)) --i;
    if (i == 0) break;
    ++left[i - 1];
    for (std::size_t j = i; j < a; ++j) left[j] = left[j - 1] + 1;
  }
  return out;
}

} // namespace trilie
