#pragma once

#include <cstdint>
#include <vector>

#include "mcl/subset.hpp"

namespace mcl {

/// Visits the r-subsets of [0, n) whose smallest element is `first`, in
/// lexicographic order. The buckets first = 0..n-r partition all nonempty
/// r-subsets, which is how enumeration is split across workers.
template <typename F>
void for_each_combination_from(int n, int r, int first, F&& visit) {
  if (r <= 0 || first < 0 || first > n - r) return;
  std::vector<int> c(r);
  std::uint64_t bits = std::uint64_t{1} << first;
  c[0] = first;
  for (int t = 1; t < r; ++t) {
    c[t] = first + t;
    bits |= std::uint64_t{1} << c[t];
  }
  while (true) {
    visit(Subset(bits));
    int t = r - 1;
    while (t >= 1 && c[t] == n - r + t) --t;
    if (t < 1) return;
    for (int u = t; u < r; ++u) bits &= ~(std::uint64_t{1} << c[u]);
    ++c[t];
    bits |= std::uint64_t{1} << c[t];
    for (int u = t + 1; u < r; ++u) {
      c[u] = c[u - 1] + 1;
      bits |= std::uint64_t{1} << c[u];
    }
  }
}

/// Visits every r-subset of [0, n) in lexicographic order.
template <typename F>
void for_each_combination(int n, int r, F&& visit) {
  if (r < 0 || r > n) return;
  if (r == 0) {
    visit(Subset());
    return;
  }
  for (int first = 0; first <= n - r; ++first) for_each_combination_from(n, r, first, visit);
}

}  // namespace mcl
