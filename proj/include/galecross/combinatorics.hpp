#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace galecross {

/// Ordered list of 0-based point indices.
using IndexSet = std::vector<int>;
/// Bit i set iff index i is a member. Configurations stay far below 64 points.
using Mask = std::uint64_t;

inline Mask to_mask(const IndexSet& s) {
  Mask m = 0;
  for (int i : s) m |= Mask{1} << i;
  return m;
}

inline IndexSet from_mask(Mask m) {
  IndexSet s;
  while (m) {
    s.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return s;
}

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Calls f on every k-subset of {0..n-1} in lexicographic order. f returns false to stop early.
inline void for_each_combination(int n, int k, const std::function<bool(const IndexSet&)>& f) {
  if (k < 0 || k > n) return;
  IndexSet c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  for (;;) {
    if (!f(c)) return;
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace galecross
