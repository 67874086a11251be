#pragma once

// Brute-force references used only by tests. Each avoids the library routine it checks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "galecross/exactmath.hpp"
#include "galecross/kfacets.hpp"

namespace oracle {

using galecross::Index;
using galecross::MatrixQ;
using galecross::Rational;
using galecross::VectorQ;

// Cofactor expansion along the first row.
inline Rational cofactor_det(const MatrixQ& a) {
  const Index n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Rational total = 0;
  for (Index c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    MatrixQ minor(n - 1, n - 1);
    for (Index r = 1; r < n; ++r)
      for (Index k = 0, mc = 0; k < n; ++k)
        if (k != c) minor(r - 1, mc++) = a(r, k);
    const Rational term = a(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

// Some hyperplane a.x + c strictly separates the points in `inside` from the rest:
// a.x + c >= 1 inside and <= -1 outside, solved as a nonnegative system with split
// variables and slacks. With `through_origin` the offset c is pinned to 0.
inline bool plane_separates(const std::vector<VectorQ>& pts, std::uint64_t inside, bool through_origin = false) {
  const Index n = static_cast<Index>(pts.size());
  const Index d = pts.front().size();
  const Index vars = 2 * (d + 1) + n;
  MatrixQ a = MatrixQ::Zero(n, vars);
  for (Index i = 0; i < n; ++i) {
    const int s = (inside >> i & 1) ? 1 : -1;
    for (Index k = 0; k < d; ++k) {
      a(i, k) = s * pts[static_cast<std::size_t>(i)](k);
      a(i, d + 1 + k) = -s * pts[static_cast<std::size_t>(i)](k);
    }
    if (!through_origin) {
      a(i, d) = s;
      a(i, 2 * d + 1) = -s;
    }
    a(i, 2 * (d + 1) + i) = -1;
  }
  return galecross::nonneg_feasible<Rational>(a, VectorQ::Ones(n)).has_value();
}

// e[k] = number of k-subsets separable by a plane, for k = 0..s, by trying every subset.
inline std::vector<std::uint64_t> k_set_counts(const std::vector<VectorQ>& pts, int max_k) {
  const int s = static_cast<int>(pts.size());
  std::vector<std::uint64_t> e(static_cast<std::size_t>(s + 1), 0);
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << s); ++mask) {
    const int k = std::popcount(mask);
    if (k > max_k) continue;
    if (plane_separates(pts, mask)) ++e[static_cast<std::size_t>(k)];
  }
  return e;
}

inline std::uint64_t majority_k_set_count(const std::vector<VectorQ>& pts) {
  const int s = static_cast<int>(pts.size());
  const auto e = k_set_counts(pts, s);
  std::uint64_t total = 0;
  for (int k = 1; k < s; ++k)
    if (std::min(k, s - k) >= s / 2) total += e[static_cast<std::size_t>(k)];
  return total;
}

inline std::uint64_t leq_k_set_count(const std::vector<VectorQ>& pts, int k) {
  const auto e = k_set_counts(pts, k);
  std::uint64_t total = 0;
  for (int i = 1; i <= k; ++i) total += e[static_cast<std::size_t>(i)];
  return total;
}

inline int orient(const VectorQ& a, const VectorQ& b, const VectorQ& c) {
  const Rational v = (b(0) - a(0)) * (c(1) - a(1)) - (b(1) - a(1)) * (c(0) - a(0));
  return v > 0 ? 1 : v < 0 ? -1 : 0;
}

// Open segments ab and cd cross (points in general position).
inline bool segments_cross(const VectorQ& a, const VectorQ& b, const VectorQ& c, const VectorQ& d) {
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

// Strictly inside triangle abc.
inline bool in_triangle(const VectorQ& q, const VectorQ& a, const VectorQ& b, const VectorQ& c) {
  const int s = orient(a, b, c);
  return orient(a, b, q) == s && orient(b, c, q) == s && orient(c, a, q) == s;
}

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace oracle
