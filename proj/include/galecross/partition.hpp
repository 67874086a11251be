#pragma once

#include <algorithm>
#include <optional>
#include <utility>

#include "galecross/combinatorics.hpp"
#include "galecross/exactmath.hpp"

namespace galecross {

/// Affine Gale diagram colors: white points were projected along their Gale vector.
enum class Color { white, black };

/// Two index classes split by a linear hyperplane through the origin, with a witness
/// normal that is strictly positive on `positive` and strictly negative on `negative`.
/// Canonical orientation puts the smallest index on the positive side.
struct LinearSeparation {
  IndexSet positive;
  IndexSet negative;
  VectorQ normal;

  Mask positive_mask() const { return to_mask(positive); }
  int min_side() const { return static_cast<int>(std::min(positive.size(), negative.size())); }
};

/// Vertex-disjoint index sets whose simplices share a relative-interior point.
struct CrossingPair {
  IndexSet left;
  IndexSet right;
  std::optional<VectorQ> witness;

  /// Unordered identity of the pair: smaller-minimum side first.
  std::pair<Mask, Mask> key() const {
    Mask a = to_mask(left), b = to_mask(right);
    return (a & -a) < (b & -b) ? std::pair{a, b} : std::pair{b, a};
  }
};

/// Puts the side holding the smallest index first.
inline void canonicalize(CrossingPair& c) {
  if (!c.right.empty() && (c.left.empty() || c.right.front() < c.left.front())) std::swap(c.left, c.right);
}

}  // namespace galecross
