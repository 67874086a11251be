#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "galecross/partition.hpp"
#include "galecross/pointconfig.hpp"

namespace galecross {

/// Crossing test by exact feasibility of
///   sum lambda_i p_i = sum mu_j p_j,  sum lambda = sum mu = 1,  lambda, mu > 0.
/// The witness is the common relative-interior point. Symmetric in (b, c).
std::optional<CrossingPair> simplices_cross(const PointConfiguration& p, const IndexSet& b, const IndexSet& c);

/// The unique crossing split of d+2 points, found by testing every split directly.
LinearSeparation radon_partition(const PointConfiguration& p);

/// Adds vertices to both sides of a crossing pair and re-verifies the crossing of the
/// enlarged simplices. Throws InvariantError if the re-check fails.
CrossingPair extend_crossing(const PointConfiguration& p, const CrossingPair& base, const IndexSet& add_left,
                             const IndexSet& add_right);

struct CrossingCount {
  std::uint64_t count = 0;
  std::vector<CrossingPair> pairs;  // filled only when requested
};

/// Exact number of unordered vertex-disjoint (u-simplex, v-simplex) crossing pairs.
CrossingCount count_all_crossings(const PointConfiguration& p, int u, int v, bool keep_pairs = false);

}  // namespace galecross
