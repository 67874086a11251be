#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galecross/partition.hpp"
#include "galecross/pointconfig.hpp"

namespace galecross {

enum class Regime { main, nonconvex, t_neighborly, highly_neighborly };

std::string to_string(Regime r);
Regime parse_regime(const std::string& name);

/// Validated crossing pairs of hyperedges produced by one lower-bound pipeline.
///
/// guaranteed_lower_bound = base_bound * extension_factor, where base_bound is the number
/// of base separations the argument promises and extension_factor the binomial count of
/// completions per base pair. When extension_factor is 0 the pipeline cannot extend at this
/// d: `degenerate_extension` is set, `pairs` holds the unextended base crossings on the
/// sub-configuration, and the bound check is skipped.
struct WitnessReport {
  Regime regime = Regime::main;
  int d = 0;
  std::optional<int> parameter;  // t or t'
  std::vector<CrossingPair> pairs;
  std::uint64_t base_bound = 0;
  std::uint64_t extension_factor = 0;
  std::uint64_t guaranteed_lower_bound = 0;
  bool degenerate_extension = false;
  IndexSet sub_configuration;        // vertices of V'
  std::uint64_t base_candidates = 0;  // directed lines or k-sets examined
  std::uint64_t base_separations = 0; // distinct separations of D(V') they produced
  std::vector<VectorQ> counted_points;  // affine diagram points whose k-sets give base_bound
  std::string note;
};

/// Lower-bound pipeline for any drawing of K_{2d}^d (d >= 6): proper separation of the
/// Gale transform of the first d+4 vertices, almost balanced directed lines of the
/// resulting 2D affine Gale diagram, each rotated about its midpoint, then extension.
WitnessReport main_witnesses(const PointConfiguration& p);

/// Pipeline for vertex sets not in convex position (d >= 7).
WitnessReport nonconvex_witnesses(const PointConfiguration& p, std::optional<int> interior_index = std::nullopt);

/// Pipeline for t-neighborly but not (t+1)-neighborly vertex sets (d >= 7).
WitnessReport t_neighborly_witnesses(const PointConfiguration& p, int t);

/// Pipeline for (floor(d/2) - t')-neighborly vertex sets (d >= 6).
WitnessReport highly_neighborly_witnesses(const PointConfiguration& p, int t_prime);

/// Every pair crosses by the direct oracle, pairs are pairwise distinct, and the count
/// reaches the guaranteed bound.
bool verify_report(const PointConfiguration& p, const WitnessReport& w);

/// JSON document: regime, parameters, bound and pairs as label lists.
std::string report_to_json(const PointConfiguration& p, const WitnessReport& w);

}  // namespace galecross
