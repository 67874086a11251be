#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galecross/combinatorics.hpp"
#include "galecross/exactmath.hpp"

namespace galecross {

/// An ordered, labelled sequence of points in Q^d.
class PointConfiguration {
 public:
  PointConfiguration() = default;
  /// Labels default to "v1", "v2", ... when empty.
  PointConfiguration(int dim, std::vector<VectorQ> points, std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(points_.size()); }
  const VectorQ& point(int i) const { return points_.at(static_cast<std::size_t>(i)); }
  const std::vector<VectorQ>& points() const { return points_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// The (d+1) x m matrix whose i-th column is (p_i, 1).
  MatrixQ lifted() const;
  /// Lifted columns of the selected points only, in the order given.
  MatrixQ lifted(const IndexSet& indices) const;

  /// Sub-configuration on the given indices; labels travel with their points.
  PointConfiguration subset(const IndexSet& indices) const;
  PointConfiguration with_point(int index, VectorQ replacement) const;

  friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;

 private:
  int dim_ = 0;
  std::vector<VectorQ> points_;
  std::vector<std::string> labels_;
};

/// True iff every (d+1)-subset is affinely independent.
bool is_general_position(const PointConfiguration& p);

/// True iff no point lies in the convex hull of the others.
bool is_convex_position(const PointConfiguration& p);

/// Indices of points whose convex hull contains point `index` (a basic solution of the
/// convex-combination system, so at most d+1 of them), or nullopt if it is a vertex.
std::optional<IndexSet> hull_support(const PointConfiguration& p, int index);

/// True iff `face` is the vertex set of a face of conv(p): no point of its affine hull
/// is a convex combination of the remaining points.
bool is_face(const PointConfiguration& p, const IndexSet& face);

PointConfiguration gen_moment_curve(int d, const std::vector<Rational>& ts);

/// Integer points drawn uniformly from [-bound, bound]^d by a seeded 64-bit Mersenne
/// twister; whole configurations are re-drawn until in general position (at most
/// kMaxRedraws attempts).
PointConfiguration gen_random(int d, int n, std::uint64_t seed, std::int64_t bound);
inline constexpr int kMaxRedraws = 1000;

/// Replaces point `target` by the convex combination of `support` with `weights`
/// (d+1 strictly positive weights summing to 1). If the exact combination breaks general
/// position, the weights are jittered by shrinking positive factors until it holds.
PointConfiguration plant_interior(const PointConfiguration& p, int target, const IndexSet& support,
                                  const std::vector<Rational>& weights);

/// gen_random followed by planting point d+1 at the barycenter of points 0..d.
PointConfiguration gen_planted(int d, int n, std::uint64_t seed, std::int64_t bound);

/// Prism over a (d-1)-simplex (the product of a segment and a simplex, 2d vertices),
/// integer-perturbed by a seeded generator into general position.
PointConfiguration gen_product(int d, std::uint64_t seed);

/// 2d points: the moment curve t = 1..2d-2 in the first d-1 coordinates with small seeded
/// heights, plus two apexes far above and below its barycenter. Convex position, and the
/// apex pair is never an edge, so the neighborliness is exactly 1.
PointConfiguration gen_bipyramid(int d, std::uint64_t seed);

/// Configuration document: {"dimension": d, "labels": [...], "points": [["p/q", ...], ...]}.
PointConfiguration load_config(const std::string& document);
std::string save_config(const PointConfiguration& p);

}  // namespace galecross
