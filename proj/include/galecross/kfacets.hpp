#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "galecross/partition.hpp"

namespace galecross {

/// Planar points with colors; no three collinear.
struct ColoredPointSet2D {
  std::vector<VectorQ> points;
  std::vector<Color> colors;

  int size() const { return static_cast<int>(points.size()); }
  int count(Color c) const;
};

/// Points in Q^3; no four coplanar.
struct PointSet3D {
  std::vector<VectorQ> points;

  int size() const { return static_cast<int>(points.size()); }
};

/// E[j] = number of j-facets (j = 0..s-3); e[k] = number of k-sets (k = 0..s, with
/// e[0] = e[s] = 0 so that indices read naturally).
struct FacetStats {
  std::vector<std::uint64_t> E;
  std::vector<std::uint64_t> e;
};

/// Sign of det[b - a, q - a]: +1 when q is left of the directed line a -> b.
int orient2d(const VectorQ& a, const VectorQ& b, const VectorQ& q);
/// Sign of det[b - a, c - a, q - a].
int orient3d(const VectorQ& a, const VectorQ& b, const VectorQ& c, const VectorQ& q);

/// (white, black) index pairs whose line leaves equally many white and black points in each open half-plane.
std::vector<std::pair<int, int>> balanced_lines(const ColoredPointSet2D& r);

/// Directed (from, to) white-black lines whose left open half-plane is color balanced.
std::vector<std::pair<int, int>> almost_balanced_directed_lines(const ColoredPointSet2D& r);

std::vector<std::uint64_t> j_facets(const PointSet3D& s);

/// Every non-empty proper subset separable by a plane avoiding all points, as masks in
/// increasing order. Candidate planes pass through 3 points and are tilted toward each of
/// the 8 sign patterns on them.
std::vector<Mask> enumerate_k_sets(const PointSet3D& s);

std::vector<std::uint64_t> k_sets_direct(const PointSet3D& s);

FacetStats facet_stats(const PointSet3D& s);

struct IdentityCheck {
  int k = 0;
  std::uint64_t e_k = 0;
  Rational predicted;  // from the j-facet counts
  bool holds = false;
};

struct AndrzejakReport {
  int s = 0;
  FacetStats stats;
  std::vector<IdentityCheck> checks;
  bool all_hold() const;
};

/// Checks e_1 = E_0/2 + 2, e_{s-1} = E_{s-3}/2 + 2 and e_k = (E_{k-1} + E_{k-2})/2 + 2,
/// with e computed by the direct enumerator.
AndrzejakReport andrzejak_check(const PointSet3D& s);

struct HalvingStats {
  bool odd = false;
  std::uint64_t count = 0;  // halving triangles (odd s) or almost halving triangles (even s)
  std::uint64_t bound = 0;  // floor(s/2)^2
};

HalvingStats halving_stats(const PointSet3D& s);

/// Number of (<= j)-facets; requires 0 <= j < s/4.
std::uint64_t leq_facet_count(const PointSet3D& s, int j);

/// Number of (<= k)-sets; requires 1 <= k <= s-1.
std::uint64_t leq_k_set_count(const PointSet3D& s, int k);

/// k-sets with min{k, s-k} >= ceil((s-1)/2).
std::vector<Mask> majority_k_sets(const PointSet3D& s);
std::uint64_t majority_k_set_count(const PointSet3D& s);

/// CSV with header "s,j_or_k,E_j,e_k"; empty cells where an index is out of range.
std::string stats_csv(int s, const FacetStats& stats);
/// CSV with header "s,k,e_k,predicted,holds".
std::string identity_csv(const AndrzejakReport& report);

}  // namespace galecross
