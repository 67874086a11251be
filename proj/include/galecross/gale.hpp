#pragma once

#include <optional>
#include <vector>

#include "galecross/partition.hpp"
#include "galecross/pointconfig.hpp"

namespace galecross {

/// Gale dual of an m-point configuration in Q^d: m vectors in Q^(m-d-1), stored as the
/// columns of `vectors`. Built from the canonical null-space basis of the lifted matrix.
struct GaleTransform {
  PointConfiguration source;
  MatrixQ vectors;

  int size() const { return static_cast<int>(vectors.cols()); }
  int dual_dim() const { return static_cast<int>(vectors.rows()); }
  auto vector(int i) const { return vectors.col(i); }
};

/// Central projection of the Gale vectors onto the hyperplane <normal, x> = 1, expressed
/// in the coordinates left after deleting `dropped_axis` (the first axis where the normal
/// is nonzero). Point i is white iff <normal, g_i> > 0.
struct AffineGaleDiagram {
  MatrixQ points;
  std::vector<Color> colors;
  VectorQ normal;
  Index dropped_axis = 0;

  int size() const { return static_cast<int>(points.cols()); }
  IndexSet indices_of(Color c) const;
};

GaleTransform gale_transform(const PointConfiguration& p);

/// Uses `normal_hint` when given; otherwise the first small-integer vector (ordered by
/// max-norm, then lexicographically) that is not orthogonal to any Gale vector.
AffineGaleDiagram affine_diagram(const GaleTransform& g, const std::optional<VectorQ>& normal_hint = std::nullopt);

/// Linear functional on the Gale space whose sign on g_i equals the sign of
/// <normal, g_i> * (a . point_i + c): an affine split of the diagram lifted back.
VectorQ lift_affine_functional(const AffineGaleDiagram& diagram, const VectorQ& a, const Rational& c);

/// Every partition of the columns of `vectors` (k x m, any k >= 1, every k columns
/// independent) into the two open sides of a linear hyperplane, both sides non-empty.
/// Candidate normals are the normals of hyperplanes spanned by k-1 columns, tilted toward
/// every sign pattern on those columns. Sorted by positive-side mask.
std::vector<LinearSeparation> linear_separations(const MatrixQ& vectors);

/// Witness normal for the split (positive_side | rest) of the columns, if one exists.
std::optional<LinearSeparation> realize_separation(const MatrixQ& vectors, Mask positive_side);

/// All linear separations of D(P); dual dimension must be in 1..4.
std::vector<LinearSeparation> enumerate_separations(const GaleTransform& g);

/// Proper separations: sides of sizes floor(m/2) and ceil(m/2).
std::vector<LinearSeparation> proper_separations(const GaleTransform& g);

/// Checks the witness normal and returns (positive side, negative side) as a crossing pair.
CrossingPair separation_to_crossing(const GaleTransform& g, const LinearSeparation& s);

bool is_convex_position_gale(const GaleTransform& g);

/// Largest t such that every separation side holds at least t+1 vectors.
int neighborliness_gale(const GaleTransform& g);

/// `face` spans a face of conv(P) iff the origin is a strictly positive combination of
/// the Gale vectors outside it. Works in any dual dimension.
bool is_face_gale(const GaleTransform& g, const IndexSet& face);

/// Neighborliness from face tests on all subsets of size <= limit+1 (any dual dimension).
/// Returns min(t, limit) where t is the neighborliness.
int neighborliness_by_faces(const GaleTransform& g, int limit);

}  // namespace galecross
