#include "galecross/simplexcross.hpp"

#include <algorithm>

namespace galecross {
namespace {

void check_disjoint_indices(const PointConfiguration& p, const IndexSet& b, const IndexSet& c) {
  if (b.empty() || c.empty()) throw InputError("simplices need at least one vertex");
  Mask seen = 0;
  for (const IndexSet* side : {&b, &c})
    for (int i : *side) {
      if (i < 0 || i >= p.size()) throw InputError("vertex index out of range");
      if (seen >> i & 1) throw InputError("simplices share a vertex");
      seen |= Mask{1} << i;
    }
}

IndexSet sorted(IndexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

std::optional<CrossingPair> simplices_cross(const PointConfiguration& p, const IndexSet& b, const IndexSet& c) {
  check_disjoint_indices(p, b, c);
  const int d = p.dim();
  const auto nb = static_cast<Index>(b.size());
  const auto nc = static_cast<Index>(c.size());
  MatrixQ a = MatrixQ::Zero(d + 2, nb + nc);
  for (Index k = 0; k < nb; ++k) {
    a.col(k).head(d) = p.point(b[static_cast<std::size_t>(k)]);
    a(d, k) = 1;
  }
  for (Index k = 0; k < nc; ++k) {
    a.col(nb + k).head(d) = -p.point(c[static_cast<std::size_t>(k)]);
    a(d + 1, nb + k) = 1;
  }
  VectorQ rhs = VectorQ::Zero(d + 2);
  rhs(d) = 1;
  rhs(d + 1) = 1;
  const auto x = strict_feasible<Rational>(a, rhs);
  if (!x) return std::nullopt;
  VectorQ witness = VectorQ::Zero(d);
  for (Index k = 0; k < nb; ++k) witness += (*x)(k) * p.point(b[static_cast<std::size_t>(k)]);
  CrossingPair pair{sorted(b), sorted(c), std::move(witness)};
  canonicalize(pair);
  return pair;
}

LinearSeparation radon_partition(const PointConfiguration& p) {
  const int m = p.size();
  if (m != p.dim() + 2) throw InputError("radon_partition needs exactly d+2 points");
  if (!is_general_position(p)) throw InputError("radon_partition needs points in general position");
  std::optional<LinearSeparation> found;
  // Splits with point 0 on the first side; each unordered split is visited once.
  for (Mask first = 1; first < full_mask(m); first += 2) {
    const IndexSet b = from_mask(first), c = from_mask(full_mask(m) & ~first);
    if (!simplices_cross(p, b, c)) continue;
    if (found) throw InvariantError("more than one Radon partition crosses");
    found = LinearSeparation{b, c, VectorQ()};
  }
  if (!found) throw InvariantError("no Radon partition crosses");
  return *found;
}

CrossingPair extend_crossing(const PointConfiguration& p, const CrossingPair& base, const IndexSet& add_left,
                             const IndexSet& add_right) {
  const int d = p.dim();
  IndexSet left = base.left, right = base.right;
  left.insert(left.end(), add_left.begin(), add_left.end());
  right.insert(right.end(), add_right.begin(), add_right.end());
  check_disjoint_indices(p, left, right);
  if (static_cast<int>(base.left.size() + base.right.size()) < d + 2)
    throw InputError("extension needs a base pair with at least d+2 vertices");
  if (static_cast<int>(left.size()) > d || static_cast<int>(right.size()) > d)
    throw InputError("extended simplices may have at most d vertices");
  auto extended = simplices_cross(p, left, right);
  if (!extended) throw InvariantError("extension of a crossing pair does not cross");
  return *extended;
}

CrossingCount count_all_crossings(const PointConfiguration& p, int u, int v, bool keep_pairs) {
  const int m = p.size();
  if (u < 0 || v < 0 || u + v + 2 > m) throw InputError("count_all_crossings needs u, v >= 0 and u+v+2 <= n");
  CrossingCount out;
  for_each_combination(m, u + 1, [&](const IndexSet& b) {
    const Mask bm = to_mask(b);
    IndexSet rest;
    for (int i = 0; i < m; ++i)
      if (!(bm >> i & 1)) rest.push_back(i);
    for_each_combination(static_cast<int>(rest.size()), v + 1, [&](const IndexSet& pick) {
      IndexSet c;
      for (int k : pick) c.push_back(rest[static_cast<std::size_t>(k)]);
      if (u == v && c.front() < b.front()) return true;  // unordered: count once
      if (auto pair = simplices_cross(p, b, c)) {
        ++out.count;
        if (keep_pairs) out.pairs.push_back(std::move(*pair));
      }
      return true;
    });
    return true;
  });
  return out;
}

}  // namespace galecross
