#include "galecross/kfacets.hpp"

#include <algorithm>
#include <sstream>

#include "galecross/gale.hpp"

namespace galecross {
namespace {

void require_general_2d(const ColoredPointSet2D& r) {
  if (r.colors.size() != r.points.size()) throw InputError("every point needs a color");
  for (const auto& q : r.points)
    if (q.size() != 2) throw InputError("planar point sets need 2 coordinates per point");
  for_each_combination(r.size(), 3, [&](const IndexSet& t) {
    if (orient2d(r.points[static_cast<std::size_t>(t[0])], r.points[static_cast<std::size_t>(t[1])],
                 r.points[static_cast<std::size_t>(t[2])]) == 0)
      throw InputError("three collinear points");
    return true;
  });
}

void require_3d(const PointSet3D& s) {
  if (s.size() < 4) throw InputError("3D facet statistics need at least 4 points");
  for (const auto& q : s.points)
    if (q.size() != 3) throw InputError("3D point sets need 3 coordinates per point");
}

// Counts white and black points strictly left of a -> b.
std::pair<int, int> left_counts(const ColoredPointSet2D& r, int a, int b) {
  int white = 0, black = 0;
  for (int q = 0; q < r.size(); ++q) {
    if (q == a || q == b) continue;
    if (orient2d(r.points[static_cast<std::size_t>(a)], r.points[static_cast<std::size_t>(b)],
                 r.points[static_cast<std::size_t>(q)]) > 0)
      (r.colors[static_cast<std::size_t>(q)] == Color::white ? white : black)++;
  }
  return {white, black};
}

}  // namespace

int ColoredPointSet2D::count(Color c) const {
  int n = 0;
  for (Color x : colors) n += x == c;
  return n;
}

int orient2d(const VectorQ& a, const VectorQ& b, const VectorQ& q) {
  return sign_of((b(0) - a(0)) * (q(1) - a(1)) - (b(1) - a(1)) * (q(0) - a(0)));
}

int orient3d(const VectorQ& a, const VectorQ& b, const VectorQ& c, const VectorQ& q) {
  const Rational u0 = b(0) - a(0), u1 = b(1) - a(1), u2 = b(2) - a(2);
  const Rational v0 = c(0) - a(0), v1 = c(1) - a(1), v2 = c(2) - a(2);
  const Rational w0 = q(0) - a(0), w1 = q(1) - a(1), w2 = q(2) - a(2);
  return sign_of(u0 * (v1 * w2 - v2 * w1) - u1 * (v0 * w2 - v2 * w0) + u2 * (v0 * w1 - v1 * w0));
}

std::vector<std::pair<int, int>> balanced_lines(const ColoredPointSet2D& r) {
  require_general_2d(r);
  if (r.size() % 2 != 0) throw InputError("balanced lines exist only for an even number of points");
  if (r.count(Color::white) != r.count(Color::black)) throw InputError("balanced lines need equally many white and black points");
  std::vector<std::pair<int, int>> out;
  for (int w = 0; w < r.size(); ++w) {
    if (r.colors[static_cast<std::size_t>(w)] != Color::white) continue;
    for (int b = 0; b < r.size(); ++b) {
      if (r.colors[static_cast<std::size_t>(b)] != Color::black) continue;
      const auto [white, black] = left_counts(r, w, b);
      // With equal class sizes a balanced left side forces a balanced right side.
      if (white == black) out.emplace_back(w, b);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> almost_balanced_directed_lines(const ColoredPointSet2D& r) {
  require_general_2d(r);
  const int imbalance = r.count(Color::white) - r.count(Color::black);
  if (imbalance < -1 || imbalance > 1) throw InputError("color classes differ by more than one point");
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < r.size(); ++a)
    for (int b = 0; b < r.size(); ++b) {
      if (a == b || r.colors[static_cast<std::size_t>(a)] == r.colors[static_cast<std::size_t>(b)]) continue;
      const auto [white, black] = left_counts(r, a, b);
      if (white == black) out.emplace_back(a, b);
    }
  return out;
}

std::vector<std::uint64_t> j_facets(const PointSet3D& s) {
  require_3d(s);
  const int n = s.size();
  std::vector<std::uint64_t> E(static_cast<std::size_t>(n - 2), 0);
  for_each_combination(n, 3, [&](const IndexSet& t) {
    const auto& a = s.points[static_cast<std::size_t>(t[0])];
    const auto& b = s.points[static_cast<std::size_t>(t[1])];
    const auto& c = s.points[static_cast<std::size_t>(t[2])];
    int above = 0, below = 0;
    for (int q = 0; q < n; ++q) {
      if (q == t[0] || q == t[1] || q == t[2]) continue;
      const int o = orient3d(a, b, c, s.points[static_cast<std::size_t>(q)]);
      if (o == 0) throw InputError("four coplanar points");
      (o > 0 ? above : below)++;
    }
    ++E[static_cast<std::size_t>(above)];
    ++E[static_cast<std::size_t>(below)];
    return true;
  });
  return E;
}

std::vector<Mask> enumerate_k_sets(const PointSet3D& s) {
  require_3d(s);
  MatrixQ lifted(4, s.size());
  for (int i = 0; i < s.size(); ++i) {
    lifted.col(i).head(3) = s.points[static_cast<std::size_t>(i)];
    lifted(3, i) = 1;
  }
  std::vector<Mask> out;
  try {
    for (const auto& sep : linear_separations(lifted)) {
      out.push_back(sep.positive_mask());
      out.push_back(to_mask(sep.negative));
    }
  } catch (const InputError&) {
    throw InputError("four coplanar points");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> k_sets_direct(const PointSet3D& s) {
  std::vector<std::uint64_t> e(static_cast<std::size_t>(s.size() + 1), 0);
  for (Mask t : enumerate_k_sets(s)) ++e[static_cast<std::size_t>(popcount(t))];
  return e;
}

FacetStats facet_stats(const PointSet3D& s) { return FacetStats{j_facets(s), k_sets_direct(s)}; }

bool AndrzejakReport::all_hold() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return !checks.empty();
}

AndrzejakReport andrzejak_check(const PointSet3D& s) {
  AndrzejakReport report;
  report.s = s.size();
  report.stats = facet_stats(s);
  const auto& E = report.stats.E;
  const int n = s.size();
  auto E_at = [&](int j) { return Rational(static_cast<unsigned long long>(E[static_cast<std::size_t>(j)])); };
  for (int k = 1; k <= n - 1; ++k) {
    IdentityCheck c;
    c.k = k;
    c.e_k = report.stats.e[static_cast<std::size_t>(k)];
    if (k == 1)
      c.predicted = E_at(0) / 2 + 2;
    else if (k == n - 1)
      c.predicted = E_at(n - 3) / 2 + 2;
    else
      c.predicted = (E_at(k - 1) + E_at(k - 2)) / 2 + 2;
    c.holds = c.predicted == Rational(static_cast<unsigned long long>(c.e_k));
    report.checks.push_back(std::move(c));
  }
  return report;
}

HalvingStats halving_stats(const PointSet3D& s) {
  const auto E = j_facets(s);
  const int n = s.size();
  HalvingStats h;
  h.odd = n % 2 == 1;
  for (int j = 0; j <= n - 3; ++j) {
    const int imbalance = std::abs(2 * j - (n - 3));
    if (h.odd ? imbalance == 0 : imbalance <= 1) h.count += E[static_cast<std::size_t>(j)];
  }
  h.bound = static_cast<std::uint64_t>((n / 2) * (n / 2));
  return h;
}

std::uint64_t leq_facet_count(const PointSet3D& s, int j) {
  if (j < 0 || 4 * j >= s.size()) throw InputError("(<= j)-facet count needs 0 <= j < s/4");
  const auto E = j_facets(s);
  std::uint64_t total = 0;
  for (int i = 0; i <= j; ++i) total += E[static_cast<std::size_t>(i)];
  return total;
}

std::uint64_t leq_k_set_count(const PointSet3D& s, int k) {
  if (k < 1 || k > s.size() - 1) throw InputError("(<= k)-set count needs 1 <= k <= s-1");
  const auto e = k_sets_direct(s);
  std::uint64_t total = 0;
  for (int i = 1; i <= k; ++i) total += e[static_cast<std::size_t>(i)];
  return total;
}

std::vector<Mask> majority_k_sets(const PointSet3D& s) {
  const int n = s.size();
  const int threshold = n / 2;  // ceil((s-1)/2)
  std::vector<Mask> out;
  for (Mask t : enumerate_k_sets(s)) {
    const int k = popcount(t);
    if (std::min(k, n - k) >= threshold) out.push_back(t);
  }
  return out;
}

std::uint64_t majority_k_set_count(const PointSet3D& s) { return majority_k_sets(s).size(); }

std::string stats_csv(int s, const FacetStats& stats) {
  std::ostringstream out;
  out << "s,j_or_k,E_j,e_k\n";
  for (int i = 0; i <= s; ++i) {
    out << s << ',' << i << ',';
    if (i < static_cast<int>(stats.E.size())) out << stats.E[static_cast<std::size_t>(i)];
    out << ',';
    if (i >= 1 && i <= s - 1 && i < static_cast<int>(stats.e.size())) out << stats.e[static_cast<std::size_t>(i)];
    out << '\n';
  }
  return out.str();
}

std::string identity_csv(const AndrzejakReport& report) {
  std::ostringstream out;
  out << "s,k,e_k,predicted,holds\n";
  for (const auto& c : report.checks)
    out << report.s << ',' << c.k << ',' << c.e_k << ',' << to_string(c.predicted) << ',' << (c.holds ? "true" : "false")
        << '\n';
  return out.str();
}

}  // namespace galecross
