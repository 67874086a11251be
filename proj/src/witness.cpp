#include "galecross/witness.hpp"

#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "galecross/gale.hpp"
#include "galecross/kfacets.hpp"
#include "galecross/simplexcross.hpp"

namespace galecross {
namespace {

using PairKey = std::pair<Mask, Mask>;
using PairMap = std::map<PairKey, CrossingPair>;

int ceil_half(int x) { return (x + 1) / 2; }

IndexSet to_global(const IndexSet& local, const IndexSet& sub) {
  IndexSet out;
  for (int i : local) out.push_back(sub[static_cast<std::size_t>(i)]);
  return out;
}

IndexSet complement(const IndexSet& s, int n) { return from_mask(full_mask(n) & ~to_mask(s)); }

void require_drawing(const PointConfiguration& p, int min_d) {
  const int d = p.dim();
  if (d < min_d) throw InputError("this regime needs d >= " + std::to_string(min_d));
  if (p.size() != 2 * d) throw InputError("a drawing of K_{2d}^d has exactly 2d vertices");
  if (!is_general_position(p)) throw InputError("vertices are not in general position");
}

// Every completion of `base` (sides inside the sub-configuration) to two d-vertex sets
// using `rest`; each is re-verified by extend_crossing.
void extend_all(const PointConfiguration& p, const CrossingPair& base, const IndexSet& rest, PairMap& out) {
  const int d = p.dim();
  const int to_left = d - static_cast<int>(base.left.size());
  const int to_right = d - static_cast<int>(base.right.size());
  if (to_left < 0 || to_right < 0 || to_left + to_right != static_cast<int>(rest.size())) return;
  for_each_combination(static_cast<int>(rest.size()), to_left, [&](const IndexSet& pick) {
    const Mask chosen = to_mask(pick);
    IndexSet add_left, add_right;
    for (int i = 0; i < static_cast<int>(rest.size()); ++i)
      ((chosen >> i & 1) ? add_left : add_right).push_back(rest[static_cast<std::size_t>(i)]);
    CrossingPair pair = extend_crossing(p, base, add_left, add_right);
    canonicalize(pair);
    out.emplace(pair.key(), std::move(pair));
    return true;
  });
}

// Maps a separation of D(V') to a crossing on global indices and checks it directly.
CrossingPair base_crossing(const PointConfiguration& p, const GaleTransform& g, const LinearSeparation& s,
                           const IndexSet& sub) {
  const CrossingPair local = separation_to_crossing(g, s);
  auto crossing = simplices_cross(p, to_global(local.left, sub), to_global(local.right, sub));
  if (!crossing) throw InvariantError("a separation of the Gale transform did not yield a crossing");
  return *crossing;
}

void finish(const PointConfiguration& p, WitnessReport& report, const std::vector<CrossingPair>& bases,
            const IndexSet& rest) {
  PairMap pairs;
  if (report.extension_factor == 0) {
    report.degenerate_extension = true;
    for (CrossingPair b : bases) {
      canonicalize(b);
      pairs.emplace(b.key(), std::move(b));
    }
    report.note = "extension binomial is 0 at d=" + std::to_string(report.d) +
                  "; pairs are the unextended crossings on V' and the bound check is skipped";
  } else {
    for (const auto& b : bases) extend_all(p, b, rest, pairs);
  }
  report.guaranteed_lower_bound = report.base_bound * report.extension_factor;
  for (auto& [key, pair] : pairs) report.pairs.push_back(std::move(pair));
}

LinearSeparation oriented_copy(const LinearSeparation& s) {
  if (!s.positive.empty() && s.positive.front() == 0) return s;
  LinearSeparation out;
  out.positive = s.negative;
  out.negative = s.positive;
  out.normal = -s.normal;
  return out;
}

// Shared tail of the nonconvex and t-neighborly regimes. `sub` lists V' (d+5 vertices);
// `small_side` (local mask) is one side of a separation of D(V') and becomes the black
// class. Every separation whose white part is a majority k-set of W is kept.
void colored_pipeline(const PointConfiguration& p, const IndexSet& sub, Mask small_side, WitnessReport& report) {
  const int d = p.dim();
  const GaleTransform g = gale_transform(p.subset(sub));
  const int m = g.size();
  const Mask all = full_mask(m);
  const auto seps = enumerate_separations(g);

  const LinearSeparation* isolating = nullptr;
  for (const auto& s : seps)
    if (s.positive_mask() == small_side || s.positive_mask() == (all & ~small_side)) isolating = &s;
  if (!isolating) throw InvariantError("no separation of D(V') has the expected small side");
  VectorQ normal = isolating->normal;
  if (isolating->positive_mask() == small_side) normal = -normal;

  const AffineGaleDiagram diagram = affine_diagram(g, normal);
  const IndexSet white = diagram.indices_of(Color::white);
  const Mask white_mask = to_mask(white);
  if (white_mask != (all & ~small_side)) throw InvariantError("affine diagram colors do not match the separation");

  PointSet3D w;
  for (int i : white) w.points.push_back(diagram.points.col(i));
  const auto majority = majority_k_sets(w);
  report.counted_points = w.points;

  std::map<Mask, std::vector<std::size_t>> by_white_part;
  for (std::size_t i = 0; i < seps.size(); ++i) {
    const Mask pos = seps[i].positive_mask();
    by_white_part[pos & white_mask].push_back(i);
    by_white_part[(all & ~pos) & white_mask].push_back(i);
  }

  std::set<std::size_t> chosen;
  for (Mask t : majority) {
    Mask local = 0;
    for (int j = 0; j < w.size(); ++j)
      if (t >> j & 1) local |= Mask{1} << white[static_cast<std::size_t>(j)];
    const auto it = by_white_part.find(local);
    if (it == by_white_part.end()) throw InvariantError("a majority k-set of W has no matching separation");
    chosen.insert(it->second.begin(), it->second.end());
  }

  std::vector<CrossingPair> bases;
  for (std::size_t i : chosen) bases.push_back(base_crossing(p, g, seps[i], sub));

  report.base_bound = majority.size();
  report.base_candidates = majority.size();
  report.base_separations = chosen.size();
  const int threshold = ceil_half(d + 3 - report.parameter.value_or(0));
  report.extension_factor = binomial(d - 5, d - threshold);
  finish(p, report, bases, complement(sub, p.size()));
}

IndexSet first_indices(int n) {
  IndexSet out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

}  // namespace

std::string to_string(Regime r) {
  switch (r) {
    case Regime::main: return "main";
    case Regime::nonconvex: return "nonconvex";
    case Regime::t_neighborly: return "t-neighborly";
    case Regime::highly_neighborly: return "highly-neighborly";
  }
  return "main";
}

Regime parse_regime(const std::string& name) {
  for (Regime r : {Regime::main, Regime::nonconvex, Regime::t_neighborly, Regime::highly_neighborly})
    if (to_string(r) == name) return r;
  throw InputError("unknown regime '" + name + "'");
}

WitnessReport main_witnesses(const PointConfiguration& p) {
  require_drawing(p, 6);
  const int d = p.dim();
  WitnessReport report;
  report.regime = Regime::main;
  report.d = d;
  report.sub_configuration = first_indices(d + 4);

  const GaleTransform g = gale_transform(p.subset(report.sub_configuration));
  const auto proper = proper_separations(g);
  if (proper.empty()) throw InvariantError("no proper separation of D(V')");
  VectorQ normal = proper.front().normal;
  if (proper.front().positive.size() < proper.front().negative.size()) normal = -normal;

  const AffineGaleDiagram diagram = affine_diagram(g, normal);
  ColoredPointSet2D r;
  for (int i = 0; i < diagram.size(); ++i) r.points.push_back(diagram.points.col(i));
  r.colors = diagram.colors;
  const auto lines = almost_balanced_directed_lines(r);

  const Mask all = full_mask(g.size());
  std::map<Mask, LinearSeparation> seps;
  for (const auto& [a, b] : lines) {
    const VectorQ& pa = r.points[static_cast<std::size_t>(a)];
    const VectorQ& pb = r.points[static_cast<std::size_t>(b)];
    const VectorQ mid = (pa + pb) / Rational(2);
    VectorQ dir = pb - pa;
    Mask expected = Mask{1} << a;  // A lands on the positive side after a counter-clockwise turn
    for (int q = 0; q < r.size(); ++q)
      if (q != a && q != b && orient2d(pa, pb, r.points[static_cast<std::size_t>(q)]) > 0) expected |= Mask{1} << q;

    // Tilt by eps toward the left normal until no point changes side except A and B.
    Rational eps = 1;
    VectorQ coef(2);
    Rational offset;
    for (;;) {
      const Rational tx = dir(0) - eps * dir(1), ty = dir(1) + eps * dir(0);
      coef << -ty, tx;
      offset = -(coef(0) * mid(0) + coef(1) * mid(1));
      Mask got = 0;
      bool clean = true;
      for (int q = 0; q < r.size(); ++q) {
        const int s = sign_of(coef(0) * r.points[static_cast<std::size_t>(q)](0) +
                              coef(1) * r.points[static_cast<std::size_t>(q)](1) + offset);
        if (s == 0) clean = false;
        if (s > 0) got |= Mask{1} << q;
      }
      if (clean && got == expected) break;
      eps /= 2;
      if (eps < Rational(1, 1 << 30)) throw InvariantError("midpoint rotation did not settle");
    }

    Mask side = 0;
    for (int q = 0; q < r.size(); ++q) {
      const bool in_plus = expected >> q & 1;
      if (in_plus == (r.colors[static_cast<std::size_t>(q)] == Color::white)) side |= Mask{1} << q;
    }
    LinearSeparation s;
    s.normal = lift_affine_functional(diagram, coef, offset);
    s.positive = from_mask(side);
    s.negative = from_mask(all & ~side);
    s = oriented_copy(s);
    if (s.min_side() < (d + 2) / 2) throw InvariantError("rotated partition has a side below floor((d+2)/2)");
    seps.emplace(s.positive_mask(), std::move(s));
  }

  std::vector<CrossingPair> bases;
  for (const auto& [mask, s] : seps) bases.push_back(base_crossing(p, g, s, report.sub_configuration));
  report.base_candidates = lines.size();
  report.base_separations = seps.size();
  report.base_bound = static_cast<std::uint64_t>((d + 4) / 2);
  report.extension_factor = binomial(d - 4, d - (d + 2) / 2);
  finish(p, report, bases, complement(report.sub_configuration, p.size()));
  return report;
}

WitnessReport nonconvex_witnesses(const PointConfiguration& p, std::optional<int> interior_index) {
  require_drawing(p, 7);
  if (is_convex_position(p)) throw InputError("vertices are in convex position; the nonconvex regime does not apply");
  const int d = p.dim();

  int q = -1;
  std::optional<IndexSet> support;
  if (interior_index) {
    if (*interior_index < 0 || *interior_index >= p.size()) throw InputError("interior index out of range");
    q = *interior_index;
    support = hull_support(p, q);
    if (!support) throw InputError("vertex " + p.label(q) + " is not inside the hull of the others");
  } else {
    for (int i = 0; i < p.size() && !support; ++i)
      if ((support = hull_support(p, i))) q = i;
  }
  if (!support || static_cast<int>(support->size()) > d + 1)
    throw InvariantError("interior vertex without a support of at most d+1 vertices");

  Mask in_sub = to_mask(*support) | Mask{1} << q;
  for (int i = 0; i < p.size() && popcount(in_sub) < d + 5; ++i) in_sub |= Mask{1} << i;

  WitnessReport report;
  report.regime = Regime::nonconvex;
  report.d = d;
  report.sub_configuration = from_mask(in_sub);
  const auto& sub = report.sub_configuration;
  const int local_q = static_cast<int>(std::find(sub.begin(), sub.end(), q) - sub.begin());
  colored_pipeline(p, sub, Mask{1} << local_q, report);
  report.note += (report.note.empty() ? "" : "; ") + std::string("interior vertex ") + p.label(q);
  return report;
}

WitnessReport t_neighborly_witnesses(const PointConfiguration& p, int t) {
  require_drawing(p, 7);
  const int d = p.dim();
  if (t < 1) throw InputError("t must be positive");
  if (!is_convex_position(p)) throw InputError("vertices are not in convex position");
  const GaleTransform g = gale_transform(p);
  const int nb = neighborliness_by_faces(g, t + 1);
  if (nb != t) throw InputError("configuration is not exactly " + std::to_string(t) + "-neighborly");

  IndexSet small;
  for_each_combination(p.size(), t + 1, [&](const IndexSet& s) {
    if (is_face_gale(g, s)) return true;
    small = s;
    return false;
  });

  // Terminal hyperplane of the rotation: d-2 vertices X outside T whose removal leaves
  // d+2 vertices with Radon partition (T, rest).
  const IndexSet outside = complement(small, p.size());
  IndexSet x_found, c_side;
  for_each_combination(static_cast<int>(outside.size()), d - 2, [&](const IndexSet& pick) {
    const IndexSet x = to_global(pick, outside);
    const IndexSet y = complement(x, p.size());
    const GaleTransform line = gale_transform(p.subset(y));
    IndexSet pos, neg;
    for (int i = 0; i < line.size(); ++i) {
      const int s = sign_of(line.vectors(0, i));
      if (s == 0) return true;
      (s > 0 ? pos : neg).push_back(y[static_cast<std::size_t>(i)]);
    }
    if (pos == small) c_side = neg;
    else if (neg == small) c_side = pos;
    else return true;
    x_found = x;
    return false;
  });
  if (x_found.empty()) throw InvariantError("no (d-2)-subset completes the rotation");

  IndexSet c_prime = c_side;
  c_prime.insert(c_prime.end(), x_found.begin(), x_found.begin() + 3);
  std::sort(c_prime.begin(), c_prime.end());
  if (!simplices_cross(p, small, c_prime)) throw InvariantError("augmented crossing failed the direct check");

  WitnessReport report;
  report.regime = Regime::t_neighborly;
  report.d = d;
  report.parameter = t;
  report.sub_configuration = from_mask(to_mask(small) | to_mask(c_prime));
  Mask local_small = 0;
  for (std::size_t i = 0; i < report.sub_configuration.size(); ++i)
    if (to_mask(small) >> report.sub_configuration[i] & 1) local_small |= Mask{1} << i;
  colored_pipeline(p, report.sub_configuration, local_small, report);
  return report;
}

WitnessReport highly_neighborly_witnesses(const PointConfiguration& p, int t_prime) {
  require_drawing(p, 6);
  const int d = p.dim();
  if (t_prime < 0) throw InputError("t' must be non-negative");
  const int k0 = d / 2 - t_prime;
  if (k0 < 1) throw InputError("floor(d/2) - t' must be at least 1");
  if (!is_convex_position(p)) throw InputError("vertices are not in convex position");
  if (neighborliness_by_faces(gale_transform(p), k0) < k0)
    throw InputError("configuration is not " + std::to_string(k0) + "-neighborly");

  WitnessReport report;
  report.regime = Regime::highly_neighborly;
  report.d = d;
  report.parameter = t_prime;
  report.sub_configuration = first_indices(d + 5);
  const GaleTransform g = gale_transform(p.subset(report.sub_configuration));
  const AffineGaleDiagram diagram = affine_diagram(g);
  const int m = g.size();
  const Mask all = full_mask(m);
  const Mask white = to_mask(diagram.indices_of(Color::white));

  PointSet3D cloud;
  for (int i = 0; i < m; ++i) cloud.points.push_back(diagram.points.col(i));
  const int limit = (d + 5 + 3) / 4;
  report.counted_points = cloud.points;

  std::map<Mask, LinearSeparation> seps;
  for (Mask t : enumerate_k_sets(cloud)) {
    if (popcount(t) > limit) continue;
    ++report.base_candidates;
    const Mask side = (white & t) | (all & ~white & ~t);
    auto s = realize_separation(g.vectors, side);
    if (!s) throw InvariantError("a k-set of the diagram has no matching separation");
    LinearSeparation o = oriented_copy(*s);
    if (o.min_side() < k0 + 1) throw InvariantError("separation side smaller than the neighborliness allows");
    seps.emplace(o.positive_mask(), std::move(o));
  }

  std::vector<CrossingPair> bases;
  for (const auto& [mask, s] : seps) bases.push_back(base_crossing(p, g, s, report.sub_configuration));
  report.base_bound = report.base_candidates;
  report.base_separations = seps.size();
  report.extension_factor = binomial(d - 5, d - d / 2 + t_prime - 1);
  finish(p, report, bases, complement(report.sub_configuration, p.size()));
  return report;
}

bool verify_report(const PointConfiguration& p, const WitnessReport& w) {
  std::set<PairKey> seen;
  const Mask all = full_mask(p.size());
  for (const auto& pair : w.pairs) {
    const Mask a = to_mask(pair.left), b = to_mask(pair.right);
    if (pair.left.empty() || pair.right.empty() || (a & b) || ((a | b) & ~all)) return false;
    if (!seen.insert(pair.key()).second) return false;
    if (!simplices_cross(p, pair.left, pair.right)) return false;
  }
  return w.degenerate_extension || w.pairs.size() >= w.guaranteed_lower_bound;
}

std::string report_to_json(const PointConfiguration& p, const WitnessReport& w) {
  auto labels = [&](const IndexSet& s) {
    nlohmann::json out = nlohmann::json::array();
    for (int i : s) out.push_back(p.label(i));
    return out;
  };
  nlohmann::json doc;
  doc["regime"] = to_string(w.regime);
  doc["d"] = w.d;
  if (w.parameter) doc[w.regime == Regime::highly_neighborly ? "t_prime" : "t"] = *w.parameter;
  doc["sub_configuration"] = labels(w.sub_configuration);
  doc["base_candidates"] = w.base_candidates;
  doc["base_separations"] = w.base_separations;
  doc["base_bound"] = w.base_bound;
  doc["extension_factor"] = w.extension_factor;
  doc["guaranteed_lower_bound"] = w.guaranteed_lower_bound;
  doc["degenerate_extension"] = w.degenerate_extension;
  doc["pair_count"] = w.pairs.size();
  if (!w.note.empty()) doc["note"] = w.note;
  doc["pairs"] = nlohmann::json::array();
  for (const auto& pair : w.pairs) doc["pairs"].push_back({labels(pair.left), labels(pair.right)});
  return doc.dump(2) + "\n";
}

}  // namespace galecross
