#include "galecross/pointconfig.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "json.hpp"

namespace galecross {
namespace {

// Unbiased draw from [-bound, bound]; avoids std::uniform_int_distribution, whose
// output differs between standard library implementations.
std::int64_t draw_coordinate(std::mt19937_64& rng, std::int64_t bound) {
  const std::uint64_t range = 2 * static_cast<std::uint64_t>(bound) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::int64_t>(x % range) - bound;
}

void require_index(const PointConfiguration& p, int i) {
  if (i < 0 || i >= p.size()) throw InputError("point index " + std::to_string(i) + " out of range");
}

}  // namespace

PointConfiguration::PointConfiguration(int dim, std::vector<VectorQ> points, std::vector<std::string> labels)
    : dim_(dim), points_(std::move(points)), labels_(std::move(labels)) {
  if (dim_ < 1) throw InputError("dimension must be positive");
  for (const auto& q : points_)
    if (q.size() != dim_) throw InputError("point of dimension " + std::to_string(q.size()) + " in a " +
                                           std::to_string(dim_) + "-dimensional configuration");
  if (labels_.empty())
    for (std::size_t i = 0; i < points_.size(); ++i) labels_.push_back("v" + std::to_string(i + 1));
  if (labels_.size() != points_.size()) throw InputError("label count does not match point count");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size())
    throw InputError("labels must be distinct");
}

MatrixQ PointConfiguration::lifted() const {
  MatrixQ m(dim_ + 1, size());
  for (int i = 0; i < size(); ++i) {
    m.col(i).head(dim_) = points_[static_cast<std::size_t>(i)];
    m(dim_, i) = 1;
  }
  return m;
}

MatrixQ PointConfiguration::lifted(const IndexSet& indices) const {
  MatrixQ m(dim_ + 1, static_cast<Index>(indices.size()));
  for (std::size_t k = 0; k < indices.size(); ++k) {
    m.col(static_cast<Index>(k)).head(dim_) = point(indices[k]);
    m(dim_, static_cast<Index>(k)) = 1;
  }
  return m;
}

PointConfiguration PointConfiguration::subset(const IndexSet& indices) const {
  std::vector<VectorQ> pts;
  std::vector<std::string> lbl;
  for (int i : indices) {
    require_index(*this, i);
    pts.push_back(point(i));
    lbl.push_back(label(i));
  }
  return PointConfiguration(dim_, std::move(pts), std::move(lbl));
}

PointConfiguration PointConfiguration::with_point(int index, VectorQ replacement) const {
  require_index(*this, index);
  auto pts = points_;
  pts[static_cast<std::size_t>(index)] = std::move(replacement);
  return PointConfiguration(dim_, std::move(pts), labels_);
}

bool is_general_position(const PointConfiguration& p) {
  const int d = p.dim();
  const MatrixQ lifted = p.lifted();
  // Up to d+1 points are in general position iff affinely independent.
  if (p.size() <= d + 1) return rank(lifted) == p.size();
  bool general = true;
  for_each_combination(p.size(), d + 1, [&](const IndexSet& s) {
    MatrixQ sub(d + 1, d + 1);
    for (int k = 0; k <= d; ++k) sub.col(k) = lifted.col(s[static_cast<std::size_t>(k)]);
    general = sign_of(determinant(sub)) != 0;
    return general;
  });
  return general;
}

bool is_convex_position(const PointConfiguration& p) {
  if (p.size() < p.dim() + 2) throw InputError("convex position needs at least d+2 points");
  // In general position a point inside the hull of the others is interior to it, so a
  // strictly positive combination of all the others exists.
  const MatrixQ lifted = p.lifted();
  for (int i = 0; i < p.size(); ++i) {
    MatrixQ others(lifted.rows(), lifted.cols() - 1);
    for (int j = 0, k = 0; j < p.size(); ++j)
      if (j != i) others.col(k++) = lifted.col(j);
    if (strict_feasible<Rational>(others, lifted.col(i))) return false;
  }
  return true;
}

std::optional<IndexSet> hull_support(const PointConfiguration& p, int index) {
  require_index(p, index);
  IndexSet others;
  for (int j = 0; j < p.size(); ++j)
    if (j != index) others.push_back(j);
  const auto x = nonneg_feasible<Rational>(p.lifted(others), p.lifted({index}).col(0));
  if (!x) return std::nullopt;
  IndexSet support;
  for (std::size_t k = 0; k < others.size(); ++k)
    if (sign_of((*x)(static_cast<Index>(k))) > 0) support.push_back(others[k]);
  return support;
}

bool is_face(const PointConfiguration& p, const IndexSet& face) {
  IndexSet rest;
  const Mask in_face = to_mask(face);
  for (int j = 0; j < p.size(); ++j)
    if (!(in_face >> j & 1)) rest.push_back(j);
  if (face.empty() || rest.empty()) throw InputError("face test needs a proper non-empty vertex subset");

  // Unknowns (a+, a-, mu): sum (a+ - a-) p_face = sum mu p_rest, sum (a+ - a-) = 1, sum mu = 1.
  const int d = p.dim();
  const auto f = static_cast<Index>(face.size());
  const auto r = static_cast<Index>(rest.size());
  MatrixQ a = MatrixQ::Zero(d + 2, 2 * f + r);
  for (Index k = 0; k < f; ++k) {
    const VectorQ& q = p.point(face[static_cast<std::size_t>(k)]);
    a.col(k).head(d) = q;
    a.col(f + k).head(d) = -q;
    a(d, k) = 1;
    a(d, f + k) = -1;
  }
  for (Index k = 0; k < r; ++k) {
    a.col(2 * f + k).head(d) = -p.point(rest[static_cast<std::size_t>(k)]);
    a(d + 1, 2 * f + k) = 1;
  }
  VectorQ b = VectorQ::Zero(d + 2);
  b(d) = 1;
  b(d + 1) = 1;
  return !nonneg_feasible<Rational>(a, b).has_value();
}

PointConfiguration gen_moment_curve(int d, const std::vector<Rational>& ts) {
  if (d < 1) throw InputError("dimension must be positive");
  if (std::set<Rational>(ts.begin(), ts.end()).size() != ts.size())
    throw InputError("moment curve parameters must be distinct");
  std::vector<VectorQ> pts;
  for (const auto& t : ts) {
    VectorQ q(d);
    Rational power = 1;
    for (int k = 0; k < d; ++k) {
      power *= t;
      q(k) = power;
    }
    pts.push_back(std::move(q));
  }
  return PointConfiguration(d, std::move(pts));
}

PointConfiguration gen_random(int d, int n, std::uint64_t seed, std::int64_t bound) {
  if (d < 1 || n < d + 2) throw InputError("gen_random needs d >= 1 and n >= d+2");
  if (bound < 1) throw InputError("coordinate bound must be positive");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    std::vector<VectorQ> pts;
    for (int i = 0; i < n; ++i) {
      VectorQ q(d);
      for (int k = 0; k < d; ++k) q(k) = Rational(draw_coordinate(rng, bound));
      pts.push_back(std::move(q));
    }
    PointConfiguration p(d, std::move(pts));
    if (is_general_position(p)) return p;
  }
  throw InputError("no general-position draw within " + std::to_string(kMaxRedraws) + " attempts; raise --bound");
}

PointConfiguration plant_interior(const PointConfiguration& p, int target, const IndexSet& support,
                                  const std::vector<Rational>& weights) {
  const int d = p.dim();
  require_index(p, target);
  if (static_cast<int>(support.size()) != d + 1 || weights.size() != support.size())
    throw InputError("plant_interior needs d+1 support points and d+1 weights");
  for (int i : support) {
    require_index(p, i);
    if (i == target) throw InputError("support may not contain the target point");
  }
  if (std::set<int>(support.begin(), support.end()).size() != support.size())
    throw InputError("support indices must be distinct");
  Rational total = 0;
  for (const auto& w : weights) {
    if (sign_of(w) <= 0) throw InputError("weights must be strictly positive");
    total += w;
  }
  if (total != 1) throw InputError("weights must sum to 1");
  if (!is_general_position(p)) throw InputError("plant_interior needs a general-position input");

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(target));
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    std::vector<Rational> w = weights;
    if (attempt > 0) {
      // Multiplicative jitter in (1/2, 3/2) scaled down by the attempt number keeps every
      // weight positive, so the planted point stays strictly inside the support simplex.
      const Rational step = Rational(1, 2 * (attempt + 1));
      Rational sum = 0;
      for (auto& wk : w) {
        wk *= 1 + step * Rational(draw_coordinate(rng, 1000), 1000);
        sum += wk;
      }
      for (auto& wk : w) wk /= sum;
    }
    VectorQ planted = VectorQ::Zero(d);
    for (std::size_t k = 0; k < support.size(); ++k) planted += w[k] * p.point(support[k]);
    auto q = p.with_point(target, std::move(planted));
    if (is_general_position(q)) return q;
  }
  throw InputError("could not restore general position after planting");
}

PointConfiguration gen_planted(int d, int n, std::uint64_t seed, std::int64_t bound) {
  if (n < d + 2) throw InputError("gen_planted needs n >= d+2");
  const auto base = gen_random(d, n, seed, bound);
  IndexSet support;
  for (int i = 0; i <= d; ++i) support.push_back(i);
  return plant_interior(base, d + 1, support, std::vector<Rational>(static_cast<std::size_t>(d + 1), Rational(1, d + 1)));
}

PointConfiguration gen_product(int d, std::uint64_t seed) {
  if (d < 2) throw InputError("gen_product needs d >= 2");
  constexpr std::int64_t kScale = 100;
  constexpr std::int64_t kJitter = 5;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    std::vector<VectorQ> pts;
    for (int level = 0; level < 2; ++level)
      for (int corner = 0; corner < d; ++corner) {
        VectorQ q = VectorQ::Zero(d);
        if (corner > 0) q(corner - 1) = kScale;
        q(d - 1) = level * kScale;
        for (int k = 0; k < d; ++k) q(k) += Rational(draw_coordinate(rng, kJitter));
        pts.push_back(std::move(q));
      }
    PointConfiguration p(d, std::move(pts));
    if (is_general_position(p)) return p;
  }
  throw InputError("no general-position perturbation of the prism found");
}

PointConfiguration gen_bipyramid(int d, std::uint64_t seed) {
  if (d < 3) throw InputError("gen_bipyramid needs d >= 3");
  constexpr std::int64_t kJitter = 5;
  constexpr std::int64_t kHeight = 1000;
  const int ring = 2 * d - 2;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    std::vector<VectorQ> pts;
    VectorQ center = VectorQ::Zero(d);
    for (int t = 1; t <= ring; ++t) {
      VectorQ q(d);
      Rational power = 1;
      for (int k = 0; k < d - 1; ++k) q(k) = power *= t;
      q(d - 1) = Rational(draw_coordinate(rng, kJitter));
      center.head(d - 1) += q.head(d - 1) / Rational(ring);
      pts.push_back(std::move(q));
    }
    // |mean jitter| <= kJitter < kHeight, so the apex segment meets the hull of the ring.
    // Apexes are nudged off the common vertical axis; an exact axis through the barycenter
    // can be affinely dependent with d-1 ring points regardless of the jitter.
    for (int sign : {1, -1}) {
      VectorQ apex = center;
      for (int k = 0; k < d - 1; ++k) apex(k) += Rational(draw_coordinate(rng, kJitter), 1000);
      apex(d - 1) = sign * kHeight;
      pts.push_back(std::move(apex));
    }
    PointConfiguration p(d, std::move(pts));
    if (is_general_position(p)) return p;
  }
  throw InputError("no general-position bipyramid found");
}

PointConfiguration load_config(const std::string& document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed configuration document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("points"))
    throw InputError("configuration document needs \"dimension\" and \"points\"");
  if (!doc["dimension"].is_number_integer()) throw InputError("\"dimension\" must be an integer");
  const int d = doc["dimension"].get<int>();
  if (!doc["points"].is_array()) throw InputError("\"points\" must be an array");
  std::vector<VectorQ> pts;
  for (const auto& row : doc["points"]) {
    if (!row.is_array()) throw InputError("every point must be an array of rational strings");
    if (static_cast<int>(row.size()) != d)
      throw InputError("point " + std::to_string(pts.size() + 1) + " has " + std::to_string(row.size()) +
                       " coordinates, expected " + std::to_string(d));
    VectorQ q(d);
    for (int k = 0; k < d; ++k) {
      const auto& cell = row[static_cast<std::size_t>(k)];
      if (cell.is_string())
        q(k) = parse_rational(cell.get<std::string>());
      else if (cell.is_number_integer())
        q(k) = Rational(cell.get<std::int64_t>());
      else
        throw InputError("coordinates must be rational strings");
    }
    pts.push_back(std::move(q));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw InputError("\"labels\" must be an array");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw InputError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return PointConfiguration(d, std::move(pts), std::move(labels));
}

std::string save_config(const PointConfiguration& p) {
  nlohmann::json doc;
  doc["dimension"] = p.dim();
  doc["labels"] = p.labels();
  auto rows = nlohmann::json::array();
  for (const auto& q : p.points()) {
    auto row = nlohmann::json::array();
    for (Index k = 0; k < q.size(); ++k) row.push_back(to_string(q(k)));
    rows.push_back(std::move(row));
  }
  doc["points"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace galecross
