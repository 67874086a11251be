#include "galecross/gale.hpp"

#include <map>

namespace galecross {
namespace {

Rational dot(const VectorQ& a, const Eigen::Ref<const VectorQ>& b) {
  Rational s = 0;
  for (Index k = 0; k < a.size(); ++k) s += a(k) * b(k);
  return s;
}

bool orthogonal_to_some(const MatrixQ& vectors, const VectorQ& w) {
  for (Index i = 0; i < vectors.cols(); ++i)
    if (sign_of(dot(w, vectors.col(i))) == 0) return true;
  return false;
}

// Small-integer candidates ordered by max-norm, then lexicographically in the digit
// order 0, 1, -1, 2, -2, ...
std::optional<VectorQ> search_normal(const MatrixQ& vectors) {
  const auto k = vectors.rows();
  for (int radius = 1; radius <= 64; ++radius) {
    std::vector<int> digits{0};
    for (int v = 1; v <= radius; ++v) {
      digits.push_back(v);
      digits.push_back(-v);
    }
    std::vector<std::size_t> odometer(static_cast<std::size_t>(k), 0);
    for (;;) {
      bool on_shell = false;
      VectorQ w(k);
      for (Index j = 0; j < k; ++j) {
        const int v = digits[odometer[static_cast<std::size_t>(j)]];
        on_shell = on_shell || std::abs(v) == radius;
        w(j) = v;
      }
      if (on_shell && !orthogonal_to_some(vectors, w)) return w;
      Index j = k - 1;
      while (j >= 0 && ++odometer[static_cast<std::size_t>(j)] == digits.size()) odometer[static_cast<std::size_t>(j--)] = 0;
      if (j < 0) break;
    }
  }
  return std::nullopt;
}

LinearSeparation oriented(Mask positive, Mask all, VectorQ normal) {
  LinearSeparation s;
  if (!(positive & 1)) {
    positive = all & ~positive;
    normal = -normal;
  }
  s.positive = from_mask(positive);
  s.negative = from_mask(all & ~positive);
  s.normal = std::move(normal);
  return s;
}

}  // namespace

IndexSet AffineGaleDiagram::indices_of(Color c) const {
  IndexSet out;
  for (int i = 0; i < size(); ++i)
    if (colors[static_cast<std::size_t>(i)] == c) out.push_back(i);
  return out;
}

GaleTransform gale_transform(const PointConfiguration& p) {
  const int d = p.dim();
  const int m = p.size();
  if (m <= d + 1) throw InputError("Gale transform needs more than d+1 points");
  const MatrixQ lifted = p.lifted();
  const auto basis = nullspace_basis(lifted);
  if (static_cast<int>(basis.size()) != m - d - 1)
    throw InputError("configuration does not affinely span Q^" + std::to_string(d));
  MatrixQ vectors(m - d - 1, m);
  for (std::size_t r = 0; r < basis.size(); ++r) vectors.row(static_cast<Index>(r)) = basis[r].transpose();
  return GaleTransform{p, std::move(vectors)};
}

AffineGaleDiagram affine_diagram(const GaleTransform& g, const std::optional<VectorQ>& normal_hint) {
  const auto k = g.vectors.rows();
  VectorQ w;
  if (normal_hint) {
    w = *normal_hint;
    if (w.size() != k) throw InputError("projection normal has the wrong dimension");
    if (orthogonal_to_some(g.vectors, w))
      throw InputError("projection hyperplane is parallel to a Gale vector (or the normal is zero)");
  } else {
    auto found = search_normal(g.vectors);
    if (!found) throw InputError("no projection normal found; is some Gale vector zero?");
    w = std::move(*found);
  }

  AffineGaleDiagram out;
  out.dropped_axis = 0;
  while (sign_of(w(out.dropped_axis)) == 0) ++out.dropped_axis;
  out.points = MatrixQ(k - 1, g.size());
  for (int i = 0; i < g.size(); ++i) {
    const Rational scale = dot(w, g.vector(i));
    out.colors.push_back(sign_of(scale) > 0 ? Color::white : Color::black);
    for (Index j = 0, row = 0; j < k; ++j)
      if (j != out.dropped_axis) out.points(row++, i) = g.vectors(j, i) / scale;
  }
  out.normal = std::move(w);
  return out;
}

VectorQ lift_affine_functional(const AffineGaleDiagram& diagram, const VectorQ& a, const Rational& c) {
  if (a.size() != diagram.points.rows()) throw InputError("affine functional has the wrong dimension");
  VectorQ nu = c * diagram.normal;
  for (Index j = 0, row = 0; j < nu.size(); ++j)
    if (j != diagram.dropped_axis) nu(j) += a(row++);
  return nu;
}

std::vector<LinearSeparation> linear_separations(const MatrixQ& vectors) {
  const int k = static_cast<int>(vectors.rows());
  const int m = static_cast<int>(vectors.cols());
  if (k < 1 || m < 2) throw InputError("linear_separations needs k >= 1 and at least two vectors");
  const Mask all = full_mask(m);
  std::map<Mask, LinearSeparation> found;

  for_each_combination(m, k - 1, [&](const IndexSet& span) {
    MatrixQ rows(k - 1, k);
    for (int j = 0; j < k - 1; ++j) rows.row(j) = vectors.col(span[static_cast<std::size_t>(j)]).transpose();
    const auto kernel = nullspace_basis(rows);
    if (kernel.size() != 1) throw InputError("Gale vectors are not in general position");
    const VectorQ& base = kernel.front();

    // dual[j] solves rows * u = e_j, so sum sigma_j dual[j] tilts toward the sign pattern sigma.
    std::vector<VectorQ> dual;
    {
      MatrixQ augmented(k - 1, k + k - 1);
      augmented.leftCols(k) = rows;
      augmented.rightCols(k - 1) = MatrixQ::Identity(k - 1, k - 1);
      const auto echelon = reduced_echelon(augmented);
      for (int j = 0; j < k - 1; ++j) {
        VectorQ u = VectorQ::Zero(k);
        for (std::size_t r = 0; r < echelon.pivots.size(); ++r)
          u(echelon.pivots[r]) = echelon.reduced(static_cast<Index>(r), k + j);
        dual.push_back(std::move(u));
      }
    }

    const Mask on_plane = to_mask(span);
    std::vector<Rational> base_dot(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      base_dot[static_cast<std::size_t>(i)] = dot(base, vectors.col(i));
      if (!(on_plane >> i & 1) && sign_of(base_dot[static_cast<std::size_t>(i)]) == 0)
        throw InputError("Gale vectors are not in general position");
    }

    for (Mask sigma = 0; sigma < (Mask{1} << (k - 1)); ++sigma) {
      VectorQ tilt = VectorQ::Zero(k);
      for (int j = 0; j < k - 1; ++j) tilt += (sigma >> j & 1) ? dual[static_cast<std::size_t>(j)] : VectorQ(-dual[static_cast<std::size_t>(j)]);
      Rational eps = 1;
      for (int i = 0; i < m; ++i) {
        if (on_plane >> i & 1) continue;
        const Rational du = dot(tilt, vectors.col(i));
        const Rational& dn = base_dot[static_cast<std::size_t>(i)];
        if (sign_of(du) != 0 && sign_of(du) != sign_of(dn)) {
          const Rational limit = abs(dn / du) / 2;
          if (limit < eps) eps = limit;
        }
      }
      VectorQ normal = base + eps * tilt;
      Mask positive = 0;
      for (int i = 0; i < m; ++i) {
        const int s = sign_of(dot(normal, vectors.col(i)));
        if (s == 0) throw InvariantError("tilted hyperplane still contains a vector");
        if (s > 0) positive |= Mask{1} << i;
      }
      if (positive == 0 || positive == all) continue;
      const Mask key = (positive & 1) ? positive : (all & ~positive);
      if (!found.count(key)) found.emplace(key, oriented(positive, all, std::move(normal)));
    }
    return true;
  });

  std::vector<LinearSeparation> out;
  out.reserve(found.size());
  for (auto& [mask, sep] : found) out.push_back(std::move(sep));
  return out;
}

std::optional<LinearSeparation> realize_separation(const MatrixQ& vectors, Mask positive_side) {
  const auto k = vectors.rows();
  const auto m = vectors.cols();
  // Unknowns (nu+, nu-, slack): s_i <nu+ - nu-, g_i> - slack_i = 1 with s_i = +-1.
  MatrixQ a = MatrixQ::Zero(m, 2 * k + m);
  for (Index i = 0; i < m; ++i) {
    const int s = (positive_side >> i & 1) ? 1 : -1;
    for (Index j = 0; j < k; ++j) {
      a(i, j) = s * vectors(j, i);
      a(i, k + j) = -s * vectors(j, i);
    }
    a(i, 2 * k + i) = -1;
  }
  const auto x = nonneg_feasible<Rational>(a, VectorQ::Ones(m));
  if (!x) return std::nullopt;
  LinearSeparation s;
  s.normal = x->head(k) - x->segment(k, k);
  s.positive = from_mask(positive_side & full_mask(static_cast<int>(m)));
  s.negative = from_mask(~positive_side & full_mask(static_cast<int>(m)));
  return s;
}

std::vector<LinearSeparation> enumerate_separations(const GaleTransform& g) {
  if (g.dual_dim() < 1 || g.dual_dim() > 4)
    throw UnsupportedError("separation enumeration supports dual dimension 1..4, got " + std::to_string(g.dual_dim()));
  return linear_separations(g.vectors);
}

std::vector<LinearSeparation> proper_separations(const GaleTransform& g) {
  std::vector<LinearSeparation> out;
  for (auto& s : enumerate_separations(g))
    if (s.min_side() == g.size() / 2) out.push_back(std::move(s));
  return out;
}

CrossingPair separation_to_crossing(const GaleTransform& g, const LinearSeparation& s) {
  const int m = g.size();
  const Mask pos = to_mask(s.positive), neg = to_mask(s.negative);
  if (s.positive.empty() || s.negative.empty() || (pos & neg) || (pos | neg) != full_mask(m))
    throw InputError("separation does not partition the Gale vectors");
  if (s.normal.size() != g.dual_dim()) throw InputError("separation normal has the wrong dimension");
  for (int i = 0; i < m; ++i) {
    const int expected = (pos >> i & 1) ? 1 : -1;
    if (sign_of(dot(s.normal, g.vector(i))) != expected)
      throw InputError("separation normal does not realize the claimed sides");
  }
  return CrossingPair{s.positive, s.negative, std::nullopt};
}

bool is_convex_position_gale(const GaleTransform& g) {
  for (const auto& s : enumerate_separations(g))
    if (s.min_side() == 1) return false;
  return true;
}

int neighborliness_gale(const GaleTransform& g) {
  const auto seps = enumerate_separations(g);
  int smallest = g.size();
  for (const auto& s : seps) smallest = std::min(smallest, s.min_side());
  if (smallest == 1) throw InputError("neighborliness is defined for configurations in convex position");
  return smallest - 1;
}

bool is_face_gale(const GaleTransform& g, const IndexSet& face) {
  const Mask in_face = to_mask(face);
  IndexSet rest;
  for (int j = 0; j < g.size(); ++j)
    if (!(in_face >> j & 1)) rest.push_back(j);
  if (rest.empty()) throw InputError("face test needs a proper vertex subset");
  const auto k = g.vectors.rows();
  MatrixQ a(k + 1, static_cast<Index>(rest.size()));
  for (std::size_t c = 0; c < rest.size(); ++c) {
    a.col(static_cast<Index>(c)).head(k) = g.vector(rest[c]);
    a(k, static_cast<Index>(c)) = 1;
  }
  VectorQ b = VectorQ::Zero(k + 1);
  b(k) = 1;
  return strict_feasible<Rational>(a, b).has_value();
}

int neighborliness_by_faces(const GaleTransform& g, int limit) {
  for (int size = 1; size <= limit && size < g.size(); ++size) {
    bool all_faces = true;
    for_each_combination(g.size(), size, [&](const IndexSet& s) {
      all_faces = is_face_gale(g, s);
      return all_faces;
    });
    if (!all_faces) return size - 1;
  }
  return limit;
}

}  // namespace galecross
