#include <map>

#include "doctest.h"
#include "galecross/error.hpp"
#include "galecross/gale.hpp"
#include "galecross/simplexcross.hpp"
#include "oracles.hpp"

using namespace galecross;

namespace {

PointConfiguration planar(std::initializer_list<std::pair<long, long>> pts) {
  std::vector<VectorQ> out;
  for (auto [x, y] : pts) {
    VectorQ q(2);
    q << Rational(x), Rational(y);
    out.push_back(q);
  }
  return PointConfiguration(2, std::move(out));
}

std::vector<Rational> range(int from, int to) {
  std::vector<Rational> ts;
  for (int t = from; t <= to; ++t) ts.emplace_back(t);
  return ts;
}

const auto square = planar({{0, 0}, {1, 0}, {0, 1}, {1, 1}});

// Separable masks (containing index 0) by an LP per subset.
std::vector<Mask> separations_oracle(const MatrixQ& vectors) {
  std::vector<VectorQ> cols;
  for (Index i = 0; i < vectors.cols(); ++i) cols.push_back(vectors.col(i));
  const int m = static_cast<int>(vectors.cols());
  std::vector<Mask> out;
  for (Mask s = 1; s < full_mask(m); s += 2)
    if (oracle::plane_separates(cols, s, true)) out.push_back(s);
  return out;
}

}  // namespace

TEST_SUITE("gale") {
  TEST_CASE("square and moment-curve transforms") {
    const auto g = gale_transform(square);
    REQUIRE(g.dual_dim() == 1);
    const Rational s = g.vectors(0, 0);
    CHECK(s != 0);
    CHECK(g.vectors(0, 1) == -s);
    CHECK(g.vectors(0, 2) == -s);
    CHECK(g.vectors(0, 3) == s);

    const auto h = gale_transform(gen_moment_curve(3, range(0, 4)));
    REQUIRE(h.dual_dim() == 1);
    const Rational u = h.vectors(0, 0);
    const std::vector<int> finite_difference{1, -4, 6, -4, 1};
    for (int i = 0; i < 5; ++i) CHECK(h.vectors(0, i) == u * finite_difference[static_cast<std::size_t>(i)]);
  }

  TEST_CASE("transform annihilates the lifted matrix and spans") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto p = gen_random(3, 8, seed, 100);
      const auto g = gale_transform(p);
      CHECK((p.lifted() * g.vectors.transpose()).isZero());
      CHECK(rank(g.vectors) == g.dual_dim());
      for (int i = 0; i < g.size(); ++i) CHECK_FALSE(g.vectors.col(i).isZero());
      bool spans = true;
      for_each_combination(g.size(), g.dual_dim(), [&](const IndexSet& s) {
        MatrixQ sub(g.dual_dim(), g.dual_dim());
        for (int j = 0; j < g.dual_dim(); ++j) sub.col(j) = g.vectors.col(s[static_cast<std::size_t>(j)]);
        spans = spans && oracle::cofactor_det(sub) != 0;
        return spans;
      });
      CHECK(spans);
    }
    CHECK_THROWS_AS(gale_transform(planar({{0, 0}, {1, 0}, {0, 1}})), InputError);
  }

  TEST_CASE("affine diagram colors and symmetry") {
    const auto g = gale_transform(square);
    VectorQ w(1);
    w << (g.vectors(0, 0) > 0 ? 1 : -1);
    const auto diagram = affine_diagram(g, w);
    CHECK(diagram.points.rows() == 0);
    CHECK(diagram.colors == std::vector<Color>{Color::white, Color::black, Color::black, Color::white});
    const auto flipped = affine_diagram(g, VectorQ(-w));
    for (int i = 0; i < 4; ++i) CHECK(flipped.colors[static_cast<std::size_t>(i)] != diagram.colors[static_cast<std::size_t>(i)]);

    const auto p = gen_random(3, 7, 2, 100);
    const auto d2 = affine_diagram(gale_transform(p));
    CHECK(d2.points.rows() == 2);
    CHECK(d2.size() == 7);
    VectorQ zero = VectorQ::Zero(3);
    CHECK_THROWS_AS(affine_diagram(gale_transform(p), zero), InputError);
  }

  TEST_CASE("lifted affine functionals reproduce diagram sides") {
    const auto p = gen_random(4, 9, 4, 100);
    const auto g = gale_transform(p);
    const auto diagram = affine_diagram(g);
    VectorQ a(diagram.points.rows());
    for (Index j = 0; j < a.size(); ++j) a(j) = Rational(static_cast<long>(2 * j + 1), 7);
    const Rational c(-1, 3);
    const VectorQ nu = lift_affine_functional(diagram, a, c);
    for (int i = 0; i < g.size(); ++i) {
      const Rational affine = a.dot(diagram.points.col(i)) + c;
      const int color = diagram.colors[static_cast<std::size_t>(i)] == Color::white ? 1 : -1;
      CHECK(sign_of(nu.dot(g.vectors.col(i))) == color * sign_of(affine));
    }
  }

  TEST_CASE("separations of the square and a pentagon") {
    const auto sq = enumerate_separations(gale_transform(square));
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].positive == IndexSet{0, 3});
    CHECK(sq[0].negative == IndexSet{1, 2});

    const auto pentagon = planar({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}});
    const auto seps = enumerate_separations(gale_transform(pentagon));
    CHECK(seps.size() == 5);
    for (const auto& s : seps) CHECK(s.min_side() == 2);
  }

  TEST_CASE("separation enumeration matches an LP over every subset") {
    for (auto [d, m] : std::vector<std::pair<int, int>>{{2, 5}, {2, 6}, {3, 7}, {3, 8}, {4, 9}}) {
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto g = gale_transform(gen_random(d, m, seed, 200));
        const auto seps = enumerate_separations(g);
        std::vector<Mask> masks;
        for (const auto& s : seps) {
          masks.push_back(s.positive_mask());
          for (int i : s.positive) CHECK(s.normal.dot(g.vectors.col(i)) > 0);
          for (int i : s.negative) CHECK(s.normal.dot(g.vectors.col(i)) < 0);
        }
        CHECK(masks == separations_oracle(g.vectors));
      }
    }
  }

  TEST_CASE("realize_separation") {
    const auto g = gale_transform(square);
    CHECK(realize_separation(g.vectors, to_mask({0, 3})));
    CHECK_FALSE(realize_separation(g.vectors, to_mask({0, 1})));
  }

  TEST_CASE("separations map to crossings") {
    const auto g = gale_transform(square);
    const auto c = separation_to_crossing(g, enumerate_separations(g).front());
    CHECK(oracle::segments_cross(square.point(c.left[0]), square.point(c.left[1]), square.point(c.right[0]),
                                 square.point(c.right[1])));

    const auto m = gen_moment_curve(3, range(0, 4));
    const auto gm = gale_transform(m);
    const auto seps = enumerate_separations(gm);
    REQUIRE(seps.size() == 1);
    CHECK(seps[0].positive == IndexSet{0, 2, 4});
    CHECK(simplices_cross(m, seps[0].positive, seps[0].negative));

    LinearSeparation wrong = seps[0];
    std::swap(wrong.positive, wrong.negative);
    CHECK_THROWS_AS(separation_to_crossing(gm, wrong), InputError);
  }

  TEST_CASE("separation counts equal crossing counts for every split") {
    for (auto [d, m] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}, {3, 7}, {4, 8}}) {
      for (std::uint64_t seed = 10; seed < 13; ++seed) {
        const auto p = gen_random(d, m, seed, 100);
        std::map<int, std::uint64_t> by_side;
        for (const auto& s : enumerate_separations(gale_transform(p))) ++by_side[s.min_side()];
        for (int u = 0; 2 * u + 2 <= m; ++u) CHECK(by_side[u + 1] == count_all_crossings(p, u, m - 2 - u).count);
      }
    }
  }

  TEST_CASE("convexity and neighborliness from the Gale side") {
    const auto tri = planar({{0, 0}, {6, 0}, {0, 6}, {1, 2}});
    CHECK_FALSE(is_convex_position_gale(gale_transform(tri)));
    CHECK(is_convex_position_gale(gale_transform(gen_moment_curve(3, range(0, 6)))));
    CHECK(is_convex_position_gale(gale_transform(square)));

    CHECK(neighborliness_gale(gale_transform(gen_moment_curve(4, range(1, 8)))) == 2);
    CHECK(neighborliness_gale(gale_transform(square)) == 1);
    const auto c611 = gale_transform(gen_moment_curve(6, range(1, 11)));
    CHECK(neighborliness_gale(c611) == 3);
    CHECK(neighborliness_by_faces(c611, 5) == 3);
    CHECK_THROWS_AS(neighborliness_gale(gale_transform(tri)), InputError);
  }

  TEST_CASE("Gale face test agrees with the primal face test") {
    const auto p = gen_random(3, 7, 21, 100);
    const auto g = gale_transform(p);
    for (int size = 1; size <= 3; ++size)
      for_each_combination(p.size(), size, [&](const IndexSet& s) {
        CHECK(is_face_gale(g, s) == is_face(p, s));
        return true;
      });
  }

  TEST_CASE("enumeration is limited to dual dimension 4") {
    CHECK_THROWS_AS(enumerate_separations(gale_transform(gen_random(2, 8, 1, 100))), UnsupportedError);
  }
}
