#include "doctest.h"
#include "galecross/error.hpp"
#include "galecross/kfacets.hpp"
#include "galecross/pointconfig.hpp"
#include "oracles.hpp"

using namespace galecross;

namespace {

VectorQ v2(long x, long y) {
  VectorQ q(2);
  q << Rational(x), Rational(y);
  return q;
}

VectorQ v3(long x, long y, long z) {
  VectorQ q(3);
  q << Rational(x), Rational(y), Rational(z);
  return q;
}

PointSet3D tetrahedron() { return PointSet3D{{v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}}; }

PointSet3D random_set(int s, std::uint64_t seed) { return PointSet3D{gen_random(3, s, seed, 1000).points()}; }

ColoredPointSet2D colored(int r, std::uint64_t seed) {
  ColoredPointSet2D set;
  set.points = gen_random(2, r, seed, 1000).points();
  for (int i = 0; i < r; ++i) set.colors.push_back(i % 2 == 0 ? Color::white : Color::black);
  return set;
}

// Balanced (white, black) pairs by explicit counting on both sides.
std::size_t balanced_oracle(const ColoredPointSet2D& r) {
  std::size_t count = 0;
  for (int w = 0; w < r.size(); ++w)
    for (int b = 0; b < r.size(); ++b) {
      if (r.colors[static_cast<std::size_t>(w)] != Color::white || r.colors[static_cast<std::size_t>(b)] != Color::black) continue;
      int lw = 0, lb = 0, rw = 0, rb = 0;
      for (int q = 0; q < r.size(); ++q) {
        if (q == w || q == b) continue;
        const bool left = oracle::orient(r.points[static_cast<std::size_t>(w)], r.points[static_cast<std::size_t>(b)],
                                         r.points[static_cast<std::size_t>(q)]) > 0;
        const bool white = r.colors[static_cast<std::size_t>(q)] == Color::white;
        (left ? (white ? lw : lb) : (white ? rw : rb))++;
      }
      count += lw == lb && rw == rb;
    }
  return count;
}

}  // namespace

TEST_SUITE("kfacets") {
  TEST_CASE("balanced lines") {
    ColoredPointSet2D two{{v2(0, 0), v2(1, 1)}, {Color::white, Color::black}};
    CHECK(balanced_lines(two).size() == 1);
    CHECK(almost_balanced_directed_lines(two).size() == 2);

    ColoredPointSet2D square{{v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)},
                             {Color::white, Color::black, Color::white, Color::black}};
    CHECK(balanced_lines(square).size() == 4);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto set = colored(10, seed);
      const auto lines = balanced_lines(set);
      CHECK(lines.size() == balanced_oracle(set));
      CHECK(lines.size() >= 5);
      CHECK(almost_balanced_directed_lines(set).size() >= lines.size());
    }
    CHECK_THROWS_AS(balanced_lines(colored(7, 1)), InputError);
    ColoredPointSet2D line{{v2(0, 0), v2(1, 1), v2(2, 2), v2(0, 1)},
                           {Color::white, Color::black, Color::white, Color::black}};
    CHECK_THROWS_AS(balanced_lines(line), InputError);
  }

  TEST_CASE("almost balanced directed lines for odd r") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) CHECK(almost_balanced_directed_lines(colored(11, seed)).size() >= 5);
  }

  TEST_CASE("j-facets") {
    const auto E = j_facets(tetrahedron());
    CHECK(E == std::vector<std::uint64_t>{4, 4});
    const auto five = gen_moment_curve(3, {Rational(0), Rational(1), Rational(2), Rational(3), Rational(4)});
    CHECK(j_facets(PointSet3D{five.points()})[0] == 6);
    for (int s = 5; s <= 9; ++s) {
      const auto e = j_facets(random_set(s, static_cast<std::uint64_t>(s)));
      std::uint64_t total = 0;
      for (auto x : e) total += x;
      CHECK(total == 2 * oracle::binom(s, 3));
    }
    PointSet3D flat{{v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, 0)}};
    CHECK_THROWS_AS(j_facets(flat), InputError);
  }

  TEST_CASE("k-sets agree with an LP over every subset") {
    const auto tet = k_sets_direct(tetrahedron());
    CHECK(tet[1] == 4);
    CHECK(tet[2] == 6);
    CHECK(tet[3] == 4);
    for (int s = 5; s <= 9; ++s) {
      const auto set = random_set(s, 100 + static_cast<std::uint64_t>(s));
      const auto e = k_sets_direct(set);
      CHECK(e == oracle::k_set_counts(set.points, s));
      for (int k = 1; k < s; ++k) CHECK(e[static_cast<std::size_t>(k)] == e[static_cast<std::size_t>(s - k)]);
    }
    const auto six = gen_moment_curve(3, {Rational(1), Rational(2), Rational(3), Rational(4), Rational(5), Rational(6)});
    CHECK(k_sets_direct(PointSet3D{six.points()})[1] == 6);
  }

  TEST_CASE("identities between j-facets and k-sets") {
    const auto tet = andrzejak_check(tetrahedron());
    CHECK(tet.all_hold());
    CHECK(tet.checks[0].predicted == 4);
    CHECK(tet.checks[1].predicted == 6);
    for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(andrzejak_check(random_set(9, seed)).all_hold());
  }

  TEST_CASE("halving triangles") {
    CHECK(halving_stats(tetrahedron()).count == 8);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      CHECK(halving_stats(random_set(5, seed)).count >= 4);
      CHECK(halving_stats(random_set(7, seed)).count >= 9);
    }
  }

  TEST_CASE("(<= j)-facets and (<= k)-sets") {
    CHECK(leq_facet_count(tetrahedron(), 0) == 4);
    CHECK(leq_facet_count(random_set(13, 1), 2) >= 40);
    CHECK(leq_facet_count(random_set(9, 1), 1) >= 16);
    CHECK_THROWS_AS(leq_facet_count(random_set(8, 1), 2), InputError);
    CHECK(leq_k_set_count(tetrahedron(), 1) == 4);
    CHECK(leq_k_set_count(tetrahedron(), 3) == 14);
    const auto set = random_set(9, 4);
    CHECK(leq_k_set_count(set, 3) == oracle::leq_k_set_count(set.points, 3));
  }

  TEST_CASE("majority k-sets") {
    CHECK(majority_k_set_count(tetrahedron()) == 6);
    const auto five = random_set(5, 2);
    const auto e = k_sets_direct(five);
    CHECK(majority_k_set_count(five) == e[2] + e[3]);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto ten = random_set(10, seed);
      const auto count = majority_k_set_count(ten);
      CHECK(count == oracle::majority_k_set_count(ten.points));
      CHECK(2 * count >= 25);
    }
  }

  TEST_CASE("CSV output") {
    const auto report = andrzejak_check(tetrahedron());
    const auto stats = stats_csv(4, report.stats);
    CHECK(stats.rfind("s,j_or_k,E_j,e_k\n", 0) == 0);
    CHECK(stats.find("4,0,4,\n") != std::string::npos);
    CHECK(stats.find("4,2,,6\n") != std::string::npos);
    CHECK(identity_csv(report).find("4,2,6,6,true") != std::string::npos);
  }
}
