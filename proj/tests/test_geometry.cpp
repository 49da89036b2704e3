#include "loopcross/geometry.hpp"

#include <random>

#include "doctest.h"
#include "loopcross/homotopy.hpp"
#include "oracles.hpp"

using namespace loopcross;

namespace {
Point pt(long long x, long long y) { return {Rational(x), Rational(y)}; }
Point pt(Rational x, Rational y) { return {x, y}; }
}  // namespace

TEST_CASE("symmetric X gives one crossing at the center") {
  PolyCurve a({pt(0, 0), pt(2, 2)}, false);
  PolyCurve b({pt(0, 2), pt(2, 0)}, false);
  auto rec = curve_pair_crossings(a, b);
  REQUIRE(rec.size() == 1);
  CHECK(rec[0].location == pt(1, 1));
  CHECK(rec[0].param_a.t == Rational(1, 2));
  auto rec2 = curve_pair_crossings(b, a);
  CHECK(rec2.size() == 1);
  CHECK(rec2[0].location == rec[0].location);
}

TEST_CASE("shared endpoints are never crossings") {
  PolyCurve a({pt(0, 0), pt(2, 2)}, false);
  PolyCurve b({pt(0, 0), pt(2, -1)}, false);
  CHECK(curve_pair_crossings(a, b).empty());
  // two closed loops sharing their basepoint
  PolyCurve l1({pt(0, 0), pt(2, 1), pt(2, 2)}, true);
  PolyCurve l2({pt(0, 0), pt(-2, 1), pt(-2, 2)}, true);
  CHECK(curve_pair_crossings(l1, l2).empty());
}

TEST_CASE("convex polygon has no self-crossings, figure-eight has one") {
  PolyCurve square({pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)}, true);
  CHECK(curve_self_crossings(square).empty());
  PolyCurve eight({pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)}, true);
  auto rec = curve_self_crossings(eight);
  REQUIRE(rec.size() == 1);
  CHECK(rec[0].location == pt(1, 1));
}

TEST_CASE("tangency and overlap raise GeneralPositionViolation") {
  PolyCurve a({pt(0, 0), pt(4, 0)}, false);
  PolyCurve touch({pt(2, 0), pt(2, 3)}, false);  // endpoint on interior
  CHECK_THROWS_AS(curve_pair_crossings(a, touch), GeneralPositionViolation);
  PolyCurve overlap({pt(1, 0), pt(5, 0)}, false);
  CHECK_THROWS_AS(curve_pair_crossings(a, overlap), GeneralPositionViolation);
  PolyCurve vertex_on({pt(0, 1), pt(2, 0), pt(4, 1)}, false);  // interior vertex on a
  CHECK_THROWS_AS(curve_pair_crossings(a, vertex_on), GeneralPositionViolation);
}

TEST_CASE("check_general_position finds violations without throwing") {
  PolyCurve t1({pt(0, 0), pt(4, 0), pt(2, 3)}, true);
  PolyCurve t2({pt(10, 0), pt(14, 0), pt(12, 3)}, true);
  CHECK(check_general_position({t1, t2}).empty());

  PolyCurve shared({pt(0, 0), pt(4, 0), pt(2, -3)}, true);  // full segment shared with t1
  auto v = check_general_position({t1, shared});
  REQUIRE(!v.empty());
  CHECK(v.front().kind == Violation::Overlap);

  // three segments through one point
  PolyCurve s1({pt(-2, -2), pt(2, 2)}, false);
  PolyCurve s2({pt(-2, 2), pt(2, -2)}, false);
  PolyCurve s3({pt(-2, 0), pt(2, 0)}, false);
  auto tv = check_general_position({s1, s2, s3});
  bool has_triple = false;
  for (const auto& viol : tv) has_triple |= viol.kind == Violation::TriplePoint;
  CHECK(has_triple);
}

TEST_CASE("puncture checks against a plane") {
  PuncturedPlane plane({pt(1, 0), pt(2, 0)}, pt(0, -1));
  PolyCurve through({pt(0, 1), pt(2, -1)}, false);  // passes through (1,0)
  auto v = check_general_position({through}, &plane);
  bool hit = false, column = false;
  for (const auto& viol : v) {
    hit |= viol.kind == Violation::ThroughPuncture;
    column |= viol.kind == Violation::PunctureColumn;
  }
  CHECK(hit);
  PolyCurve on_column({pt(1, 2), pt(3, 5)}, false);  // vertex shares x with puncture 1
  v = check_general_position({on_column}, &plane);
  column = false;
  for (const auto& viol : v) column |= viol.kind == Violation::PunctureColumn;
  CHECK(column);
}

TEST_CASE("crossing counts match the brute-force oracle on random polygons") {
  std::mt19937_64 rng(20240917);
  for (int iter = 0; iter < 60; ++iter) {
    PolyCurve a = oracle::random_closed_polygon(rng, 6 + iter % 5);
    CHECK(count_self_crossings(a) == oracle::brute_self_count(a));
    PolyCurve b = oracle::random_closed_polygon(rng, 5 + iter % 4);
    auto gp = check_general_position({a, b});
    if (!gp.empty()) continue;  // contact between the two; skip the pair check
    CHECK(count_pair_crossings(a, b) == oracle::brute_pair_count(a, b));
  }
}

TEST_CASE("accelerated and generic paths agree when denominators force fallback") {
  std::mt19937_64 rng(7);
  // huge prime-ish denominator defeats the int64 scaling
  Rational blow = Rational(1, Integer("1606938044258990275541962092341162602522202993782792835301611"));
  for (int iter = 0; iter < 20; ++iter) {
    PolyCurve a = oracle::random_closed_polygon(rng, 7);
    PolyCurve b = oracle::random_closed_polygon(rng, 6);
    if (!check_general_position({a, b}).empty()) continue;
    auto scale = [&](const PolyCurve& c) {
      std::vector<Point> v = c.verts;
      for (auto& p : v) {
        p.x = p.x + p.x * blow;
        p.y = p.y + p.y * blow;
      }
      return PolyCurve(v, true);
    };
    PolyCurve sa = scale(a), sb = scale(b);
    CHECK(count_pair_crossings(sa, sb) == oracle::brute_pair_count(sa, sb));
    CHECK(count_self_crossings(sa) == oracle::brute_self_count(sa));
  }
}

TEST_CASE("crossing count invariant under rational translation") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 20; ++iter) {
    PolyCurve a = oracle::random_closed_polygon(rng, 8);
    Point d{Rational(13, 7), Rational(-5, 3)};
    CHECK(count_self_crossings(a) == count_self_crossings(a.translated(d)));
  }
}

TEST_CASE("crossing_matrix is symmetric and matches pair calls") {
  std::mt19937_64 rng(3);
  std::vector<PolyCurve> fam;
  while (fam.size() < 4) {
    PolyCurve c = oracle::random_closed_polygon(rng, 6);
    fam.push_back(c);
    if (!check_general_position(fam).empty()) fam.pop_back();
  }
  auto m = crossing_matrix(fam);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    CHECK(m[i][i] == count_self_crossings(fam[i]));
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      CHECK(m[i][j] == m[j][i]);
      CHECK(m[i][j] == count_pair_crossings(fam[i], fam[j]));
    }
  }
}

TEST_CASE("perturb_family separates coincident curves deterministically") {
  // two identical triangles: invalid until perturbed
  PolyCurve t({pt(0, 0), pt(8, 0), pt(4, 6)}, true);
  std::vector<PolyCurve> fam{t, t};
  CHECK(!check_general_position(fam).empty());
  auto out = perturb_family(fam, Rational(1, 64));
  CHECK(check_general_position(out).empty());
  auto again = perturb_family(fam, Rational(1, 64));
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i].verts == again[i].verts);
  // basepoints stay fixed
  CHECK(out[0].verts[0] == t.verts[0]);
  CHECK(out[1].verts[0] == t.verts[0]);
}

TEST_CASE("perturb_family rejects nonpositive epsilon") {
  PolyCurve t({pt(0, 0), pt(8, 0), pt(4, 6)}, true);
  CHECK_THROWS_AS(perturb_family({t}, Rational(0)), ParameterOutOfRange);
}
