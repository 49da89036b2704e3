#include "loopcross/constructions.hpp"

#include <map>
#include <set>

#include "doctest.h"
#include "loopcross/arrangement.hpp"
#include "loopcross/bounds.hpp"
#include "oracles.hpp"

using namespace loopcross;

namespace {

Integer binom(long long n, long long r) {
  if (r < 0 || r > n) return 0;
  Integer out = 1;
  for (long long i = 0; i < r; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}

long long elementary_family_size(int n, int k) {
  Integer s = 0;
  for (int j2 = 0; j2 < k; ++j2) s += binom(n - 1, j2);
  return (2 * s).convert_to<long long>();
}

// combinatorial model of the column-gap order flips that the elementary-loop
// perturbation realizes geometrically: ties at a shared-sign column break by
// the reversed suffix (the next differing column decides), then the full mask
unsigned long long rev_suffix(unsigned long long m, int i, int n) {
  // column i+1 contributes the most significant bit
  unsigned long long out = 0;
  for (int c = i + 1; c <= n; ++c)
    if ((m >> (c - 1)) & 1) out |= 1ull << (n - c);
  return out;
}

bool column_order(unsigned long long a, unsigned long long b, int i, int n) {
  // true when loop a runs above loop b at column i
  if (((a ^ b) >> (i - 1)) & 1) return (a >> (i - 1)) & 1;
  unsigned long long ra = rev_suffix(a, i, n), rb = rev_suffix(b, i, n);
  if (ra != rb) return ra > rb;
  return a > b;
}

long long model_flips(unsigned long long a, unsigned long long b, int n) {
  if (a == b) return 0;
  long long flips = 0;
  for (int i = 1; i < n; ++i)
    if (column_order(a, b, i, n) != column_order(a, b, i + 1, n)) ++flips;
  if (column_order(a, b, n, n) != (a > b)) ++flips;  // terminal gap, delta order
  return flips;
}

int sc(unsigned long long mask, int n) {
  int c = 0;
  for (int i = 0; i + 1 < n; ++i)
    if (((mask >> i) & 1) != ((mask >> (i + 1)) & 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("suffix-ordered flip model never exceeds the sign-change budget") {
  for (int n = 2; n <= 10; ++n) {
    long long size = 1ll << n;
    long long bad = 0;
    for (long long a = 0; a < size; ++a)
      for (long long b = a + 1; b < size; ++b) {
        long long f = model_flips(a, b, n);
        if (f > std::min(sc(a, n), sc(b, n)) || f > n - 1) ++bad;
      }
    CHECK(bad == 0);
  }
}

TEST_CASE("elementary loops: sizes, general position, crossings, words") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) {
      LoopFamily fam = gen_elementary_loops(n, k);
      CHECK(static_cast<long long>(fam.loops.size()) == elementary_family_size(n, k));
      CHECK(check_general_position(fam.loops, &fam.plane).empty());
      auto m = crossing_matrix(fam.loops);
      std::set<ReducedWord> words;
      for (std::size_t i = 0; i < fam.loops.size(); ++i) {
        CHECK(m[i][i] == 0);  // elementary loops are simple
        words.insert(curve_word(fam.loops[i], fam.plane));
        for (std::size_t j2 = i + 1; j2 < fam.loops.size(); ++j2)
          CHECK(m[i][j2] <= k - 1);
      }
      CHECK(words.size() == fam.loops.size());
    }
}

TEST_CASE("elementary loop words read as increasing positive products") {
  LoopFamily fam = gen_elementary_loops(3, 3);
  // the all-plus loop is the one with word g1 g2 g3
  bool found_all_plus = false;
  for (const auto& c : fam.loops) {
    ReducedWord w = curve_word(c, fam.plane);
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
      CHECK(w.letters[i].gen < w.letters[i + 1].gen);
    for (const auto& l : w.letters) CHECK(l.sign == 1);
    found_all_plus |= w == reduce({{1, 1}, {2, 1}, {3, 1}});
  }
  CHECK(found_all_plus);
  // sign (+,-) for n=2 gives g1
  LoopFamily two = gen_elementary_loops(2, 2);
  std::set<ReducedWord> words;
  for (const auto& c : two.loops) words.insert(curve_word(c, two.plane));
  CHECK(words.count(reduce({{1, 1}})) == 1);
  CHECK(words.count(ReducedWord{}) == 1);
  CHECK(words.count(reduce({{1, 1}, {2, 1}})) == 1);
  CHECK(words.count(reduce({{2, 1}})) == 1);
}

TEST_CASE("geometric pair crossings equal the flip model") {
  int n = 4;
  LoopFamily fam = gen_elementary_loops(n, n);
  REQUIRE(fam.loops.size() == 16);
  auto m = crossing_matrix(fam.loops);
  // loops are emitted in mask order
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b) CHECK(m[a][b] == model_flips(a, b, n));
}

TEST_CASE("perturb_family fixes the unperturbed elementary loops") {
  int n = 3;
  auto raw = unperturbed_elementary_loops(n);
  PuncturedPlane plane = elementary_plane(n);
  CHECK(!check_general_position(raw, &plane).empty());
  auto fixed = perturb_family(raw, Rational(1, 64), &plane);
  CHECK(check_general_position(fixed, &plane).empty());
  auto m = crossing_matrix(fixed);
  for (std::size_t i = 0; i < fixed.size(); ++i)
    for (std::size_t j2 = i + 1; j2 < fixed.size(); ++j2) CHECK(m[i][j2] <= n - 1);
}

TEST_CASE("concatenated loops: counts, crossings, distinct words") {
  for (auto [n, j] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 3}}) {
    LoopFamily fam = gen_concatenated_loops(n, j);
    long long expect = 1ll << (static_cast<long long>(j) * (n - 1));
    CHECK(static_cast<long long>(fam.loops.size()) == expect);
    CHECK(check_general_position(fam.loops, &fam.plane).empty());
    auto m = crossing_matrix(fam.loops);
    std::set<ReducedWord> words;
    long long cap = static_cast<long long>(j) * j * n;
    for (std::size_t i = 0; i < fam.loops.size(); ++i) {
      CHECK(m[i][i] <= cap);
      words.insert(curve_word(fam.loops[i], fam.plane));
      for (std::size_t j2 = i + 1; j2 < fam.loops.size(); ++j2) CHECK(m[i][j2] <= cap);
    }
    CHECK(words.size() == fam.loops.size());
  }
}

TEST_CASE("concatenated words for n=2 are positive products of g1 and g1g2") {
  LoopFamily fam = gen_concatenated_loops(2, 4);
  CHECK(fam.loops.size() == 16);
  for (const auto& c : fam.loops) {
    ReducedWord w = curve_word(c, fam.plane);
    CHECK(w.size() >= 4);
    long long g1s = 0;
    for (const auto& l : w.letters) {
      CHECK(l.sign == 1);
      if (l.gen == 1) ++g1s;
    }
    CHECK(g1s == 4);  // each factor contributes exactly one g1
  }
}

TEST_CASE("winding loops: counts, windings, self-crossings") {
  for (long long k = 1; k <= 4; ++k) {
    LoopFamily fam = gen_winding_loops(k);
    REQUIRE(static_cast<long long>(fam.loops.size()) == 2 * k + 1);
    CHECK(check_general_position(fam.loops, &fam.plane).empty());
    const Point& p = fam.plane.punctures[0];
    for (std::size_t i = 0; i < fam.loops.size(); ++i) {
      long long w = fam.windings[i];
      CHECK(w == static_cast<long long>(i) - k);
      CHECK(winding_number(fam.loops[i], p) == w);
      CHECK(count_self_crossings(fam.loops[i]) == std::max(0ll, std::llabs(w) - 1));
      CHECK(count_self_crossings(fam.loops[i]) < k);
      ReducedWord word = curve_word(fam.loops[i], fam.plane);
      CHECK(word.exponent_sum(1) == -w);
    }
  }
}

TEST_CASE("winding loops are pairwise disjoint for k <= 2") {
  for (long long k = 1; k <= 2; ++k) {
    LoopFamily fam = gen_winding_loops(k);
    auto m = crossing_matrix(fam.loops);
    for (std::size_t i = 0; i < fam.loops.size(); ++i)
      for (std::size_t j2 = i + 1; j2 < fam.loops.size(); ++j2) CHECK(m[i][j2] == 0);
  }
}

TEST_CASE("winding loop pairwise crossings stay below k for k >= 3") {
  for (long long k : {3ll, 5ll}) {
    LoopFamily fam = gen_winding_loops(k);
    auto m = crossing_matrix(fam.loops);
    for (std::size_t i = 0; i < fam.loops.size(); ++i)
      for (std::size_t j2 = i + 1; j2 < fam.loops.size(); ++j2) {
        long long wi = std::llabs(fam.windings[i]);
        long long wj = std::llabs(fam.windings[j2]);
        long long expect = 2 * std::max(0ll, std::min(wi, wj) - 1);
        CHECK(m[i][j2] == expect);
        CHECK(m[i][j2] < 2 * k);
      }
  }
}

TEST_CASE("loose extremal: edge counts, no inter-edge crossings, valid") {
  for (int n : {1, 2, 3, 5, 8}) {
    DrawnMultigraph g = gen_loose_extremal(n);
    CHECK(g.vertex_count() == n);
    CHECK(g.edge_count() == std::max(0, 3 * n - 3));
    if (n == 1) continue;
    CrossingStats st = multigraph_crossing_stats(g);
    CHECK(st.pair_crossings == 0);
    if (n >= 2) CHECK(st.max_self >= 1);  // l' self-intersects
    NonHomotopicReport rep = validate_nonhomotopic(g);
    CHECK(rep.ok());
  }
}

TEST_CASE("loose extremal: l' is non-trivial and winds twice") {
  DrawnMultigraph g = gen_loose_extremal(5);
  const MultiEdge* l2 = nullptr;
  for (const auto& e : g.edges)
    if (e.id == "l2") l2 = &e;
  REQUIRE(l2 != nullptr);
  CHECK(!is_trivial_loop(*l2, g));
  for (const auto& [label, p] : g.vertices)
    if (label != "u") CHECK(std::llabs(winding_number(l2->curve, p)) == 2);
}

TEST_CASE("disjoint bouquets: structure and crossing pairs") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 4}, {4, 8}, {6, 12}}) {
    DrawnMultigraph g = gen_disjoint_bouquets(n, m);
    CHECK(g.vertex_count() == n);
    CHECK(g.edge_count() == m);
    NonHomotopicReport rep = validate_nonhomotopic(g);
    CHECK(rep.ok());
    CrossingStats st = multigraph_crossing_stats(g);
    CHECK(Rational(st.crossing_pairs) < Rational(Integer(m) * m, n));
    if (n == 2 && m == 4) {
      std::multiset<long long> ws;
      const Point& v = g.vertices[0].second;
      for (const auto& e : g.edges) ws.insert(winding_number(e.curve, v));
      CHECK(ws == std::multiset<long long>{1, 2, 3, 4});
    }
  }
  CHECK_THROWS_AS(gen_disjoint_bouquets(3, 6), ParameterOutOfRange);
  CHECK_THROWS_AS(gen_disjoint_bouquets(2, 5), ParameterOutOfRange);
}

TEST_CASE("theorem-2 instance: case A") {
  DrawnMultigraph g = gen_upperbound_multigraph(3, 20);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 20);
  NonHomotopicReport rep = validate_nonhomotopic(g);
  CHECK(rep.ok());
  UpperboundInfo info = upperbound_info(3, 20);
  CHECK(info.case_tag == 'A');
  CrossingStats st = multigraph_crossing_stats(g);
  Rational kbound = Rational(info.k_formula) * (20 + Rational(20 * 19, 2));
  CHECK(Rational(st.cr) < kbound);
  CHECK(Rational(st.cr) <= cr_upper_thm2(3, 20).upper);
  AuditReport audit = audit_instance(g, cr_upper_thm2(3, 20).upper);
  CHECK(audit.pass);
}

TEST_CASE("theorem-2 instance: case B splits into translated copies") {
  DrawnMultigraph g = gen_upperbound_multigraph(9, 45);
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 45);
  CHECK(validate_nonhomotopic(g).ok());
  // crossings split per copy: cr(G) <= copies * cr(G0)
  UpperboundInfo info = upperbound_info(9, 45);
  CHECK(info.case_tag == 'B');
  CHECK(info.copies == 3);
  DrawnMultigraph g0 = gen_upperbound_multigraph(3, info.m0);
  CHECK(multigraph_crossing_stats(g).cr <= info.copies * multigraph_crossing_stats(g0).cr);
}

TEST_CASE("theorem-2 instance: case C double-coset filtered loops") {
  DrawnMultigraph g = gen_upperbound_multigraph(2, 16);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 16);
  for (const auto& e : g.edges) {
    CHECK(e.u == "a1");
    CHECK(e.v == "a1");
  }
  NonHomotopicReport rep = validate_nonhomotopic(g);
  CHECK(rep.ok());
  CrossingStats st = multigraph_crossing_stats(g);
  CHECK(Rational(st.cr) <= cr_upper_thm2(2, 16).upper);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(gen_upperbound_multigraph(2, 8), ParameterOutOfRange);
  CHECK_THROWS_AS(gen_upperbound_multigraph(1, 50), ParameterOutOfRange);
  CHECK_THROWS_AS(gen_winding_loops(0), ParameterOutOfRange);
  CHECK_THROWS_AS(gen_elementary_loops(4, 5), ParameterOutOfRange);
  CHECK_THROWS_AS(gen_concatenated_loops(2, 2), ParameterOutOfRange);
}
