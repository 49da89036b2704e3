// Brute-force reference implementations used as independent oracles in tests.
// These deliberately avoid the library's accelerated code paths.
#pragma once

#include <random>
#include <vector>

#include "loopcross/geometry.hpp"
#include "loopcross/homotopy.hpp"

namespace loopcross::oracle {

// All-segment-pairs proper-crossing count in pure rational arithmetic.
inline long long brute_pair_count(const PolyCurve& c1, const PolyCurve& c2) {
  long long n = 0;
  for (int i = 0; i < c1.segment_count(); ++i)
    for (int j = 0; j < c2.segment_count(); ++j) {
      const Point &a = c1.seg_a(i), &b = c1.seg_b(i), &c = c2.seg_a(j), &d = c2.seg_b(j);
      int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
      if (o1 * o2 < 0 && o3 * o4 < 0) ++n;
    }
  return n;
}

inline long long brute_self_count(const PolyCurve& c) {
  long long n = 0;
  int ns = c.segment_count();
  for (int i = 0; i < ns; ++i)
    for (int j = i + 1; j < ns; ++j) {
      if (j == i + 1 || (c.closed && i == 0 && j == ns - 1)) continue;
      const Point &a = c.seg_a(i), &b = c.seg_b(i), &p = c.seg_a(j), &q = c.seg_b(j);
      int o1 = orient(a, b, p), o2 = orient(a, b, q), o3 = orient(p, q, a), o4 = orient(p, q, b);
      if (o1 * o2 < 0 && o3 * o4 < 0) ++n;
    }
  return n;
}

// Winding via the *downward* ray from p (the library uses the upward one):
// eastward crossings below p count +1.
inline long long brute_winding(const PolyCurve& c, const Point& p) {
  long long w = 0;
  for (int i = 0; i < c.segment_count(); ++i) {
    const Point &a = c.seg_a(i), &b = c.seg_b(i);
    bool ra = a.x >= p.x, rb = b.x >= p.x;
    if (ra == rb) continue;
    Rational t = (p.x - a.x) / (b.x - a.x);
    Rational y = a.y + t * (b.y - a.y);
    if (y < p.y) w += rb ? 1 : -1;
  }
  return w;
}

// Bounded search for g' == g_a^s h g_b^t with h in {g, g^-1}.
inline bool brute_double_coset(const ReducedWord& g, const ReducedWord& gp, int a, int b,
                               bool allow_inverse = true) {
  long long bound = static_cast<long long>(g.size() + gp.size()) + 1;
  for (int route = 0; route < (allow_inverse ? 2 : 1); ++route) {
    ReducedWord h = route == 0 ? g : invert(g);
    for (long long s = -bound; s <= bound; ++s)
      for (long long t = -bound; t <= bound; ++t)
        if (concat(word_power(a, s), concat(h, word_power(b, t))) == gp) return true;
  }
  return false;
}

// Longest monotone subsequence by exhaustive subset search (tiny inputs only).
inline int brute_longest_monotone(const std::vector<long long>& v) {
  int n = static_cast<int>(v.size());
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<long long> sel;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sel.push_back(v[i]);
    bool inc = true, dec = true;
    for (std::size_t i = 0; i + 1 < sel.size(); ++i) {
      if (sel[i] >= sel[i + 1]) inc = false;
      if (sel[i] <= sel[i + 1]) dec = false;
    }
    if ((inc || dec) && static_cast<int>(sel.size()) > best) best = static_cast<int>(sel.size());
  }
  return best;
}

// Random closed polygon on a grid, rejected until it is in general position
// with itself (no spurs, tangencies or triple self-points).
inline PolyCurve random_closed_polygon(std::mt19937_64& rng, int nverts, long long extent = 20) {
  std::uniform_int_distribution<long long> d(-extent, extent);
  for (;;) {
    std::vector<Point> v;
    for (int i = 0; i < nverts; ++i) v.push_back({Rational(d(rng)), Rational(d(rng))});
    bool dup = false;
    for (int i = 0; i < nverts; ++i)
      if (v[i] == v[(i + 1) % nverts]) dup = true;
    if (dup) continue;
    try {
      PolyCurve c(v, true);
      if (check_general_position({c}).empty()) return c;
    } catch (const Error&) {
    }
  }
}

}  // namespace loopcross::oracle
