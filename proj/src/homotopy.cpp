#include "loopcross/homotopy.hpp"

#include <algorithm>
#include <set>

namespace loopcross {

PuncturedPlane::PuncturedPlane(std::vector<Point> ps, Point bp)
    : punctures(std::move(ps)), basepoint(std::move(bp)) {
  std::sort(punctures.begin(), punctures.end());
  for (std::size_t i = 0; i + 1 < punctures.size(); ++i) {
    if (punctures[i] == punctures[i + 1]) throw InvalidPlane("duplicate puncture");
    if (punctures[i].x == punctures[i + 1].x)
      throw InvalidPlane("punctures share a vertical line; ray words would be ambiguous");
  }
  for (const auto& p : punctures) {
    if (p == basepoint) throw InvalidPlane("basepoint coincides with a puncture");
    if (p.x == basepoint.x) throw InvalidPlane("basepoint on a puncture's vertical line");
  }
}

ReducedWord ReducedWord::from_letters(const std::vector<Letter>& raw) { return reduce(raw); }

bool ReducedWord::operator<(const ReducedWord& o) const {
  return std::lexicographical_compare(
      letters.begin(), letters.end(), o.letters.begin(), o.letters.end(),
      [](const Letter& a, const Letter& b) {
        return a.gen < b.gen || (a.gen == b.gen && a.sign < b.sign);
      });
}

long long ReducedWord::exponent_sum(int gen) const {
  long long s = 0;
  for (const auto& l : letters)
    if (l.gen == gen) s += l.sign;
  return s;
}

bool ReducedWord::is_power_of(int gen) const {
  for (const auto& l : letters)
    if (l.gen != gen) return false;
  return true;
}

std::string ReducedWord::str() const {
  if (letters.empty()) return "e";
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += "g" + std::to_string(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

ReducedWord reduce(const std::vector<Letter>& raw) {
  ReducedWord w;
  for (const auto& l : raw) {
    if (l.sign != 1 && l.sign != -1) throw Error("letter sign must be +-1");
    if (!w.letters.empty() && w.letters.back().gen == l.gen && w.letters.back().sign == -l.sign)
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

ReducedWord invert(const ReducedWord& w) {
  ReducedWord out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->gen, -it->sign});
  return out;
}

ReducedWord concat(const ReducedWord& a, const ReducedWord& b) {
  std::vector<Letter> raw = a.letters;
  raw.insert(raw.end(), b.letters.begin(), b.letters.end());
  return reduce(raw);
}

ReducedWord word_power(int gen, long long exp) {
  ReducedWord w;
  int s = exp >= 0 ? 1 : -1;
  for (long long i = 0; i < (exp >= 0 ? exp : -exp); ++i) w.letters.push_back({gen, s});
  return w;
}

namespace {

// Upward-ray crossing scan shared by winding numbers and words. Uses the
// half-open rule (x == p.x counts to the right class) so that a vertex sitting
// exactly on the column resolves consistently across the two incident
// segments; contacts at a vertex equal to an allowed anchor puncture are
// dropped (basepoint contact, parameter 0/1).
struct RayHit {
  int segment;
  Rational t;
  int gen;
  int dir;  // +1 eastward, -1 westward
};

void scan_ray_hits(const PolyCurve& c, const std::vector<Point>& punctures,
                   const std::set<Point>& anchor_punctures, bool strict_vertices,
                   std::vector<RayHit>& out) {
  for (std::size_t vi = 0; vi < c.verts.size(); ++vi) {
    const Point& v = c.verts[vi];
    for (const auto& p : punctures) {
      if (v == p) {
        if (!anchor_punctures.count(p))
          throw PunctureOnCurve("curve vertex at puncture (" + to_string(p.x) + ", " +
                                to_string(p.y) + ")");
        continue;
      }
      if (strict_vertices && v.x == p.x && v.y > p.y)
        throw DegenerateRayContact("curve vertex on the ray of puncture (" + to_string(p.x) +
                                   ", " + to_string(p.y) + ")");
    }
  }
  int ns = c.segment_count();
  for (int i = 0; i < ns; ++i) {
    const Point& a = c.seg_a(i);
    const Point& b = c.seg_b(i);
    for (std::size_t gi = 0; gi < punctures.size(); ++gi) {
      const Point& p = punctures[gi];
      bool ra = a.x >= p.x, rb = b.x >= p.x;  // half-open: on-column counts right
      if (ra == rb) {
        // a vertical segment exactly on the column could still slide over p
        if (a.x == p.x && b.x == p.x && on_segment(a, b, p))
          throw PunctureOnCurve("curve runs through puncture");
        continue;
      }
      Rational t = b.x == a.x ? Rational(0) : (p.x - a.x) / (b.x - a.x);
      Rational y = a.y + t * (b.y - a.y);
      if (anchor_punctures.count(Point{p.x, y})) continue;  // endpoint contact
      if (y == p.y) {
        throw PunctureOnCurve("curve passes through puncture (" + to_string(p.x) + ", " +
                              to_string(p.y) + ")");
      }
      if (y < p.y) continue;  // below the ray
      out.push_back({i, t, static_cast<int>(gi) + 1, rb ? 1 : -1});
    }
  }
  std::sort(out.begin(), out.end(), [](const RayHit& x, const RayHit& y) {
    if (x.segment != y.segment) return x.segment < y.segment;
    if (x.t != y.t) return x.t < y.t;
    return x.gen < y.gen;
  });
}

}  // namespace

long long winding_number(const PolyCurve& c, const Point& p) {
  if (!c.closed) throw Error("winding_number needs a closed curve");
  for (int i = 0; i < c.segment_count(); ++i)
    if (on_segment(c.seg_a(i), c.seg_b(i), p)) throw PointOnCurve("point lies on the curve");
  std::vector<RayHit> hits;
  scan_ray_hits(c, {p}, {}, false, hits);
  long long w = 0;
  for (const auto& h : hits) w -= h.dir;  // westward crossing of the upward ray is +1 (ccw)
  return w;
}

ReducedWord curve_word(const PolyCurve& c, const PuncturedPlane& plane) {
  if (!c.closed) throw Error("curve_word needs a closed curve");
  if (c.verts[0] != plane.basepoint) throw Error("curve is not based at the plane's basepoint");
  std::vector<RayHit> hits;
  scan_ray_hits(c, plane.punctures, {}, true, hits);
  std::vector<Letter> raw;
  raw.reserve(hits.size());
  for (const auto& h : hits) raw.push_back({h.gen, h.dir});
  return reduce(raw);
}

bool loops_homotopic(const PolyCurve& c1, const PolyCurve& c2, const PuncturedPlane& plane,
                     bool oriented) {
  ReducedWord w1 = curve_word(c1, plane);
  ReducedWord w2 = curve_word(c2, plane);
  if (w1 == w2) return true;
  return !oriented && w1 == invert(w2);
}

namespace {

// Index range [lo, hi) of w with the maximal g_a-power prefix and the maximal
// g_b-power suffix stripped; empty iff w = g_a^p g_b^q exactly. `reversed`
// reads w back to front with flipped signs (i.e. strips w^-1 in place).
struct DcCore {
  std::size_t lo = 0, hi = 0;
  bool reversed = false;
};

DcCore dc_core(const ReducedWord& w, int a, int b, bool reversed) {
  const auto& ls = w.letters;
  std::size_t n = ls.size();
  auto at_gen = [&](std::size_t i) { return reversed ? ls[n - 1 - i].gen : ls[i].gen; };
  auto at_sign = [&](std::size_t i) { return reversed ? -ls[n - 1 - i].sign : ls[i].sign; };
  std::size_t lo = 0, hi = n;
  if (lo < hi && at_gen(lo) == a) {
    int s = at_sign(lo);
    while (lo < hi && at_gen(lo) == a && at_sign(lo) == s) ++lo;
  }
  if (lo < hi && at_gen(hi - 1) == b) {
    int s = at_sign(hi - 1);
    while (hi > lo && at_gen(hi - 1) == b && at_sign(hi - 1) == s) --hi;
  }
  return {lo, hi, reversed};
}

bool cores_equal(const ReducedWord& wa, const DcCore& ca, const ReducedWord& wb,
                 const DcCore& cb) {
  std::size_t len = ca.hi - ca.lo;
  if (cb.hi - cb.lo != len) return false;
  auto get = [](const ReducedWord& w, const DcCore& c, std::size_t i) {
    if (!c.reversed) return w.letters[c.lo + i];
    const Letter& l = w.letters[w.letters.size() - 1 - (c.lo + i)];
    return Letter{l.gen, -l.sign};
  };
  for (std::size_t i = 0; i < len; ++i)
    if (!(get(wa, ca, i) == get(wb, cb, i))) return false;
  return true;
}

}  // namespace

bool double_coset_member(const ReducedWord& g, const ReducedWord& g_prime, int a, int b,
                         bool allow_inverse) {
  DcCore target = dc_core(g_prime, a, b, false);
  bool target_bi = target.lo >= target.hi;
  for (int route = 0; route < (allow_inverse ? 2 : 1); ++route) {
    DcCore h = dc_core(g, a, b, route == 1);
    bool h_bi = h.lo >= h.hi;
    if (target_bi != h_bi) continue;
    if (target_bi || cores_equal(g, h, g_prime, target)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

const Point& DrawnMultigraph::vertex(const std::string& label) const {
  for (const auto& [l, p] : vertices)
    if (l == label) return p;
  throw SchemaError("unknown vertex label '" + label + "'");
}

bool DrawnMultigraph::has_vertex(const std::string& label) const {
  for (const auto& [l, p] : vertices)
    if (l == label) return true;
  return false;
}

namespace {

std::vector<Point> sorted_vertex_points(const DrawnMultigraph& g) {
  std::vector<Point> pts;
  pts.reserve(g.vertices.size());
  for (const auto& [l, p] : g.vertices) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] == pts[i + 1]) throw InvalidInstance("duplicate vertex point");
    if (pts[i].x == pts[i + 1].x)
      throw InvalidInstance("vertices share a vertical line; edge words would be ambiguous");
  }
  return pts;
}

ReducedWord path_or_loop_word(const DrawnMultigraph& g, const PolyCurve& c,
                              const std::set<Point>& anchors) {
  std::vector<Point> punctures = sorted_vertex_points(g);
  std::vector<RayHit> hits;
  scan_ray_hits(c, punctures, anchors, false, hits);
  std::vector<Letter> raw;
  for (const auto& h : hits) raw.push_back({h.gen, h.dir});
  return reduce(raw);
}

}  // namespace

int vertex_generator_index(const DrawnMultigraph& g, const std::string& label) {
  std::vector<Point> pts = sorted_vertex_points(g);
  const Point& target = g.vertex(label);
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i] == target) return static_cast<int>(i) + 1;
  throw SchemaError("vertex not found");
}

ReducedWord edge_word(const DrawnMultigraph& g, const MultiEdge& e) {
  std::set<Point> anchors{g.vertex(e.u), g.vertex(e.v)};
  return path_or_loop_word(g, e.curve, anchors);
}

bool is_trivial_loop(const MultiEdge& e, const DrawnMultigraph& g) {
  if (e.u != e.v) throw Error("is_trivial_loop expects a loop edge");
  ReducedWord w = edge_word(g, e);
  return w.is_power_of(vertex_generator_index(g, e.u));
}

bool edges_homotopic(const MultiEdge& e1, const MultiEdge& e2, const DrawnMultigraph& g) {
  bool same = e1.u == e2.u && e1.v == e2.v;
  bool swapped = e1.u == e2.v && e1.v == e2.u;
  if (!same && !swapped) throw NotParallel("edges do not share their endpoint set");
  int gu = vertex_generator_index(g, e1.u);
  int gv = vertex_generator_index(g, e1.v);
  if (e1.u == e1.v) {
    ReducedWord w1 = edge_word(g, e1);
    ReducedWord w2 = edge_word(g, e2);
    return double_coset_member(w1, w2, gu, gu, true);
  }
  MultiEdge other = e2;
  if (!same) {
    std::swap(other.u, other.v);
    other.curve = e2.curve.reversed();
  }
  ReducedWord w1 = edge_word(g, e1);
  ReducedWord w2 = edge_word(g, other);
  // rel-endpoint homotopy of u->v paths: w2 = g_u^s w1 g_v^t, no inverse route
  return double_coset_member(w1, w2, gu, gv, false);
}

NonHomotopicReport validate_nonhomotopic(const DrawnMultigraph& g) {
  NonHomotopicReport rep;
  std::vector<PolyCurve> family;
  family.reserve(g.edges.size());
  for (const auto& e : g.edges) family.push_back(e.curve);
  rep.violations = check_general_position(family, nullptr);

  // no edge interior through any vertex
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const PolyCurve& c = g.edges[i].curve;
    const Point& pu = g.vertex(g.edges[i].u);
    const Point& pv = g.vertex(g.edges[i].v);
    for (int s = 0; s < c.segment_count(); ++s)
      for (const auto& [label, p] : g.vertices) {
        if (!on_segment(c.seg_a(s), c.seg_b(s), p)) continue;
        bool endpoint = (p == pu || p == pv) && (p == c.seg_a(s) || p == c.seg_b(s));
        if (!endpoint)
          rep.violations.push_back({Violation::ThroughPuncture, static_cast<int>(i), -1, s, -1,
                                    "edge through vertex '" + label + "'"});
      }
  }
  if (!rep.violations.empty()) return rep;

  for (const auto& e : g.edges)
    if (e.u == e.v && is_trivial_loop(e, g)) rep.trivial_loops.push_back(e.id);

  for (std::size_t i = 0; i < g.edges.size(); ++i)
    for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
      const MultiEdge& a = g.edges[i];
      const MultiEdge& b = g.edges[j];
      bool parallel = (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
      if (!parallel) continue;
      if (edges_homotopic(a, b, g)) rep.homotopic_pairs.push_back({a.id, b.id});
    }
  return rep;
}

CrossingStats family_crossing_stats(const std::vector<PolyCurve>& family) {
  CrossingStats st;
  auto m = crossing_matrix(family);
  for (std::size_t i = 0; i < family.size(); ++i) {
    st.self_crossings += m[i][i];
    st.max_self = std::max(st.max_self, m[i][i]);
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      st.pair_crossings += m[i][j];
      st.max_pairwise = std::max(st.max_pairwise, m[i][j]);
      if (m[i][j] > 0) ++st.crossing_pairs;
    }
  }
  st.cr = st.self_crossings + st.pair_crossings;
  return st;
}

CrossingStats multigraph_crossing_stats(const DrawnMultigraph& g) {
  std::vector<PolyCurve> family;
  family.reserve(g.edges.size());
  for (const auto& e : g.edges) family.push_back(e.curve);
  return family_crossing_stats(family);
}

}  // namespace loopcross
