#include "loopcross/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "loopcross/homotopy.hpp"

namespace loopcross {

int orient(const Point& a, const Point& b, const Point& c) {
  Rational d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sign_of(d);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

PolyCurve::PolyCurve(std::vector<Point> v, bool c) : verts(std::move(v)), closed(c) {
  if (verts.size() < 2) throw Error("PolyCurve needs at least 2 vertices");
  if (closed && verts.size() < 3) throw Error("closed PolyCurve needs at least 3 vertices");
  for (std::size_t i = 0; i + 1 < verts.size(); ++i)
    if (verts[i] == verts[i + 1]) throw Error("zero-length segment in PolyCurve");
  if (closed && verts.back() == verts.front())
    throw Error("closed PolyCurve must not repeat its basepoint");
}

PolyCurve PolyCurve::reversed() const {
  std::vector<Point> v;
  if (closed) {
    // keep the basepoint first, reverse the rest
    v.push_back(verts[0]);
    for (std::size_t i = verts.size() - 1; i >= 1; --i) v.push_back(verts[i]);
  } else {
    v.assign(verts.rbegin(), verts.rend());
  }
  return PolyCurve(std::move(v), closed);
}

PolyCurve PolyCurve::translated(const Point& d) const {
  std::vector<Point> v = verts;
  for (auto& p : v) p = p + d;
  return PolyCurve(std::move(v), closed);
}

namespace {

// ---------------------------------------------------------------------------
// scaled integer fast path

struct IPt {
  long long x, y;
};

inline int orient_i(const IPt& a, const IPt& b, const IPt& c) {
  __int128 d = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
               static_cast<__int128>(b.y - a.y) * (c.x - a.x);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

struct ScaledCurve {
  std::vector<IPt> pts;          // verts, same indexing as PolyCurve
  std::vector<long long> bb[4];  // per-segment xmin,xmax,ymin,ymax
};

struct ScaledFamily {
  bool ok = false;
  std::vector<ScaledCurve> curves;
};

const long long kScaleLimit = 1LL << 60;

ScaledFamily try_scale(const std::vector<const PolyCurve*>& curves) {
  ScaledFamily sf;
  Integer L = 1;
  for (const auto* c : curves)
    for (const auto& p : c->verts) {
      L = boost::multiprecision::lcm(L, den(p.x));
      L = boost::multiprecision::lcm(L, den(p.y));
      if (boost::multiprecision::msb(L) > 100) return sf;  // denominators too wild
    }
  sf.curves.resize(curves.size());
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const PolyCurve& c = *curves[ci];
    ScaledCurve& sc = sf.curves[ci];
    sc.pts.reserve(c.verts.size());
    for (const auto& p : c.verts) {
      Integer sx = num(p.x) * (L / den(p.x));
      Integer sy = num(p.y) * (L / den(p.y));
      if (abs(sx) >= kScaleLimit || abs(sy) >= kScaleLimit) return sf;
      sc.pts.push_back({sx.convert_to<long long>(), sy.convert_to<long long>()});
    }
    int ns = c.segment_count();
    for (int k = 0; k < 4; ++k) sc.bb[k].resize(ns);
    for (int i = 0; i < ns; ++i) {
      const IPt& a = sc.pts[i];
      const IPt& b = sc.pts[(i + 1) % sc.pts.size()];
      sc.bb[0][i] = std::min(a.x, b.x);
      sc.bb[1][i] = std::max(a.x, b.x);
      sc.bb[2][i] = std::min(a.y, b.y);
      sc.bb[3][i] = std::max(a.y, b.y);
    }
  }
  sf.ok = true;
  return sf;
}

// ---------------------------------------------------------------------------
// segment pair classification

enum class SegKind { None, Proper, Touch, Overlap };

// orientation-based classification shared by both kernels
template <class PT, class OrientFn>
SegKind classify(const PT& p1, const PT& q1, const PT& p2, const PT& q2, OrientFn orient_fn) {
  int o1 = orient_fn(p1, q1, p2);
  int o2 = orient_fn(p1, q1, q2);
  int o3 = orient_fn(p2, q2, p1);
  int o4 = orient_fn(p2, q2, q1);
  if ((o1 > 0 && o2 > 0) || (o1 < 0 && o2 < 0) || (o3 > 0 && o4 > 0) || (o3 < 0 && o4 < 0))
    return SegKind::None;
  if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return SegKind::Proper;
  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) return SegKind::Overlap;  // collinear: refine later
  return SegKind::Touch;
}

struct SegPair {
  int i, j;
  SegKind kind;
};

// Rational detail for a Touch/Overlap pair: the set of contact points, or
// overlap flag when the common part has positive length.
struct ContactDetail {
  bool overlap = false;
  std::vector<Point> points;
};

ContactDetail contact_detail(const Point& p1, const Point& q1, const Point& p2, const Point& q2) {
  ContactDetail d;
  bool collinear = orient(p1, q1, p2) == 0 && orient(p1, q1, q2) == 0;
  if (collinear) {
    // project on the dominant axis of segment 1
    bool usex = p1.x != q1.x;
    auto key = [&](const Point& p) { return usex ? p.x : p.y; };
    Rational lo1 = std::min(key(p1), key(q1)), hi1 = std::max(key(p1), key(q1));
    Rational lo2 = std::min(key(p2), key(q2)), hi2 = std::max(key(p2), key(q2));
    Rational lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo > hi) return d;
    if (lo < hi) {
      d.overlap = true;
      return d;
    }
    for (const Point* p : {&p1, &q1, &p2, &q2})
      if (key(*p) == lo) {
        d.points.push_back(*p);
        break;
      }
    return d;
  }
  auto add = [&](const Point& p) {
    for (const auto& q : d.points)
      if (q == p) return;
    d.points.push_back(p);
  };
  if (on_segment(p2, q2, p1)) add(p1);
  if (on_segment(p2, q2, q1)) add(q1);
  if (on_segment(p1, q1, p2)) add(p2);
  if (on_segment(p1, q1, q2)) add(q2);
  return d;
}

// exact crossing point of properly crossing segments
void proper_crossing(const Point& p1, const Point& q1, const Point& p2, const Point& q2,
                     Rational& t1, Rational& t2, Point& loc) {
  Point d1 = q1 - p1, d2 = q2 - p2, e = p2 - p1;
  Rational denom = d1.x * d2.y - d1.y * d2.x;
  t1 = (e.x * d2.y - e.y * d2.x) / denom;
  t2 = (e.x * d1.y - e.y * d1.x) / denom;
  loc = {p1.x + t1 * d1.x, p1.y + t1 * d1.y};
}

bool is_anchor(const PolyCurve& c, const Point& p) {
  if (c.closed) return p == c.verts.front();
  return p == c.verts.front() || p == c.verts.back();
}

// Enumerates candidate segment pairs between two curves (or within one curve
// when c2 == nullptr), fast-classified; Touch/Overlap are re-examined by the
// caller with rational detail.
template <class Sink>
void scan_pairs(const PolyCurve& c1, const PolyCurve* c2, const ScaledCurve* s1,
                const ScaledCurve* s2, Sink&& sink) {
  const bool self = c2 == nullptr;
  const PolyCurve& cc2 = self ? c1 : *c2;
  int n1 = c1.segment_count(), n2 = cc2.segment_count();
  auto adjacent = [&](int i, int j) {
    if (!self) return false;
    if (j == i + 1) return true;
    return c1.closed && i == 0 && j == n1 - 1;
  };
  for (int i = 0; i < n1; ++i) {
    for (int j = self ? i + 1 : 0; j < n2; ++j) {
      SegKind k;
      if (s1) {
        const ScaledCurve& t2 = self ? *s1 : *s2;
        if (s1->bb[1][i] < t2.bb[0][j] || t2.bb[1][j] < s1->bb[0][i] ||
            s1->bb[3][i] < t2.bb[2][j] || t2.bb[3][j] < s1->bb[2][i])
          continue;
        const IPt& a = s1->pts[i];
        const IPt& b = s1->pts[(i + 1) % s1->pts.size()];
        const IPt& c = t2.pts[j];
        const IPt& d = t2.pts[(j + 1) % t2.pts.size()];
        k = classify(a, b, c, d, orient_i);
      } else {
        k = classify(c1.seg_a(i), c1.seg_b(i), cc2.seg_a(j), cc2.seg_b(j),
                     [](const Point& a, const Point& b, const Point& c) { return orient(a, b, c); });
      }
      if (k == SegKind::None) continue;
      if (adjacent(i, j)) {
        // adjacent segments legitimately touch at their shared vertex; anything
        // beyond that is a spur / fold-back
        if (k == SegKind::Proper) {
          sink(i, j, SegKind::Touch, true);
          continue;
        }
        ContactDetail d = contact_detail(c1.seg_a(i), c1.seg_b(i), cc2.seg_a(j), cc2.seg_b(j));
        const Point& shared = c1.seg_b(i) == cc2.seg_a(j) ? c1.seg_b(i) : c1.seg_a(i);
        bool bad = d.overlap;
        for (const auto& p : d.points)
          if (!(p == shared)) bad = true;
        if (bad) sink(i, j, SegKind::Touch, true);
        continue;
      }
      sink(i, j, k, false);
    }
  }
}

struct PairScan {
  std::vector<CrossingRecord> records;
  std::vector<Violation> violations;
};

void scan_curve_pair(const PolyCurve& c1, const PolyCurve& c2, int id1, int id2,
                     const ScaledCurve* s1, const ScaledCurve* s2, PairScan& out,
                     bool want_records) {
  scan_pairs(c1, &c2, s1, s2, [&](int i, int j, SegKind k, bool) {
    if (k == SegKind::Proper) {
      Rational t1, t2;
      Point loc;
      proper_crossing(c1.seg_a(i), c1.seg_b(i), c2.seg_a(j), c2.seg_b(j), t1, t2, loc);
      CrossingRecord r;
      r.curve_a = id1;
      r.curve_b = id2;
      r.param_a = {i, t1};
      r.param_b = {j, t2};
      r.location = loc;
      out.records.push_back(std::move(r));
      if (!want_records) out.records.back().location = loc;  // keep; counting strips later
      return;
    }
    ContactDetail d = contact_detail(c1.seg_a(i), c1.seg_b(i), c2.seg_a(j), c2.seg_b(j));
    if (d.overlap) {
      out.violations.push_back({Violation::Overlap, id1, id2, i, j, "collinear overlap"});
      return;
    }
    for (const auto& p : d.points) {
      bool seg_end_1 = p == c1.seg_a(i) || p == c1.seg_b(i);
      bool seg_end_2 = p == c2.seg_a(j) || p == c2.seg_b(j);
      if (seg_end_1 && seg_end_2 && is_anchor(c1, p) && is_anchor(c2, p)) continue;
      Violation::Kind kind =
          (seg_end_1 && seg_end_2) ? Violation::VertexOnCurve
          : (seg_end_1 || seg_end_2) ? Violation::VertexOnCurve
                                     : Violation::ImproperContact;
      out.violations.push_back({kind, id1, id2, i, j,
                                "contact at (" + to_string(p.x) + ", " + to_string(p.y) + ")"});
    }
  });
}

void scan_curve_self(const PolyCurve& c, int id, const ScaledCurve* sc, PairScan& out) {
  scan_pairs(c, nullptr, sc, nullptr, [&](int i, int j, SegKind k, bool adj_bad) {
    if (adj_bad) {
      out.violations.push_back({Violation::DegenerateCurve, id, id, i, j, "spur / fold-back"});
      return;
    }
    if (k == SegKind::Proper) {
      Rational t1, t2;
      Point loc;
      proper_crossing(c.seg_a(i), c.seg_b(i), c.seg_a(j), c.seg_b(j), t1, t2, loc);
      CrossingRecord r;
      r.curve_a = id;
      r.curve_b = id;
      r.param_a = {i, t1};
      r.param_b = {j, t2};
      r.location = loc;
      out.records.push_back(std::move(r));
      return;
    }
    ContactDetail d = contact_detail(c.seg_a(i), c.seg_b(i), c.seg_a(j), c.seg_b(j));
    if (d.overlap) {
      out.violations.push_back({Violation::Overlap, id, id, i, j, "self overlap"});
      return;
    }
    for (const auto& p : d.points)
      out.violations.push_back({Violation::ImproperContact, id, id, i, j,
                                "self contact at (" + to_string(p.x) + ", " + to_string(p.y) + ")"});
  });
}

void throw_if_violated(const PairScan& s) {
  if (s.violations.empty()) return;
  const Violation& v = s.violations.front();
  throw GeneralPositionViolation("general position violated: " + v.detail + " [curves " +
                                 std::to_string(v.curve_a) + "/" + std::to_string(v.curve_b) +
                                 ", segments " + std::to_string(v.seg_a) + "/" +
                                 std::to_string(v.seg_b) + "]");
}

}  // namespace

std::vector<CrossingRecord> curve_pair_crossings(const PolyCurve& c1, const PolyCurve& c2) {
  ScaledFamily sf = try_scale({&c1, &c2});
  PairScan s;
  scan_curve_pair(c1, c2, 0, 1, sf.ok ? &sf.curves[0] : nullptr, sf.ok ? &sf.curves[1] : nullptr,
                  s, true);
  throw_if_violated(s);
  std::sort(s.records.begin(), s.records.end(),
            [](const CrossingRecord& a, const CrossingRecord& b) { return a.param_a < b.param_a; });
  return s.records;
}

std::vector<CrossingRecord> curve_self_crossings(const PolyCurve& c) {
  ScaledFamily sf = try_scale({&c});
  PairScan s;
  scan_curve_self(c, 0, sf.ok ? &sf.curves[0] : nullptr, s);
  throw_if_violated(s);
  std::sort(s.records.begin(), s.records.end(),
            [](const CrossingRecord& a, const CrossingRecord& b) { return a.param_a < b.param_a; });
  return s.records;
}

long long count_pair_crossings(const PolyCurve& c1, const PolyCurve& c2) {
  return static_cast<long long>(curve_pair_crossings(c1, c2).size());
}

long long count_self_crossings(const PolyCurve& c) {
  return static_cast<long long>(curve_self_crossings(c).size());
}

std::vector<std::vector<long long>> crossing_matrix(const std::vector<PolyCurve>& family) {
  std::vector<const PolyCurve*> ptrs;
  for (const auto& c : family) ptrs.push_back(&c);
  ScaledFamily sf = try_scale(ptrs);
  std::size_t n = family.size();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    PairScan s;
    scan_curve_self(family[i], static_cast<int>(i), sf.ok ? &sf.curves[i] : nullptr, s);
    throw_if_violated(s);
    m[i][i] = static_cast<long long>(s.records.size());
    for (std::size_t j = i + 1; j < n; ++j) {
      PairScan p;
      scan_curve_pair(family[i], family[j], static_cast<int>(i), static_cast<int>(j),
                      sf.ok ? &sf.curves[i] : nullptr, sf.ok ? &sf.curves[j] : nullptr, p, false);
      throw_if_violated(p);
      m[i][j] = m[j][i] = static_cast<long long>(p.records.size());
    }
  }
  return m;
}

std::vector<Violation> check_general_position(const std::vector<PolyCurve>& family,
                                               const PuncturedPlane* plane) {
  std::vector<Violation> out;
  std::vector<const PolyCurve*> ptrs;
  for (const auto& c : family) ptrs.push_back(&c);
  ScaledFamily sf = try_scale(ptrs);

  // per-curve: spurs and self contacts; collect proper self-crossing points
  std::map<Point, std::vector<std::pair<int, int>>> hit_points;
  auto note_hit = [&](const Point& p, int a, int b) { hit_points[p].push_back({a, b}); };

  for (std::size_t i = 0; i < family.size(); ++i) {
    PairScan s;
    scan_curve_self(family[i], static_cast<int>(i), sf.ok ? &sf.curves[i] : nullptr, s);
    for (auto& v : s.violations) out.push_back(std::move(v));
    for (const auto& r : s.records) note_hit(r.location, static_cast<int>(i), static_cast<int>(i));
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      PairScan s;
      scan_curve_pair(family[i], family[j], static_cast<int>(i), static_cast<int>(j),
                      sf.ok ? &sf.curves[i] : nullptr, sf.ok ? &sf.curves[j] : nullptr, s, false);
      for (auto& v : s.violations) out.push_back(std::move(v));
      for (const auto& r : s.records) note_hit(r.location, static_cast<int>(i), static_cast<int>(j));
    }

  for (const auto& [p, hits] : hit_points)
    if (hits.size() > 1)
      out.push_back({Violation::TriplePoint, hits[0].first, hits[1].first, -1, -1,
                     "multiple crossings at (" + to_string(p.x) + ", " + to_string(p.y) + ")"});

  if (plane) {
    std::vector<Point> special = plane->punctures;
    special.push_back(plane->basepoint);
    for (std::size_t i = 0; i < family.size(); ++i) {
      const PolyCurve& c = family[i];
      for (int s = 0; s < c.segment_count(); ++s) {
        const Point& a = c.seg_a(s);
        const Point& b = c.seg_b(s);
        for (std::size_t k = 0; k < special.size(); ++k) {
          const Point& p = special[k];
          if (!on_segment(a, b, p)) continue;
          bool at_vertex = p == a || p == b;
          bool basepoint = k + 1 == special.size();
          if (basepoint && at_vertex && is_anchor(c, p)) continue;
          out.push_back({Violation::ThroughPuncture, static_cast<int>(i), -1, s, -1,
                         std::string(basepoint ? "basepoint" : "puncture") + " on curve at (" +
                             to_string(p.x) + ", " + to_string(p.y) + ")"});
        }
      }
      for (std::size_t vi = 0; vi < c.verts.size(); ++vi)
        for (const Point& p : plane->punctures)
          if (c.verts[vi].x == p.x)
            out.push_back({Violation::PunctureColumn, static_cast<int>(i), -1,
                           static_cast<int>(vi), -1,
                           "vertex shares puncture column x = " + to_string(p.x)});
    }
  }
  return out;
}

std::vector<PolyCurve> perturb_family(const std::vector<PolyCurve>& family, Rational epsilon,
                                      const PuncturedPlane* plane) {
  if (epsilon <= 0) throw ParameterOutOfRange("perturb_family needs epsilon > 0");
  const std::size_t n = family.size();
  for (int attempt = 0; attempt < 64; ++attempt) {
    // the ladder ratio changes with the attempt so retries also escape
    // scale-invariant degeneracies (offsets parallel to an input segment)
    Rational ratio(2, 2 * attempt + 3);
    std::vector<PolyCurve> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const PolyCurve& c = family[i];
      Rational mu = Rational(static_cast<long long>(i) + 1) * epsilon /
                    Rational(static_cast<long long>(n) + 1);
      std::vector<Point> v = c.verts;
      std::size_t lo = 1, hi = c.closed ? v.size() : v.size() - 1;
      // The horizontal shift is shared by all curves (clears puncture columns
      // without creating slivers between aligned vertices); heights nest on a
      // per-curve geometric ladder. The last two interior vertices descend,
      // the second-to-last slants east and the last swings west, so a curve's
      // return strands nest instead of piercing the shorter returns.
      Rational ladder = ratio;
      Rational shift = epsilon / 3;
      for (std::size_t j = lo; j < hi; ++j) {
        bool last = j + 1 == hi;
        bool second_last = j + 2 == hi;
        if (last)
          v[j].x -= mu;
        else if (second_last)
          v[j].x += shift + mu;
        else
          v[j].x += shift;
        bool tail = j + 2 >= hi;
        v[j].y += tail ? Rational(-mu * ladder) : Rational(mu * ladder);
        ladder = ladder * ratio;
      }
      out.emplace_back(std::move(v), c.closed);
    }
    if (check_general_position(out, plane).empty()) return out;
    epsilon /= 2;
  }
  throw PerturbationFailed("perturb_family: retry budget exhausted");
}

}  // namespace loopcross
