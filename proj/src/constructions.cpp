#include "loopcross/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "loopcross/arrangement.hpp"

namespace loopcross {

namespace {

Rational rat(long long p, long long q = 1) { return Rational(p, q); }

int sign_changes(unsigned long long mask, int n) {
  int c = 0;
  for (int i = 0; i + 1 < n; ++i)
    if (((mask >> i) & 1) != ((mask >> (i + 1)) & 1)) ++c;
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// elementary loops

PuncturedPlane elementary_plane(int n) {
  std::vector<Point> punctures;
  for (int i = 1; i <= n; ++i) punctures.push_back({rat(i), rat(0)});
  return PuncturedPlane(punctures, {rat(0), rat(-1)});
}

namespace {

// Suffix of the sign vector after column i, reversed so that column i+1 is
// the most significant bit: at a shared-sign column the next differing column
// decides which loop runs above.
unsigned long long rev_suffix(unsigned long long m, int i, int n) {
  unsigned long long out = 0;
  for (int c = i + 1; c <= n; ++c)
    if ((m >> (c - 1)) & 1) out |= 1ull << (n - c);
  return out;
}

// One elementary loop at its final (already perturbed) coordinates. The
// per-column nesting order is (reversed suffix, full sign value): the closing
// strands then stay in the column-n order and two loops cross exactly once
// per order flip, at most min(sign changes) times.
PolyCurve elementary_loop(int n, unsigned long long mask) {
  Rational eps_hat(1, Integer(1) << (3 * n + 6));
  Rational shift(1, 3);
  long long delta = static_cast<long long>(mask);
  Rational t = delta * eps_hat;  // tail rank
  Rational lx = rat(n) + rat(4, 3);

  std::vector<Point> v;
  v.push_back({rat(0), rat(-1)});
  for (int i = 1; i <= n; ++i) {
    Rational y = ((mask >> (i - 1)) & 1) ? rat(1, 2) : rat(-1, 2);
    Integer rank = Integer(rev_suffix(mask, i, n)) * (Integer(1) << n) + delta;
    v.push_back({rat(i) + shift, y + rank * eps_hat});
  }
  v.push_back({lx, rat(-1) + t / 2});
  v.push_back({lx + 1 + t / 4, rat(-1) + t / 2});
  v.push_back({lx + 1 + t / 4, rat(-2) - t / 8});
  v.push_back({rat(-1, 4) - t / 2, rat(-2) - t / 8});
  return PolyCurve(std::move(v), true);
}

}  // namespace

LoopFamily gen_elementary_loops(int n, int k) {
  if (n < 1 || n > 62) throw ParameterOutOfRange("gen_elementary_loops needs 1 <= n <= 62");
  if (k < 1 || k > n) throw ParameterOutOfRange("gen_elementary_loops needs 1 <= k <= n");
  LoopFamily fam{elementary_plane(n), {}, {}};
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask)
    if (sign_changes(mask, n) <= k - 1) fam.loops.push_back(elementary_loop(n, mask));
  return fam;
}

std::vector<PolyCurve> unperturbed_elementary_loops(int n) {
  if (n < 1 || n > 62) throw ParameterOutOfRange("unperturbed_elementary_loops needs 1 <= n <= 62");
  std::vector<PolyCurve> out;
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    std::vector<Point> v;
    v.push_back({rat(0), rat(-1)});
    for (int i = 1; i <= n; ++i)
      v.push_back({rat(i), ((mask >> (i - 1)) & 1) ? rat(1, 2) : rat(-1, 2)});
    // return tail shared by every loop until perturbed apart
    v.push_back({rat(n + 1), rat(-1)});
    v.push_back({rat(n + 2), rat(-1)});
    v.push_back({rat(n + 2), rat(-2)});
    v.push_back({rat(-1, 4), rat(-2)});
    out.emplace_back(std::move(v), true);
  }
  return out;
}

// ---------------------------------------------------------------------------
// concatenated loops

namespace {

// Piece ranks: T = delta * epsT + mu * theta^((r-1)*layer), with the first
// piece boosted above every anchor-started strand. All tail offsets scale
// with the rank, which keeps the tail strands crossing-free except for the
// single allowed swap where a riser hands over to its anchor.
struct ConcatGeom {
  int n, j;
  Rational epsT, eps_rev, mu_unit, boost, dband;
  int layer;

  Rational theta_pow(long long e) const { return Rational(1, Integer(1) << e); }

  // rank of a piece: boosted first pieces above every anchor-started strand,
  // then the sign value, then the per-(loop,piece) ladder
  Rational rank(long long loop_index, int piece, long long delta) const {
    Rational t = delta * epsT + (loop_index + 1) * mu_unit *
                                    theta_pow(static_cast<long long>(piece - 1) * layer);
    if (piece == 1) t += boost;
    return t;
  }
};

}  // namespace

LoopFamily gen_concatenated_loops(int n, int j) {
  if (n < 2 || n > 8) throw ParameterOutOfRange("gen_concatenated_loops needs 2 <= n <= 8");
  if (j < 3 || j > 13 || static_cast<long long>(j) * (n - 1) > 26)
    throw ParameterOutOfRange("gen_concatenated_loops needs 3 <= j <= 13 at desk scale");

  ConcatGeom g;
  g.n = n;
  g.j = j;
  g.layer = n + 6;
  g.epsT = Rational(1, (Integer(1) << (2 * n + 6)) * (j + 2));
  long long loops_total = 1ll << (static_cast<long long>(j) * (n - 1));
  g.mu_unit = g.epsT / ((Integer(loops_total) + 2) * 2);
  g.eps_rev = g.epsT * (Integer(1) << (n + 1));
  g.boost = g.epsT * (Integer(1) << (2 * n + 2));
  g.dband = Rational(1, 4 * (j + 2));

  Rational shift(1, 3);
  Rational lx = rat(n) + rat(4, 3);
  const Rational c1(1, 2), c2(1, 4), c3(1, 8), c4(1, 2);

  LoopFamily fam{elementary_plane(n), {}, {}};
  long long pieces_per = 1ll << (n - 1);

  for (long long ell = 0; ell < loops_total; ++ell) {
    std::vector<Point> v;
    v.push_back({rat(0), rat(-1)});
    for (int r = 1; r <= j; ++r) {
      long long digit = (ell >> (static_cast<long long>(r - 1) * (n - 1))) % pieces_per;
      unsigned long long mask = (static_cast<unsigned long long>(digit) << 1) | 1;  // sigma_1 = +
      long long delta = static_cast<long long>(mask);
      Rational t = g.rank(ell, r, delta);
      for (int i = 1; i <= n; ++i) {
        Rational y = ((mask >> (i - 1)) & 1) ? rat(1, 2) : rat(-1, 2);
        y += Integer(rev_suffix(mask, i, n)) * g.eps_rev + delta * g.epsT +
             (ell + 1) * g.mu_unit * g.theta_pow(static_cast<long long>(r - 1) * g.layer + i) +
             (r == 1 ? g.boost : Rational(0));
        v.push_back({rat(i) + shift, y});
      }
      // tail: terminal, extension, dive, flat, then the riser to the anchor
      v.push_back({lx, rat(-1) + t * c1});
      v.push_back({lx + 1 + t * c2, rat(-1) + t * c1});
      v.push_back({lx + 1 + t * c2, rat(-2) - t * c3});
      v.push_back({rat(-1, 4) - t * c4, rat(-2) - t * c3});
      if (r < j) {
        long long digit_next =
            (ell >> (static_cast<long long>(r) * (n - 1))) % pieces_per;
        unsigned long long mask_next = (static_cast<unsigned long long>(digit_next) << 1) | 1;
        Rational rank_next = g.rank(ell, r + 1, static_cast<long long>(mask_next));
        v.push_back({rat(0), rat(-1) - r * g.dband + rank_next / 4});
      }
    }
    fam.loops.emplace_back(std::move(v), true);
  }
  return fam;
}

// ---------------------------------------------------------------------------
// winding loops: nested coils through a shared corridor

namespace {

struct CorridorGeom {
  long long kcap = 1;  // max |w|
  int slots = 1;       // loops incl. the trivial one
  Rational u, h, Y, P;
  Rational max_lane;

  Rational rho(int slot, long long t, long long w_abs) const {
    return rat(2) + rat((slots - slot) * (kcap + 2)) + rat(w_abs - t + 1);
  }
  Rational lane_a(int slot, long long t, long long w_abs) const {
    return u * rat((slots - slot) * (4 * kcap + 8) + 4 * (w_abs - t) + 6);
  }
  Rational lane_b(int slot, long long t, long long w_abs) const {
    return u * rat((slots - slot) * (4 * kcap + 8) + 4 * (w_abs - t) + 4);
  }
  Rational eta(int slot, long long t) const {
    return -Y + rat(slot * (kcap + 3) + t) * h;
  }
  Rational e_chord(int slot) const { return -Y + (rat(slot * (kcap + 3)) - 1) * h; }
  Rational e_desc(int slot) const { return -Y + (rat(slot * (kcap + 3)) - 2) * h; }
};

CorridorGeom corridor_geometry(const std::vector<long long>& ws) {
  CorridorGeom g;
  g.slots = static_cast<int>(ws.size());
  g.kcap = 1;
  for (long long w : ws) g.kcap = std::max(g.kcap, std::llabs(w));
  g.u = Rational(1, Integer(8) * g.slots * (4 * g.kcap + 8));
  g.h = Rational(1, Integer(2) * (g.slots + 1) * (g.kcap + 3));
  g.P = rat(2) + rat((g.slots - 1) * (g.kcap + 2)) + rat(g.kcap + 1);
  g.Y = g.P + rat(g.slots + 2);
  g.max_lane = g.u * rat((g.slots - 1) * (4 * g.kcap + 8) + 4 * g.kcap + 6);
  return g;
}

// Coil for winding w at nesting slot `slot` (1 = outermost). The trivial loop
// is a small triangle hanging under the basepoint.
PolyCurve corridor_coil(const CorridorGeom& g, int slot, long long w) {
  const Rational bx(1, 2);
  const Point x0{bx, -g.Y};
  if (w == 0) {
    return PolyCurve({x0, {bx + rat(1, 8), -g.Y - rat(1, 8)}, {bx - rat(1, 8), -g.Y - rat(1, 8)}},
                     true);
  }
  long long W = std::llabs(w);
  std::vector<Point> v;
  v.push_back(x0);
  v.push_back({bx + g.lane_a(slot, 1, W), g.e_chord(slot)});
  v.push_back({bx + g.lane_a(slot, 1, W), -g.rho(slot, 1, W)});
  for (long long t = 1; t <= W; ++t) {
    Rational r = g.rho(slot, t, W);
    v.push_back({r, -r});
    v.push_back({r, r});
    v.push_back({-r, r});
    v.push_back({-r, -r});
    v.push_back({bx - g.lane_b(slot, t, W), -r});
    if (t < W) {
      v.push_back({bx - g.lane_b(slot, t, W), g.eta(slot, t)});
      v.push_back({bx + g.lane_a(slot, t + 1, W), g.eta(slot, t)});
      v.push_back({bx + g.lane_a(slot, t + 1, W), -g.rho(slot, t + 1, W)});
    }
  }
  v.push_back({bx - g.lane_b(slot, W, W), g.e_desc(slot)});
  PolyCurve c(std::move(v), true);
  return w > 0 ? c : c.reversed();
}

// Outermost winding-2 loop for the k == 2 family: a keyhole around the whole
// corridor family plus one big turn around the basepoint, crossing itself once
// on the way back.
PolyCurve ibc_two(const CorridorGeom& g) {
  const Rational bx(1, 2);
  const Point x0{bx, -g.Y};
  Rational rs = g.P + 2;
  Rational lam_e = rat(1, 4);
  Rational lam_w = rat(3, 16);
  Rational d0 = g.h / 2;
  Rational d1 = g.h / 3;
  Rational big = g.Y + 2;
  std::vector<Point> v{
      x0,
      {bx + lam_e, -g.Y + d0},
      {bx + lam_e, -rs},
      {rs, -rs},
      {rs, rs},
      {-rs, rs},
      {-rs, -rs},
      {bx - lam_w, -rs},
      {bx - lam_w, -g.Y + d1},
      {-big, -g.Y + d1},
      {-big, -big},
      {big, -big},
      {big, big},
      {-big - 1, big},
      {-big - 1, -g.Y - 1},
      {bx + 2, -g.Y - 1},
  };
  return PolyCurve(std::move(v), true);
}

}  // namespace

LoopFamily gen_winding_loops(long long k) {
  if (k < 1) throw ParameterOutOfRange("gen_winding_loops needs k >= 1");
  // nesting order: ascending |w|, so small coils sit outside and only pairs
  // with both |w| >= 2 ever cross
  std::vector<long long> order;
  order.push_back(0);
  for (long long a = 1; a <= k; ++a) {
    order.push_back(-a);
    order.push_back(a);
  }
  std::vector<std::pair<long long, PolyCurve>> built;
  CorridorGeom g =
      corridor_geometry(k == 2 ? std::vector<long long>{0, -1, 1, -2} : order);
  if (k == 2) {
    std::vector<long long> inner{0, -1, 1, -2};
    for (int s = 0; s < static_cast<int>(inner.size()); ++s)
      built.push_back({inner[s], corridor_coil(g, s + 1, inner[s])});
    built.push_back({2, ibc_two(g)});
  } else {
    for (int s = 0; s < static_cast<int>(order.size()); ++s)
      built.push_back({order[s], corridor_coil(g, s + 1, order[s])});
  }
  std::sort(built.begin(), built.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  LoopFamily fam{PuncturedPlane({{rat(0), rat(0)}}, {rat(1, 2), -g.Y}), {}, {}};
  for (auto& [w, c] : built) {
    fam.windings.push_back(w);
    fam.loops.push_back(std::move(c));
  }
  return fam;
}

// ---------------------------------------------------------------------------
// loose extremal multigraph

namespace {

PolyCurve open_curve(std::initializer_list<Point> pts) {
  return PolyCurve(std::vector<Point>(pts), false);
}

}  // namespace

DrawnMultigraph gen_loose_extremal(int n) {
  if (n < 1) throw ParameterOutOfRange("gen_loose_extremal needs n >= 1");
  DrawnMultigraph g;
  if (n == 1) {
    g.vertices.push_back({"v1", {rat(0), rat(0)}});
    return g;
  }
  if (n == 2) {
    Point u{rat(0), rat(0)}, v{rat(2), rat(0)};
    g.vertices = {{"u", u}, {"v", v}};
    g.edges.push_back({"e", "u", "v", open_curve({u, v})});
    g.edges.push_back(
        {"l", "u", "u", PolyCurve({u, {rat(1), rat(-2)}, {rat(4), rat(0)}, {rat(1), rat(2)}}, true)});
    // l' winds twice around l: keyhole around everything plus a big turn
    std::vector<Point> lp{
        u,
        {rat(1), rat(-3)},
        {rat(5), rat(-3)},
        {rat(5), rat(3)},
        {rat(1), rat(3)},
        {rat(1, 8), rat(3, 8)},
        {rat(-8), rat(3, 8)},
        {rat(-8), rat(-8)},
        {rat(8), rat(-8)},
        {rat(8), rat(8)},
        {rat(-9), rat(8)},
        {rat(-9), rat(-2)},
    };
    g.edges.push_back({"l2", "u", "u", PolyCurve(std::move(lp), true)});
    return g;
  }

  Point u{rat(0), rat(0)}, v{rat(4), rat(0)}, w{rat(2), rat(4)};
  g.vertices = {{"u", u}, {"v", v}, {"w", w}};
  auto edge = [&](const std::string& id, const std::string& a, const std::string& b,
                  PolyCurve c) { g.edges.push_back({id, a, b, std::move(c)}); };
  edge("uv", "u", "v", open_curve({u, v}));
  edge("vw", "v", "w", open_curve({v, w}));
  edge("wu", "w", "u", open_curve({w, u}));
  std::vector<Point> stack{w};
  for (int i = 1; i <= n - 3; ++i) {
    Point p{rat(2) + Rational(1, i + 3), Rational(1, Integer(1) << (i - 1))};
    std::string label = "p" + std::to_string(i);
    g.vertices.push_back({label, p});
    std::string prev = i == 1 ? "w" : "p" + std::to_string(i - 1);
    edge(label + "u", label, "u", open_curve({p, u}));
    edge(label + "v", label, "v", open_curve({p, v}));
    edge(label + "t", label, prev, open_curve({p, stack.back()}));
    stack.push_back(p);
  }
  // second u-v edge over the top, not homotopic with the straight one
  edge("uv2", "u", "v",
       open_curve({u, {rat(-1, 2), rat(5)}, {rat(9, 2), rat(5)}, v}));
  // simple loop l around everything, then l' winding twice around l
  edge("l", "u", "u",
       PolyCurve({u,
                  {rat(1, 3), rat(-3)},
                  {rat(9), rat(-3)},
                  {rat(9), rat(7)},
                  {rat(-2), rat(7)},
                  {rat(-2), rat(1, 4)}},
                 true));
  edge("l2", "u", "u",
       PolyCurve({u,
                  {rat(1, 4), rat(-4)},
                  {rat(10), rat(-4)},
                  {rat(10), rat(8)},
                  {rat(-3), rat(8)},
                  {rat(-3), rat(1, 8)},
                  {rat(-1, 2), rat(1, 48)},
                  {rat(-14), rat(1, 48)},
                  {rat(-14), rat(-14)},
                  {rat(14), rat(-14)},
                  {rat(14), rat(14)},
                  {rat(-15), rat(14)},
                  {rat(-15), rat(-2)}},
                 true));
  return g;
}

// ---------------------------------------------------------------------------
// disjoint bouquets

DrawnMultigraph gen_disjoint_bouquets(int n, int m) {
  if (n < 2 || n % 2 != 0) throw ParameterOutOfRange("gen_disjoint_bouquets needs even n >= 2");
  if (m < n || m % n != 0) throw ParameterOutOfRange("gen_disjoint_bouquets needs n | m");
  long long q = 2ll * m / n;
  std::vector<long long> ws;
  for (long long wv = 1; wv <= q; ++wv) ws.push_back(wv);
  CorridorGeom geo = corridor_geometry(ws);
  Rational delta = (geo.P + geo.Y + 4) * 4;

  DrawnMultigraph g;
  for (int comp = 0; comp < n / 2; ++comp) {
    Point off{delta * comp, rat(0)};
    Point puncture = Point{rat(0), rat(0)} + off;
    Point base = Point{rat(1, 2), -geo.Y} + off;
    std::string vu = "u" + std::to_string(comp);
    std::string vv = "v" + std::to_string(comp);
    g.vertices.push_back({vv, puncture});
    g.vertices.push_back({vu, base});
    for (int s = 0; s < static_cast<int>(ws.size()); ++s) {
      PolyCurve c = corridor_coil(geo, s + 1, ws[s]).translated(off);
      g.edges.push_back({"w" + std::to_string(comp) + "_" + std::to_string(ws[s]), vu, vu,
                         std::move(c)});
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Theorem-2 instance

namespace {

long long ceil_2log2sq(long long x) {
  // smallest integer >= 2 log2(x)^2
  if (x < 1) throw ParameterOutOfRange("ceil_2log2sq needs x >= 1");
  Integer ix(x);
  long fl = floor_log2(ix);
  if (ix == (Integer(1) << static_cast<unsigned>(fl))) return 2 * fl * fl;
  for (unsigned bits = 48;; bits *= 2) {
    Log2Enclosure e = log2_enclosure(ix, bits);
    Rational lo = 2 * e.lo * e.lo, hi = 2 * e.hi * e.hi;
    Integer clo = num(lo) / den(lo) + (num(lo) % den(lo) == 0 ? 0 : 1);
    Integer chi = num(hi) / den(hi) + (num(hi) % den(hi) == 0 ? 0 : 1);
    if (clo == chi) return clo.convert_to<long long>();
    if (bits > 4096) throw Error("ceil_2log2sq failed to converge");
  }
}

int ceil_log2(long long x) {
  int b = 0;
  while ((1ll << b) < x) ++b;
  return b;
}

struct CaseACore {
  std::vector<PolyCurve> loops;  // m selected loop bodies at the base point
  Point a1, a2, x;
  long long k_formula;
  int j;
};

CaseACore case_a_core(long long m) {
  CaseACore core;
  core.a1 = {rat(1), rat(0)};
  core.a2 = {rat(2), rat(0)};
  core.x = {rat(0), rat(-1)};
  core.k_formula = ceil_2log2sq(2 * m);
  core.j = std::max<int>(3, ceil_log2(2 * m));
  LoopFamily fam = gen_concatenated_loops(2, core.j);
  if (static_cast<long long>(fam.loops.size()) < m)
    throw Error("case A: not enough concatenated loops");
  core.loops.assign(fam.loops.begin(), fam.loops.begin() + m);
  return core;
}

DrawnMultigraph case_a(long long m) {
  CaseACore core = case_a_core(m);
  DrawnMultigraph g;
  g.vertices = {{"x", core.x}, {"a1", core.a1}, {"a2", core.a2}};
  for (long long i = 0; i < m; ++i)
    g.edges.push_back({"e" + std::to_string(i), "x", "x", core.loops[i]});
  return g;
}

DrawnMultigraph case_b(int n, int m) {
  int copies = n / 3;
  long long m0 = (m + copies - 1) / copies;
  CaseACore core = case_a_core(m0);
  Rational delta(50);
  DrawnMultigraph g;
  std::vector<long long> keep(copies, m0);
  long long excess = static_cast<long long>(copies) * m0 - m;
  for (int c = copies - 1; c >= 0 && excess > 0; --c) {
    long long drop = std::min<long long>(excess, keep[c]);
    keep[c] -= drop;
    excess -= drop;
  }
  for (int c = 0; c < copies; ++c) {
    Point off{delta * c, rat(0)};
    std::string sx = "x" + std::to_string(c);
    g.vertices.push_back({sx, core.x + off});
    g.vertices.push_back({"a" + std::to_string(c) + "_1", core.a1 + off});
    g.vertices.push_back({"a" + std::to_string(c) + "_2", core.a2 + off});
    for (long long i = 0; i < keep[c]; ++i)
      g.edges.push_back({"e" + std::to_string(c) + "_" + std::to_string(i), sx, sx,
                         core.loops[i].translated(off)});
  }
  for (int extra = 0; extra < n - 3 * copies; ++extra)
    g.vertices.push_back(
        {"iso" + std::to_string(extra), {rat(-20) - 10 * extra, rat(-30)}});
  return g;
}

DrawnMultigraph case_c(int m) {
  Point a1{rat(1), rat(0)}, a2{rat(2), rat(0)}, x{rat(0), rat(-1)};
  PuncturedPlane filter_plane({a1, a2}, x);
  int j = std::max(3, ceil_log2(m) + 2);
  std::vector<PolyCurve> survivors;
  for (; j <= 24; ++j) {
    LoopFamily fam = gen_concatenated_loops(2, j);
    std::vector<ReducedWord> accepted;
    survivors.clear();
    for (const auto& c : fam.loops) {
      ReducedWord wrd = curve_word(c, filter_plane);
      if (double_coset_member(wrd, ReducedWord{}, 1, 1)) continue;  // trivial as an edge
      bool dup = false;
      for (const auto& acc : accepted)
        if (double_coset_member(acc, wrd, 1, 1)) {
          dup = true;
          break;
        }
      if (dup) continue;
      accepted.push_back(wrd);
      survivors.push_back(c);
    }
    if (static_cast<long long>(survivors.size()) < (1ll << (j - 2)))
      throw Error("case C: fewer than 2^(j-2) double-coset survivors");
    if (static_cast<long long>(survivors.size()) >= m) break;
  }
  if (static_cast<long long>(survivors.size()) < m)
    throw Error("case C: could not reach m survivors");

  Rational base_depth = rat(-1) - Rational(1, 1024);
  for (int seed = 0; seed < 16; ++seed) {
    // the anchor ladder is quadratic and reseeded so that a retry escapes any
    // exact concurrence of a connector with a body crossing
    Rational tau = Rational(1, Integer(1) << 22) / (2 * seed + 1);
    DrawnMultigraph g;
    g.vertices = {{"a1", a1}, {"a2", a2}};
    for (int i = 0; i < m; ++i) {
      const PolyCurve& body = survivors[i];
      std::vector<Point> v;
      v.push_back(a1);
      Rational d1 = tau * (2 * i + 1) + tau * tau * (2 * i + 1) * (2 * i + 1);
      Rational d2 = tau * (2 * i + 2) + tau * tau * (2 * i + 2) * (2 * i + 2);
      v.push_back({rat(0), base_depth - d1});
      for (std::size_t q = 1; q < body.verts.size(); ++q) v.push_back(body.verts[q]);
      v.push_back({rat(0), base_depth - d2});
      g.edges.push_back({"e" + std::to_string(i), "a1", "a1", PolyCurve(std::move(v), false)});
    }
    std::vector<PolyCurve> fam;
    for (const auto& e : g.edges) fam.push_back(e.curve);
    if (check_general_position(fam, nullptr).empty()) return g;
  }
  throw Error("case C: could not place connectors in general position");
}

}  // namespace

UpperboundInfo upperbound_info(int n, int m) {
  if (n < 2) throw ParameterOutOfRange("gen_upperbound_multigraph needs n >= 2");
  if (m <= 4 * n) throw ParameterOutOfRange("gen_upperbound_multigraph needs m > 4n");
  UpperboundInfo info{};
  if (n == 3) {
    info.case_tag = 'A';
    info.copies = 1;
    info.m0 = m;
    info.k_formula = ceil_2log2sq(2 * m);
    info.j_pieces = std::max<int>(3, ceil_log2(2 * m));
  } else if (n > 3) {
    info.case_tag = 'B';
    info.copies = n / 3;
    info.m0 = (m + info.copies - 1) / info.copies;
    info.k_formula = ceil_2log2sq(2 * info.m0);
    info.j_pieces = std::max<int>(3, ceil_log2(2 * info.m0));
  } else {
    info.case_tag = 'C';
    info.copies = 1;
    info.m0 = m;
    info.k_formula = ceil_2log2sq(2 * m);
    info.j_pieces = std::max(3, ceil_log2(m) + 2);
  }
  return info;
}

DrawnMultigraph gen_upperbound_multigraph(int n, int m) {
  if (n < 2) throw ParameterOutOfRange("gen_upperbound_multigraph needs n >= 2");
  if (m <= 4 * n) throw ParameterOutOfRange("gen_upperbound_multigraph needs m > 4n");
  if (n == 3) return case_a(m);
  if (n > 3) return case_b(n, m);
  return case_c(m);
}

}  // namespace loopcross
