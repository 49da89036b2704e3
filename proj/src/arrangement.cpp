#include "loopcross/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace loopcross {

namespace {

Point point_at(const PolyCurve& c, const CurveParam& p) {
  const Point& a = c.seg_a(p.segment);
  const Point& b = c.seg_b(p.segment);
  return {a.x + p.t * (b.x - a.x), a.y + p.t * (b.y - a.y)};
}

Rational to_pos(const CurveParam& p) { return Rational(p.segment) + p.t; }

Integer floor_rat(const Rational& r) {
  Integer q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) --q;
  return q;
}

// [0, pi) before [pi, 2pi), counterclockwise from east
int half_plane(const Point& d) {
  if (d.y > 0 || (d.y == 0 && d.x > 0)) return 0;
  return 1;
}

bool dir_less(const Point& a, const Point& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return a.x * b.y - a.y * b.x > 0;
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Arrangement planarize(const std::vector<PolyCurve>& family) {
  {
    auto v = check_general_position(family);
    if (!v.empty())
      throw GeneralPositionViolation("planarize: family not in general position: " +
                                     v.front().detail);
  }
  Arrangement arr;
  arr.curves = family;

  // events per curve: crossing params plus curve endpoints / basepoints
  std::vector<std::set<CurveParam>> events(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const PolyCurve& c = family[i];
    events[i].insert({0, Rational(0)});
    if (!c.closed) events[i].insert({c.segment_count() - 1, Rational(1)});
    for (const auto& r : curve_self_crossings(c)) {
      events[i].insert(r.param_a);
      events[i].insert(r.param_b);
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      for (const auto& r : curve_pair_crossings(family[i], family[j])) {
        events[i].insert(r.param_a);
        events[j].insert(r.param_b);
      }

  // normalize t==1 events into the next segment for closed curves
  auto normalize = [](const PolyCurve& c, CurveParam p) {
    if (p.t == 1 && c.closed) return CurveParam{(p.segment + 1) % c.segment_count(), Rational(0)};
    return p;
  };

  std::map<Point, int> node_of;
  auto node_id = [&](const Point& p) {
    auto it = node_of.find(p);
    if (it != node_of.end()) return it->second;
    int id = static_cast<int>(arr.nodes.size());
    arr.nodes.push_back(p);
    node_of.emplace(p, id);
    return id;
  };

  for (std::size_t ci = 0; ci < family.size(); ++ci) {
    const PolyCurve& c = family[ci];
    std::vector<CurveParam> evs;
    for (auto p : events[ci]) evs.push_back(normalize(c, p));
    std::sort(evs.begin(), evs.end());
    evs.erase(std::unique(evs.begin(), evs.end()), evs.end());
    int ne = static_cast<int>(evs.size());
    int count = c.closed ? ne : ne - 1;
    Rational span(c.segment_count());
    for (int e = 0; e < count; ++e) {
      const CurveParam& pa = evs[e];
      const CurveParam& pb = evs[(e + 1) % ne];
      Rational pos_a = to_pos(pa);
      Rational pos_b = to_pos(pb);
      if (e + 1 == ne) pos_b += span;  // wrap-around fragment of a closed curve
      Arrangement::Fragment f;
      f.curve = static_cast<int>(ci);
      f.from = pa;
      f.to = pb;
      f.pts.push_back(point_at(c, pa));
      Integer v = floor_rat(pos_a) + 1;
      for (; Rational(v) < pos_b; ++v) {
        int idx = static_cast<int>(v.convert_to<long long>() %
                                   static_cast<long long>(c.verts.size()));
        Point pt = c.verts[idx];
        if (pt != f.pts.back()) f.pts.push_back(pt);
      }
      Point end = point_at(c, pb);
      if (end != f.pts.back()) f.pts.push_back(end);
      if (f.pts.size() < 2) throw Error("degenerate fragment");
      f.node_from = node_id(f.pts.front());
      f.node_to = node_id(f.pts.back());
      arr.fragments.push_back(std::move(f));
    }
  }

  // rotation system: outgoing half-edges per node, ccw by exact direction
  arr.rotation.assign(arr.nodes.size(), {});
  auto out_dir = [&](int he) {
    const Arrangement::Fragment& f = arr.fragments[he >> 1];
    if (he & 1) return f.pts[f.pts.size() - 2] - f.pts.back();
    return f.pts[1] - f.pts.front();
  };
  for (std::size_t f = 0; f < arr.fragments.size(); ++f) {
    arr.rotation[arr.fragments[f].node_from].push_back(static_cast<int>(2 * f));
    arr.rotation[arr.fragments[f].node_to].push_back(static_cast<int>(2 * f + 1));
  }
  for (auto& rot : arr.rotation)
    std::sort(rot.begin(), rot.end(),
              [&](int a, int b) { return dir_less(out_dir(a), out_dir(b)); });

  // face tracing: next(h) = ccw-predecessor of twin(h) around its head
  int nhe = static_cast<int>(arr.fragments.size()) * 2;
  std::vector<int> rot_index(nhe, -1);
  for (const auto& rot : arr.rotation)
    for (std::size_t i = 0; i < rot.size(); ++i) rot_index[rot[i]] = static_cast<int>(i);
  auto next_he = [&](int h) {
    int t = h ^ 1;
    int v = arr.he_from(t);
    const auto& rot = arr.rotation[v];
    int idx = rot_index[t];
    return rot[(idx + rot.size() - 1) % rot.size()];
  };
  arr.he_face.assign(nhe, -1);
  for (int h = 0; h < nhe; ++h) {
    if (arr.he_face[h] >= 0) continue;
    int face = static_cast<int>(arr.face_cycles.size());
    arr.face_cycles.emplace_back();
    int cur = h;
    do {
      arr.he_face[cur] = face;
      arr.face_cycles[face].push_back(cur);
      cur = next_he(cur);
    } while (cur != h);
  }

  // connected components over nodes
  DisjointSet ds(static_cast<int>(arr.nodes.size()));
  for (const auto& f : arr.fragments) ds.unite(f.node_from, f.node_to);
  std::map<int, int> comp_id;
  arr.node_component.resize(arr.nodes.size());
  for (std::size_t i = 0; i < arr.nodes.size(); ++i) {
    int root = ds.find(static_cast<int>(i));
    auto it = comp_id.find(root);
    if (it == comp_id.end()) it = comp_id.emplace(root, static_cast<int>(comp_id.size())).first;
    arr.node_component[i] = it->second;
  }
  arr.component_count = static_cast<int>(comp_id.size());
  arr.face_component.resize(arr.face_cycles.size());
  arr.face_outer.assign(arr.face_cycles.size(), false);
  std::vector<Rational> area2(arr.face_cycles.size(), Rational(0));
  for (std::size_t face = 0; face < arr.face_cycles.size(); ++face) {
    arr.face_component[face] = arr.node_component[arr.he_from(arr.face_cycles[face][0])];
    for (int h : arr.face_cycles[face]) {
      const auto& f = arr.fragments[h >> 1];
      if (h & 1) {
        for (std::size_t i = f.pts.size(); i-- > 1;)
          area2[face] += f.pts[i].x * f.pts[i - 1].y - f.pts[i - 1].x * f.pts[i].y;
      } else {
        for (std::size_t i = 0; i + 1 < f.pts.size(); ++i)
          area2[face] += f.pts[i].x * f.pts[i + 1].y - f.pts[i + 1].x * f.pts[i].y;
      }
    }
  }
  // the unique negative-area cycle per component is its outer boundary
  for (std::size_t face = 0; face < arr.face_cycles.size(); ++face)
    if (area2[face] < 0) arr.face_outer[face] = true;
  return arr;
}

int Arrangement::locate_face(const Point& q) const {
  for (const auto& f : fragments)
    for (std::size_t i = 0; i + 1 < f.pts.size(); ++i)
      if (on_segment(f.pts[i], f.pts[i + 1], q)) throw PointOnCurve("query point on arrangement");

  // shear x' = x + lambda*y until no node sits on the lookup ray
  Rational lambda(0);
  for (long long attempt = 0;; ++attempt) {
    if (attempt > 0) lambda = Rational(attempt, 1021);
    if (attempt > static_cast<long long>(nodes.size()) + 2)
      throw Error("locate_face: no usable shear found");
    Rational qx = q.x + lambda * q.y;
    bool bad = false;
    for (const auto& nd : nodes)
      if (nd.y > q.y && nd.x + lambda * nd.y == qx) bad = true;
    if (bad) continue;

    bool found = false;
    Rational best_y;
    int best_face = -1;
    for (std::size_t fi = 0; fi < fragments.size(); ++fi) {
      const auto& f = fragments[fi];
      for (std::size_t i = 0; i + 1 < f.pts.size(); ++i) {
        const Point& a = f.pts[i];
        const Point& b = f.pts[i + 1];
        Rational ax = a.x + lambda * a.y, bx = b.x + lambda * b.y;
        bool ra = ax >= qx, rb = bx >= qx;
        if (ra == rb) continue;
        Rational t = (qx - ax) / (bx - ax);
        Rational y = a.y + t * (b.y - a.y);
        if (y <= q.y) continue;
        if (!found || y < best_y) {
          found = true;
          best_y = y;
          // the face just below the crossing: right of the forward half-edge
          // when the (sheared) segment heads east, left when it heads west
          best_face = bx > ax ? he_face[2 * fi + 1] : he_face[2 * fi];
        }
      }
    }
    return found ? best_face : -1;
  }
}

std::vector<Point> Arrangement::face_samples() const {
  std::vector<Point> samples(face_cycles.size());
  Rational maxx(0), maxy(0);
  for (const auto& f : fragments)
    for (const auto& p : f.pts) {
      maxx = std::max(maxx, p.x);
      maxy = std::max(maxy, p.y);
    }
  for (std::size_t face = 0; face < face_cycles.size(); ++face) {
    if (face_outer[face]) {
      samples[face] = {maxx + 1 + Rational(static_cast<long long>(face)), maxy + 1};
      continue;
    }
    int h = face_cycles[face][0];
    const auto& f = fragments[h >> 1];
    Point a = f.pts[0], b = f.pts[1];
    if (h & 1) {
      a = f.pts.back();
      b = f.pts[f.pts.size() - 2];
    }
    Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    Point normal{a.y - b.y, b.x - a.x};  // left of a->b
    Rational eps(1, 16);
    bool ok = false;
    for (int shrink = 0; shrink < 80 && !ok; ++shrink, eps /= 8) {
      Point cand{mid.x + eps * normal.x, mid.y + eps * normal.y};
      try {
        if (locate_face(cand) == static_cast<int>(face)) {
          samples[face] = cand;
          ok = true;
        }
      } catch (const PointOnCurve&) {
      }
    }
    if (!ok) throw Error("face_samples: could not place a sample point");
  }
  return samples;
}

std::vector<long long> Arrangement::euler_characteristics() const {
  std::vector<long long> v(component_count, 0), e(component_count, 0), f(component_count, 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) ++v[node_component[i]];
  for (const auto& frag : fragments) ++e[node_component[frag.node_from]];
  for (std::size_t i = 0; i < face_cycles.size(); ++i) ++f[face_component[i]];
  std::vector<long long> chi(component_count);
  for (int c = 0; c < component_count; ++c) chi[c] = v[c] - e[c] + f[c];
  return chi;
}

std::vector<long long> face_windings(const Arrangement& arr) {
  if (arr.curves.size() != 1 || !arr.curves[0].closed)
    throw Error("face_windings expects the arrangement of a single closed curve");
  std::vector<long long> w(arr.face_count(), 0);
  std::vector<bool> seen(arr.face_count(), false);
  int start = -1;
  for (int face = 0; face < arr.face_count(); ++face)
    if (arr.face_outer[face]) start = face;
  std::queue<int> q;
  seen[start] = true;
  w[start] = 0;
  q.push(start);
  while (!q.empty()) {
    int face = q.front();
    q.pop();
    for (std::size_t fi = 0; fi < arr.fragments.size(); ++fi) {
      int left = arr.he_face[2 * fi];
      int right = arr.he_face[2 * fi + 1];
      for (auto [from, to, delta] : {std::tuple<int, int, int>{left, right, -1},
                                     std::tuple<int, int, int>{right, left, +1}}) {
        if (from != face || seen[to]) continue;
        seen[to] = true;
        w[to] = w[face] + delta;
        q.push(to);
      }
    }
  }
  // consistency: every fragment must separate windings by exactly one
  for (std::size_t fi = 0; fi < arr.fragments.size(); ++fi)
    if (w[arr.he_face[2 * fi]] != w[arr.he_face[2 * fi + 1]] + 1)
      throw Error("face_windings: inconsistent assignment");
  return w;
}

FaceCensus face_puncture_census(const Arrangement& arr, const PuncturedPlane& plane) {
  if (arr.component_count != 1)
    throw Error("face_puncture_census expects a connected arrangement");
  int outer = -1;
  for (int face = 0; face < arr.face_count(); ++face)
    if (arr.face_outer[face]) outer = face;
  FaceCensus census;
  census.members.resize(arr.face_count());
  int n = plane.puncture_count();
  for (int i = 0; i < n; ++i) {
    int face;
    try {
      face = arr.locate_face(plane.punctures[i]);
    } catch (const PointOnCurve&) {
      throw PunctureOnCurve("puncture lies on a curve of the family");
    }
    if (face < 0) face = outer;
    census.face_of.push_back(face);
    census.members[face].push_back(i);
  }
  census.outer_face = outer;
  // T also holds the ideal point, which lives in the unbounded face
  census.totals.assign(arr.face_count(), 0);
  for (int face = 0; face < arr.face_count(); ++face)
    census.totals[face] = static_cast<long long>(census.members[face].size());
  census.totals[outer] += 1;
  census.balanced = true;
  for (int face = 0; face < arr.face_count(); ++face)
    if (census.totals[face] == n || census.totals[face] == n + 1) census.balanced = false;
  return census;
}

bool family_balanced(const std::vector<PolyCurve>& loops, const PuncturedPlane& plane) {
  return face_puncture_census(planarize(loops), plane).balanced;
}

std::optional<std::pair<int, int>> find_balanced_pair(const std::vector<PolyCurve>& H,
                                                      const PuncturedPlane& plane, long long k) {
  const int n = plane.puncture_count();
  const int ideal = n;  // index of p* in T
  auto pair_balanced = [&](int i, int j) {
    return family_balanced({H[i], H[j]}, plane);
  };

  // single-loop census: balanced loop, or the point it separates
  std::vector<int> separated(H.size(), -2);  // -2: loop itself balanced
  for (std::size_t i = 0; i < H.size(); ++i) {
    FaceCensus c = face_puncture_census(planarize({H[i]}), plane);
    if (c.balanced) {
      for (std::size_t j = 0; j < H.size(); ++j)
        if (j != i && pair_balanced(static_cast<int>(std::min(i, j)),
                                    static_cast<int>(std::max(i, j))))
          return std::make_pair(static_cast<int>(std::min(i, j)),
                                static_cast<int>(std::max(i, j)));
      continue;
    }
    // some face holds exactly n of the n+1 special points; the single point
    // outside it is the one this loop separates
    for (std::size_t f = 0; f < c.members.size(); ++f) {
      if (c.totals[f] != n) continue;
      std::vector<bool> present(n + 1, false);
      for (int m : c.members[f]) present[m] = true;
      if (static_cast<int>(f) == c.outer_face) present[ideal] = true;
      for (int t = 0; t <= n; ++t)
        if (!present[t]) separated[i] = t;
    }
    if (separated[i] == -2)
      throw InvalidInstance("loop is unbalanced but separates no single point (trivial loop?)");
  }

  for (std::size_t i = 0; i < H.size(); ++i)
    for (std::size_t j = i + 1; j < H.size(); ++j)
      if (separated[i] != separated[j] && pair_balanced(static_cast<int>(i), static_cast<int>(j)))
        return std::make_pair(static_cast<int>(i), static_cast<int>(j));

  // all loops separate the same point t: pigeonhole equal windings around it
  if (!H.empty() && separated[0] >= 0 && separated[0] < n) {
    const Point& t = plane.punctures[separated[0]];
    std::map<long long, int> by_winding;
    for (std::size_t i = 0; i < H.size(); ++i) {
      long long w = winding_number(H[i], t);
      if (w < -k || w > k)
        throw InvalidInstance("winding exceeds the self-crossing budget");
      auto it = by_winding.find(w);
      if (it != by_winding.end()) {
        int a = it->second, b = static_cast<int>(i);
        if (pair_balanced(a, b)) return std::make_pair(a, b);
      } else {
        by_winding.emplace(w, static_cast<int>(i));
      }
    }
  }

  // exhaustive fallback keeps the guarantee honest
  for (std::size_t i = 0; i < H.size(); ++i)
    for (std::size_t j = i + 1; j < H.size(); ++j)
      if (pair_balanced(static_cast<int>(i), static_cast<int>(j)))
        return std::make_pair(static_cast<int>(i), static_cast<int>(j));
  return std::nullopt;
}

std::vector<long long> monotone_subsequence(const std::vector<long long>& seq) {
  const int n = static_cast<int>(seq.size());
  {
    std::set<long long> dedupe(seq.begin(), seq.end());
    if (static_cast<int>(dedupe.size()) != n) throw Error("monotone_subsequence needs distinct entries");
  }
  auto longest = [&](bool increasing) {
    std::vector<int> len(n, 1), prev(n, -1);
    int best = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) {
        bool ok = increasing ? seq[j] < seq[i] : seq[j] > seq[i];
        if (ok && len[j] + 1 > len[i]) {
          len[i] = len[j] + 1;
          prev[i] = j;
        }
      }
    for (int i = 1; i < n; ++i)
      if (len[i] > len[best]) best = i;
    std::vector<long long> out;
    if (n == 0) return out;
    for (int i = best; i >= 0; i = prev[i]) out.push_back(seq[i]);
    std::reverse(out.begin(), out.end());
    return out;
  };
  auto inc = longest(true);
  auto dec = longest(false);
  return inc.size() >= dec.size() ? inc : dec;
}

std::vector<Block> greedy_blocks(const std::vector<PolyCurve>& family, long long k) {
  auto m = crossing_matrix(family);
  const int n = static_cast<int>(family.size());
  std::vector<bool> used(n, false);
  std::vector<Block> blocks;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i < n && !progress; ++i) {
      if (used[i]) continue;
      if (m[i][i] >= k) {
        used[i] = true;
        blocks.push_back({{i}});
        progress = true;
        break;
      }
      for (int j = i + 1; j < n && !progress; ++j) {
        if (used[j] || m[i][j] < k) continue;
        used[i] = used[j] = true;
        blocks.push_back({{i, j}});
        progress = true;
      }
    }
  }
  return blocks;
}

namespace {

std::vector<Point> chain_points(const PolyCurve& c, const CurveParam& from, const CurveParam& to) {
  // walk along the oriented curve from `from` to `to` (wrapping if closed and
  // to < from); returns the geometry including both endpoints
  Rational pos_a = to_pos(from);
  Rational pos_b = to_pos(to);
  if (pos_b < pos_a) {
    if (!c.closed) throw Error("chain_points: backwards chain on an open curve");
    pos_b += c.segment_count();
  }
  std::vector<Point> pts;
  pts.push_back(point_at(c, from));
  for (Integer v = floor_rat(pos_a) + 1; Rational(v) < pos_b; ++v) {
    int idx = static_cast<int>(v.convert_to<long long>() % static_cast<long long>(c.verts.size()));
    if (c.verts[idx] != pts.back()) pts.push_back(c.verts[idx]);
  }
  Point end = point_at(c, to);
  if (end != pts.back()) pts.push_back(end);
  return pts;
}

long long icbrt_ceil(long long k) {
  long long r = 0;
  while (r * r * r < k) ++r;
  return r;
}

bool intervals_disjoint(const std::pair<Rational, Rational>& a,
                        const std::pair<Rational, Rational>& b) {
  return a.second <= b.first || b.second <= a.first;
}

}  // namespace

std::vector<LCircle> extract_l_circles(const std::vector<PolyCurve>& block, long long k) {
  if (block.empty() || block.size() > 2) throw Error("block must hold one or two loops");
  const long long target = std::max<long long>(icbrt_ceil(k) - 1, 1);

  std::vector<LCircle> out;
  if (block.size() == 2) {
    auto recs = curve_pair_crossings(block[0], block[1]);
    if (static_cast<long long>(recs.size()) < k)
      throw InsufficientCrossings("block has fewer than k mutual crossings");
    // order along loop 0; ranks along loop 1
    std::sort(recs.begin(), recs.end(),
              [](const CrossingRecord& a, const CrossingRecord& b) { return a.param_a < b.param_a; });
    std::vector<std::size_t> by_b(recs.size());
    std::iota(by_b.begin(), by_b.end(), 0);
    std::sort(by_b.begin(), by_b.end(),
              [&](std::size_t a, std::size_t b) { return recs[a].param_b < recs[b].param_b; });
    std::vector<long long> rank(recs.size());
    for (std::size_t r = 0; r < by_b.size(); ++r) rank[by_b[r]] = static_cast<long long>(r);
    std::vector<long long> chosen = monotone_subsequence(rank);
    std::set<long long> chosen_set(chosen.begin(), chosen.end());
    std::vector<std::size_t> sel;
    for (std::size_t i = 0; i < recs.size(); ++i)
      if (chosen_set.count(rank[i])) sel.push_back(i);
    for (std::size_t i = 0; i + 1 < sel.size(); ++i) {
      const CrossingRecord& ra = recs[sel[i]];
      const CrossingRecord& rb = recs[sel[i + 1]];
      LCircle circ;
      circ.loop_a = 0;
      circ.a_from = ra.param_a;
      circ.a_to = rb.param_a;
      circ.loop_b = 1;
      bool inc = ra.param_b < rb.param_b;
      circ.b_from = inc ? ra.param_b : rb.param_b;
      circ.b_to = inc ? rb.param_b : ra.param_b;
      auto chain_a = chain_points(block[0], circ.a_from, circ.a_to);
      auto chain_b = chain_points(block[1], circ.b_from, circ.b_to);
      circ.polygon = chain_a;
      if (inc) {
        for (std::size_t p = chain_b.size() - 1; p-- > 1;) circ.polygon.push_back(chain_b[p]);
      } else {
        for (std::size_t p = 1; p + 1 < chain_b.size(); ++p) circ.polygon.push_back(chain_b[p]);
      }
      out.push_back(std::move(circ));
    }
  } else {
    auto recs = curve_self_crossings(block[0]);
    if (static_cast<long long>(recs.size()) < k)
      throw InsufficientCrossings("block has fewer than k self-crossings");
    using Interval = std::pair<Rational, Rational>;
    std::vector<Interval> iv;
    for (const auto& r : recs) iv.push_back({to_pos(r.param_a), to_pos(r.param_b)});
    // greedy maximum disjoint intervals (optimal for intervals)
    std::vector<std::size_t> order(iv.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return iv[a].second < iv[b].second; });
    std::vector<std::size_t> greedy;
    for (std::size_t i : order)
      if (greedy.empty() || iv[i].first >= iv[greedy.back()].second) greedy.push_back(i);
    if (static_cast<long long>(greedy.size()) >= target) {
      for (std::size_t i : greedy) {
        LCircle circ;
        circ.loop_a = 0;
        circ.a_from = recs[i].param_a;
        circ.a_to = recs[i].param_b;
        auto chain = chain_points(block[0], circ.a_from, circ.a_to);
        chain.pop_back();  // closes at the crossing point
        circ.polygon = chain;
        out.push_back(std::move(circ));
        if (static_cast<long long>(out.size()) == target) break;
      }
    } else {
      // split point covered by many single-part circles, then Erdos-Szekeres
      std::vector<Rational> cuts;
      for (const auto& i : iv) {
        cuts.push_back(i.first);
        cuts.push_back(i.second);
      }
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      Rational best_split;
      long long best_cover = -1;
      for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        Rational mid = (cuts[c] + cuts[c + 1]) / 2;
        long long cover = 0;
        for (const auto& i : iv)
          if (i.first < mid && mid < i.second) ++cover;
        if (cover > best_cover) {
          best_cover = cover;
          best_split = mid;
        }
      }
      std::vector<std::size_t> straddle;
      for (std::size_t i = 0; i < iv.size(); ++i)
        if (iv[i].first < best_split && best_split < iv[i].second) straddle.push_back(i);
      std::sort(straddle.begin(), straddle.end(),
                [&](std::size_t a, std::size_t b) { return iv[a].first < iv[b].first; });
      // ranks of the second visits
      std::vector<std::size_t> by_second = straddle;
      std::sort(by_second.begin(), by_second.end(),
                [&](std::size_t a, std::size_t b) { return iv[a].second < iv[b].second; });
      std::map<std::size_t, long long> rank;
      for (std::size_t r = 0; r < by_second.size(); ++r) rank[by_second[r]] = static_cast<long long>(r);
      std::vector<long long> ranks_in_order;
      for (std::size_t i : straddle) ranks_in_order.push_back(rank[i]);
      std::vector<long long> chosen = monotone_subsequence(ranks_in_order);
      std::set<long long> chosen_set(chosen.begin(), chosen.end());
      std::vector<std::size_t> sel;
      for (std::size_t idx = 0; idx < straddle.size(); ++idx)
        if (chosen_set.count(ranks_in_order[idx])) sel.push_back(straddle[idx]);
      for (std::size_t i = 0; i + 1 < sel.size(); ++i) {
        const CrossingRecord& ra = recs[sel[i]];
        const CrossingRecord& rb = recs[sel[i + 1]];
        LCircle circ;
        circ.loop_a = 0;
        circ.a_from = ra.param_a;
        circ.a_to = rb.param_a;
        circ.loop_b = 0;
        bool inc = ra.param_b < rb.param_b;
        circ.b_from = inc ? ra.param_b : rb.param_b;
        circ.b_to = inc ? rb.param_b : ra.param_b;
        auto chain_a = chain_points(block[0], circ.a_from, circ.a_to);
        auto chain_b = chain_points(block[0], circ.b_from, circ.b_to);
        circ.polygon = chain_a;
        if (inc) {
          for (std::size_t p = chain_b.size() - 1; p-- > 1;) circ.polygon.push_back(chain_b[p]);
        } else {
          for (std::size_t p = 1; p + 1 < chain_b.size(); ++p) circ.polygon.push_back(chain_b[p]);
        }
        out.push_back(std::move(circ));
      }
    }
  }

  // verify the family is non-overlapping fragment-wise
  auto interval_of = [&](const CurveParam& a, const CurveParam& b) {
    return std::pair<Rational, Rational>{to_pos(a), to_pos(b)};
  };
  std::vector<std::vector<std::pair<Rational, Rational>>> used(block.size());
  for (const auto& c : out) {
    used[c.loop_a].push_back(interval_of(c.a_from, c.a_to));
    if (c.loop_b >= 0) used[c.loop_b].push_back(interval_of(c.b_from, c.b_to));
  }
  for (const auto& per_loop : used)
    for (std::size_t i = 0; i < per_loop.size(); ++i)
      for (std::size_t j = i + 1; j < per_loop.size(); ++j)
        if (!intervals_disjoint(per_loop[i], per_loop[j]))
          throw Error("extract_l_circles produced overlapping circles");
  if (static_cast<long long>(out.size()) < target)
    throw Error("extract_l_circles fell short of the guaranteed family size");
  return out;
}

bool separates(const LCircle& circle, const Point& x, const Point& p) {
  const auto& poly = circle.polygon;
  auto parity = [&](const Point& q) {
    long long c = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point& a = poly[i];
      const Point& b = poly[(i + 1) % poly.size()];
      if (on_segment(a, b, q)) throw PointOnCircle("point lies on the circle");
      bool ra = a.x >= q.x, rb = b.x >= q.x;
      if (ra == rb) continue;
      Rational t = (q.x - a.x) / (b.x - a.x);
      Rational y = a.y + t * (b.y - a.y);
      if (y > q.y) ++c;
    }
    return c & 1;
  };
  return parity(x) != parity(p);
}

bool Signature::operator<(const Signature& o) const {
  if (fragments != o.fragments) return fragments < o.fragments;
  if (initial_pos != o.initial_pos) return initial_pos < o.initial_pos;
  return final_pos < o.final_pos;
}

Signature signature(const PolyCurve& loop, const Arrangement& arr) {
  if (!loop.closed) throw Error("signature expects a closed loop");
  Signature sig;
  std::vector<std::pair<CurveParam, int>> hits;
  for (std::size_t fi = 0; fi < arr.fragments.size(); ++fi) {
    PolyCurve frag(arr.fragments[fi].pts, false);
    for (const auto& r : curve_pair_crossings(loop, frag))
      hits.push_back({r.param_a, static_cast<int>(fi)});
  }
  std::sort(hits.begin(), hits.end());
  for (const auto& [p, f] : hits) sig.fragments.push_back(f);

  // cyclic positions of the loop's first and last directions at the basepoint
  int base_node = -1;
  for (std::size_t i = 0; i < arr.nodes.size(); ++i)
    if (arr.nodes[i] == loop.verts[0]) base_node = static_cast<int>(i);
  if (base_node < 0) throw Error("signature: loop basepoint is not an arrangement node");
  auto out_dir = [&](int he) {
    const Arrangement::Fragment& f = arr.fragments[he >> 1];
    if (he & 1) return f.pts[f.pts.size() - 2] - f.pts.back();
    return f.pts[1] - f.pts.front();
  };
  auto insert_pos = [&](const Point& d) {
    int pos = 0;
    for (int he : arr.rotation[base_node])
      if (dir_less(out_dir(he), d)) ++pos;
    return pos;
  };
  sig.initial_pos = insert_pos(loop.verts[1] - loop.verts[0]);
  sig.final_pos = insert_pos(loop.verts.back() - loop.verts[0]);
  return sig;
}

}  // namespace loopcross
