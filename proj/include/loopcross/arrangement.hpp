#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "loopcross/homotopy.hpp"

namespace loopcross {

// Planarization of a curve family: curve endpoints and crossing points become
// nodes, maximal crossing-free curve pieces become fragments, and faces are
// traced from the cyclic fragment order around each node. Half-edge h of
// fragment f is 2f (forward) or 2f+1 (backward); the face of a half-edge lies
// on its left.
struct Arrangement {
  struct Fragment {
    int curve;
    CurveParam from;
    CurveParam to;
    std::vector<Point> pts;  // geometry including both endpoints
    int node_from;
    int node_to;
  };

  std::vector<PolyCurve> curves;
  std::vector<Point> nodes;
  std::vector<Fragment> fragments;
  std::vector<std::vector<int>> rotation;  // per node: outgoing half-edges, ccw
  std::vector<int> he_face;                // per half-edge: face (orbit) id
  std::vector<std::vector<int>> face_cycles;
  std::vector<int> node_component;
  std::vector<int> face_component;
  std::vector<bool> face_outer;  // the negative-area cycle of its component
  int component_count = 0;

  int face_count() const { return static_cast<int>(face_cycles.size()); }
  int twin(int he) const { return he ^ 1; }
  int he_from(int he) const {
    const Fragment& f = fragments[he >> 1];
    return (he & 1) ? f.node_to : f.node_from;
  }
  int he_to(int he) const { return he_from(he ^ 1); }

  // Face containing q, or -1 for the unbounded region outside every component.
  // Exact; internally shears the lookup ray when q sits under a node. Throws
  // PointOnCurve when q lies on the arrangement.
  int locate_face(const Point& q) const;

  // Interior sample point per face; the outer-cycle entries sample the
  // unbounded region.
  std::vector<Point> face_samples() const;

  // V - E + F per connected component (each counting its own unbounded face);
  // all must equal 2 for a valid planarization.
  std::vector<long long> euler_characteristics() const;
};

Arrangement planarize(const std::vector<PolyCurve>& family);

// Winding number per face of a single closed curve's arrangement, assigned by
// BFS from the unbounded face (0), +-1 across each fragment.
std::vector<long long> face_windings(const Arrangement& arr);

// Census of the special point set T = punctures + ideal point over the faces
// of a (connected) arrangement. Entry i of `face_of` is the face holding
// puncture i; the ideal point lives in face -1 (the unbounded region).
struct FaceCensus {
  std::vector<int> face_of;               // per puncture
  std::vector<std::vector<int>> members;  // per face: puncture indices
  std::vector<long long> totals;          // per face: |T and face|, ideal point included
  int outer_face = -1;                    // face holding the ideal point
  bool balanced = false;                  // no face holds n or n+1 points of T
};

FaceCensus face_puncture_census(const Arrangement& arr, const PuncturedPlane& plane);

bool family_balanced(const std::vector<PolyCurve>& loops, const PuncturedPlane& plane);

// Lemma-style search: per-loop balanced test, separated-point detection, then
// pigeonhole on winding numbers. Returns indices into H, or nullopt when no
// balanced pair exists (possible only for |H| <= 2k+1).
std::optional<std::pair<int, int>> find_balanced_pair(const std::vector<PolyCurve>& H,
                                                      const PuncturedPlane& plane, long long k);

// Longest strictly monotone (increasing or decreasing) subsequence of a
// sequence of distinct integers; length >= ceil(sqrt(len)).
std::vector<long long> monotone_subsequence(const std::vector<long long>& seq);

// One or two loops forming a block with at least k mutual or self crossings.
struct Block {
  std::vector<int> loops;  // one or two indices
};

std::vector<Block> greedy_blocks(const std::vector<PolyCurve>& family, long long k);

// Closed curve assembled from one loop segment between the two visits of a
// self-crossing, or from two segments joining the same crossing pair.
struct LCircle {
  int loop_a;
  CurveParam a_from, a_to;
  int loop_b = -1;  // -1: single-chain circle
  CurveParam b_from, b_to;
  std::vector<Point> polygon;  // closed polygon tracing the circle
};

// Non-overlapping L-circle family of size >= ceil(k^(1/3)) - 1 from a block
// whose crossing count is >= k. Throws InsufficientCrossings otherwise.
std::vector<LCircle> extract_l_circles(const std::vector<PolyCurve>& block, long long k);

// true iff x and p lie on different sides of the circle (odd crossing parity).
// Throws PointOnCircle when either point lies on the circle.
bool separates(const LCircle& circle, const Point& x, const Point& p);

// Ordered fragments crossed by a loop based at the arrangement's basepoint
// node, plus the cyclic positions of its first/last directions there.
struct Signature {
  std::vector<int> fragments;
  int initial_pos = 0;
  int final_pos = 0;
  bool operator<(const Signature& o) const;
};

Signature signature(const PolyCurve& loop, const Arrangement& arr);

}  // namespace loopcross
