#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loopcross/rational.hpp"

namespace loopcross {

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

// sign of the cross product (b-a) x (c-a): >0 left turn, <0 right, 0 collinear
int orient(const Point& a, const Point& b, const Point& c);

// true iff p lies on the closed segment [a,b]
bool on_segment(const Point& a, const Point& b, const Point& p);

// Open or closed polygonal curve. Closed curves do not repeat the first
// vertex; the closing segment back to verts[0] (the basepoint) is implicit.
struct PolyCurve {
  std::vector<Point> verts;
  bool closed = false;

  PolyCurve() = default;
  PolyCurve(std::vector<Point> v, bool c);

  int segment_count() const {
    return closed ? static_cast<int>(verts.size()) : static_cast<int>(verts.size()) - 1;
  }
  const Point& seg_a(int i) const { return verts[i]; }
  const Point& seg_b(int i) const { return verts[(i + 1) % verts.size()]; }
  const Point& front() const { return verts.front(); }
  const Point& back() const { return closed ? verts.front() : verts.back(); }

  PolyCurve reversed() const;
  PolyCurve translated(const Point& d) const;
};

// Position along a curve: segment index plus local parameter in [0,1].
struct CurveParam {
  int segment = 0;
  Rational t;

  // global parameter in [0,1], uniform weight per segment
  Rational global(const PolyCurve& c) const {
    return (Rational(segment) + t) / c.segment_count();
  }
  bool operator<(const CurveParam& o) const {
    return segment < o.segment || (segment == o.segment && t < o.t);
  }
  bool operator==(const CurveParam& o) const { return segment == o.segment && t == o.t; }
};

struct CrossingRecord {
  int curve_a = 0;
  int curve_b = 0;  // == curve_a for self-crossings
  CurveParam param_a;
  CurveParam param_b;
  Point location;
};

struct Violation {
  enum Kind {
    Overlap,            // collinear segment overlap
    ImproperContact,    // tangency / endpoint-on-interior contact
    TriplePoint,        // three or more segments through one point
    VertexOnCurve,      // curve vertex in the interior of another curve
    ThroughPuncture,    // curve interior passes through a puncture or basepoint
    PunctureColumn,     // curve vertex shares an x-coordinate with a puncture
    DegenerateCurve     // zero-length segment / spur within one curve
  };
  Kind kind;
  int curve_a = -1;
  int curve_b = -1;
  int seg_a = -1;
  int seg_b = -1;
  std::string detail;
};

struct PuncturedPlane;  // homotopy.hpp

// All transversal interior crossings between two distinct curves, with
// multiplicity. Shared curve endpoints are never counted. Throws
// GeneralPositionViolation on tangency, overlap or vertex contact.
std::vector<CrossingRecord> curve_pair_crossings(const PolyCurve& c1, const PolyCurve& c2);

// Self-crossings of one curve; contacts of adjacent segments at their shared
// vertex are excluded.
std::vector<CrossingRecord> curve_self_crossings(const PolyCurve& c);

long long count_pair_crossings(const PolyCurve& c1, const PolyCurve& c2);
long long count_self_crossings(const PolyCurve& c);

// Symmetric matrix of pairwise crossing counts; [i][i] holds self-crossings.
std::vector<std::vector<long long>> crossing_matrix(const std::vector<PolyCurve>& family);

// Family-level general position audit. Passing a plane adds the puncture
// checks (interior through puncture/basepoint, vertex on puncture column).
std::vector<Violation> check_general_position(const std::vector<PolyCurve>& family,
                                               const PuncturedPlane* plane = nullptr);

// Deterministic perturbation: curve i's interior vertices are offset by
// magnitudes proportional to (i+1)*epsilon/|family|, scaled per vertex by a
// geometric ladder so repeated points separate. Endpoints (and the basepoint
// of closed curves) stay fixed. Halves epsilon and retries until the family
// passes check_general_position; throws PerturbationFailed when the retry
// budget runs out.
std::vector<PolyCurve> perturb_family(const std::vector<PolyCurve>& family, Rational epsilon,
                                      const PuncturedPlane* plane = nullptr);

}  // namespace loopcross
