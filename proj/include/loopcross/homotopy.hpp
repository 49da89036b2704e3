#pragma once

#include <map>
#include <string>
#include <vector>

#include "loopcross/geometry.hpp"

namespace loopcross {

// Plane minus a finite set of punctures, with a fixed basepoint. Punctures are
// kept sorted by (x, y); generator i (1-based) is the loop around the i-th
// puncture in that order. Word computation uses upward vertical rays, so
// punctures must sit on pairwise distinct vertical lines and the basepoint off
// all of them.
struct PuncturedPlane {
  std::vector<Point> punctures;
  Point basepoint;

  PuncturedPlane(std::vector<Point> ps, Point bp);
  int puncture_count() const { return static_cast<int>(punctures.size()); }
};

struct Letter {
  int gen;   // 1-based generator index
  int sign;  // +1 or -1
  bool operator==(const Letter& o) const { return gen == o.gen && sign == o.sign; }
};

// Freely reduced word over g_1..g_n.
struct ReducedWord {
  std::vector<Letter> letters;

  static ReducedWord from_letters(const std::vector<Letter>& raw);

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  bool operator==(const ReducedWord& o) const { return letters == o.letters; }
  bool operator!=(const ReducedWord& o) const { return !(*this == o); }
  bool operator<(const ReducedWord& o) const;

  long long exponent_sum(int gen) const;
  // true iff every letter uses `gen`
  bool is_power_of(int gen) const;
  std::string str() const;
};

ReducedWord reduce(const std::vector<Letter>& raw);
ReducedWord invert(const ReducedWord& w);
ReducedWord concat(const ReducedWord& a, const ReducedWord& b);
ReducedWord word_power(int gen, long long exp);

// Signed winding number of a closed curve around p, counterclockwise positive.
// Throws PointOnCurve when p lies on the curve.
long long winding_number(const PolyCurve& c, const Point& p);

// Word of a closed basepoint loop: each transversal crossing of the upward
// vertical ray of puncture a_i appends g_i when the curve crosses in the +x
// direction and g_i^-1 in the -x direction, in traversal order, then reduces.
// With this convention the exponent sum of g_i is minus the (counterclockwise)
// winding number around a_i. Throws DegenerateRayContact when a curve vertex
// lies on a ray, PunctureOnCurve when the curve passes through a puncture.
ReducedWord curve_word(const PolyCurve& c, const PuncturedPlane& plane);

bool loops_homotopic(const PolyCurve& c1, const PolyCurve& c2, const PuncturedPlane& plane,
                     bool oriented);

// Is g' = g_a^s g g_b^t or g_a^s g^-1 g_b^t for some integers s,t?
// `allow_inverse=false` drops the second route.
bool double_coset_member(const ReducedWord& g, const ReducedWord& g_prime, int a, int b,
                         bool allow_inverse = true);

// ---------------------------------------------------------------------------

struct MultiEdge {
  std::string id;
  std::string u;
  std::string v;
  PolyCurve curve;  // closed with verts[0]==vertex(u) when u==v, open u->v otherwise
};

struct DrawnMultigraph {
  std::vector<std::pair<std::string, Point>> vertices;
  std::vector<MultiEdge> edges;

  const Point& vertex(const std::string& label) const;
  bool has_vertex(const std::string& label) const;
  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

// Homotopy class of an edge, rel endpoints, with interiors avoiding every
// vertex: a word over generators indexed by the full sorted vertex set,
// well-defined up to g_u powers in front and g_v powers behind (the basepoint
// slide), which double_coset_member quotients out.
ReducedWord edge_word(const DrawnMultigraph& g, const MultiEdge& e);

// generator index (1-based, in the sorted full vertex list) of a vertex label
int vertex_generator_index(const DrawnMultigraph& g, const std::string& label);

bool is_trivial_loop(const MultiEdge& e, const DrawnMultigraph& g);
bool edges_homotopic(const MultiEdge& e1, const MultiEdge& e2, const DrawnMultigraph& g);

struct NonHomotopicReport {
  std::vector<std::string> trivial_loops;
  std::vector<std::pair<std::string, std::string>> homotopic_pairs;
  std::vector<Violation> violations;  // general position / vertex contacts
  bool ok() const { return trivial_loops.empty() && homotopic_pairs.empty() && violations.empty(); }
};

NonHomotopicReport validate_nonhomotopic(const DrawnMultigraph& g);

struct CrossingStats {
  long long cr = 0;              // total crossings, self + pairwise, with multiplicity
  long long self_crossings = 0;
  long long pair_crossings = 0;
  long long crossing_pairs = 0;  // unordered edge pairs that cross at least once
  long long max_pairwise = 0;
  long long max_self = 0;
};

CrossingStats multigraph_crossing_stats(const DrawnMultigraph& g);
CrossingStats family_crossing_stats(const std::vector<PolyCurve>& family);

}  // namespace loopcross
