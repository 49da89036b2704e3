#pragma once

#include <vector>

#include "loopcross/homotopy.hpp"

namespace loopcross {

struct LoopFamily {
  PuncturedPlane plane;
  std::vector<PolyCurve> loops;
  std::vector<long long> windings;  // filled by gen_winding_loops / bouquet parts
};

// 2k+1 basepoint loops around a single puncture with winding numbers -k..+k,
// nested coils joined through a common corridor. The winding-w loop has
// exactly |w|-1 self-crossings. Loops whose windings both exceed 1 in absolute
// value cross each other (2 min(|w|,|w'|) - 2 times); for k <= 2 a bespoke
// nesting keeps every pair disjoint.
LoopFamily gen_winding_loops(long long k);

// All elementary loops with at most k-1 sign changes over punctures (i, 0),
// basepoint (0,-1), built directly at perturbed coordinates. Family size is
// 2 sum_{j<k} C(n-1, j); every pair crosses at most k-1 times.
LoopFamily gen_elementary_loops(int n, int k);

// The unperturbed elementary loops (vertices exactly on the puncture columns),
// ordered so that perturb_family's index-derived offsets reproduce the nested
// perturbation. Violates general position until perturbed.
std::vector<PolyCurve> unperturbed_elementary_loops(int n);
PuncturedPlane elementary_plane(int n);

// Products of j elementary loops whose first intermediate vertex is (1, +1/2):
// 2^(j(n-1)) pairwise non-homotopic loops, pairwise and self crossings <= j^2 n.
LoopFamily gen_concatenated_loops(int n, int j);

// Theorem-2 instance: Case A (n==3) loops at a third vertex built over two
// punctures, Case B (n>3) disjoint translated copies of Case A, Case C (n==2)
// loop edges at a vertex filtered by the double-coset relation.
DrawnMultigraph gen_upperbound_multigraph(int n, int m);

// Internal knobs of the Theorem-2 instance, exposed for the audit.
struct UpperboundInfo {
  char case_tag;         // 'A', 'B' or 'C'
  long long k_formula;   // ceil(2 log2^2 (2 m0)) of the Case-A core
  int j_pieces;          // concatenation length actually used
  int copies;            // Case B: number of translated copies
  long long m0;          // edges per Case-A core
};
UpperboundInfo upperbound_info(int n, int m);

// Loose extremal multigraph: max(0, 3n-3) edges, no two distinct edges cross.
DrawnMultigraph gen_loose_extremal(int n);

// n/2 disjoint two-vertex components, each carrying 2m/n loops of distinct
// windings around the companion vertex; crossing pairs < m^2/n.
DrawnMultigraph gen_disjoint_bouquets(int n, int m);

}  // namespace loopcross
