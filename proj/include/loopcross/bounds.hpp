#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loopcross/homotopy.hpp"

namespace loopcross {

// Theorem-style lower bound m^2/(24n); hypotheses n > 1, m > 4n enforced.
Rational cr_lower_thm1(long long n, long long m);

// Turan counting bound on crossing pairs: C(m,2) - (m^2/2)(1 - 1/(3n-3)).
// May be negative (vacuous) for small m.
Rational crossing_pair_lower(long long n, long long m);

// 30 (m^2/n) log2^2(m/n): exact when m/n is a power of two, otherwise a
// certified rational upper bound on the expression.
struct Thm2Bound {
  Rational upper;
  bool exact;
};
Thm2Bound cr_upper_thm2(long long n, long long m);

// Upper bound on the maximum number f(n,k) of pairwise non-homotopic loops
// with < k self- and pairwise crossings: minimum of the unrolled recursion
// f(n,k) <= (6k f(n-1,k))^(2k), base f(1,k) <= 2k+1, and the closed form
// 2^((2k)^(2n)). Values beyond the bit budget are carried in log2 space only.
struct BoundValue {
  std::optional<Integer> exact;
  Rational log2_upper;       // certified: f_upper <= 2^log2_upper
  Integer closed_form_log2;  // (2k)^(2n), the closed form's exact exponent
  std::string provenance;
};
BoundValue f_upper(long long n, long long k, unsigned long bit_budget = 1ul << 20);

// Best applicable closed-form lower bound on f(n,k).
Integer f_lower(long long n, long long k);

struct AuditCheck {
  std::string name;
  std::string expected;
  std::string measured;
  bool pass;
};

struct AuditReport {
  long long n = 0;
  long long m = 0;
  CrossingStats stats;
  std::vector<AuditCheck> checks;
  bool pass = true;
};

// Measures a validated multigraph against the bound evaluators. Pass the
// generated Theorem-2 budget via thm2 to also check the upper bound.
AuditReport audit_instance(const DrawnMultigraph& g,
                           std::optional<Rational> thm2 = std::nullopt);

}  // namespace loopcross
