#include "loopcross/bounds.hpp"

#include <algorithm>

namespace loopcross {

Rational cr_lower_thm1(long long n, long long m) {
  if (n <= 1) throw ParameterOutOfRange("cr_lower_thm1 needs n > 1");
  if (m <= 4 * n) throw ParameterOutOfRange("cr_lower_thm1 needs m > 4n");
  return Rational(Integer(m) * m, Integer(24) * n);
}

Rational crossing_pair_lower(long long n, long long m) {
  if (n < 2) throw ParameterOutOfRange("crossing_pair_lower needs n >= 2");
  Rational pairs = Rational(Integer(m) * (m - 1), 2);
  Rational slack = Rational(Integer(m) * m, 2) * (Rational(1) - Rational(1, 3 * n - 3));
  return pairs - slack;
}

Thm2Bound cr_upper_thm2(long long n, long long m) {
  if (n < 2) throw ParameterOutOfRange("cr_upper_thm2 needs n >= 2");
  if (m <= 4 * n) throw ParameterOutOfRange("cr_upper_thm2 needs m > 4n");
  Rational ratio(m, n);
  Rational lead = Rational(30) * Rational(Integer(m) * m, n);
  // exact when m/n is a power of two
  if (num(ratio) == (Integer(1) << static_cast<unsigned>(floor_log2(num(ratio)))) &&
      den(ratio) == (Integer(1) << static_cast<unsigned>(floor_log2(den(ratio))))) {
    Rational log2r = Rational(floor_log2(num(ratio)) - floor_log2(den(ratio)));
    return {lead * log2r * log2r, true};
  }
  Log2Enclosure e = log2_enclosure(ratio);
  Rational hi = e.hi > 0 ? e.hi : Rational(0);  // squared bound needs the magnitude
  Rational lo_mag = e.lo < 0 ? -e.lo : e.lo;
  Rational mag = std::max(hi, lo_mag);
  return {lead * mag * mag, false};
}

BoundValue f_upper(long long n, long long k, unsigned long bit_budget) {
  if (n < 1 || k < 1) throw ParameterOutOfRange("f_upper needs n,k >= 1");
  BoundValue out;
  out.closed_form_log2 = int_pow(Integer(2) * k, static_cast<unsigned long>(2 * n));

  // unrolled recursion, exact while it fits the bit budget
  std::optional<Integer> exact = Integer(2 * k + 1);
  Rational log_rec = log2_enclosure(Integer(2 * k + 1)).hi;
  Rational log_6k = log2_enclosure(Integer(6) * k).hi;
  for (long long level = 2; level <= n; ++level) {
    log_rec = Rational(2 * k) * (log_6k + log_rec);
    if (exact) {
      Integer base = Integer(6) * k * *exact;
      unsigned long bits = static_cast<unsigned long>(floor_log2(base)) + 1;
      if (bits * static_cast<unsigned long>(2 * k) > bit_budget)
        exact.reset();
      else
        exact = int_pow(base, static_cast<unsigned long>(2 * k));
    }
  }

  // closed form 2^((2k)^(2n)) as exact integer when affordable
  std::optional<Integer> closed_exact;
  if (out.closed_form_log2 <= Integer(bit_budget))
    closed_exact = Integer(1) << out.closed_form_log2.convert_to<unsigned long>();

  bool use_recursion;
  if (exact && closed_exact)
    use_recursion = *exact <= *closed_exact;
  else if (exact)
    use_recursion = log_rec <= Rational(out.closed_form_log2);
  else if (closed_exact)
    use_recursion = false;
  else
    use_recursion = log_rec <= Rational(out.closed_form_log2);

  if (use_recursion) {
    out.exact = exact;
    out.log2_upper = out.exact ? log2_enclosure(*out.exact).hi : log_rec;
    out.provenance = "recursion";
  } else {
    out.exact = closed_exact;
    out.log2_upper = Rational(out.closed_form_log2);
    out.provenance = "closed-form";
  }
  return out;
}

namespace {

Integer binomial(long long n, long long j) {
  if (j < 0 || j > n) return 0;
  Integer out = 1;
  for (long long i = 0; i < j; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}

}  // namespace

Integer f_lower(long long n, long long k) {
  if (n < 2 || k < 1) throw ParameterOutOfRange("f_lower needs n >= 2, k >= 1");
  Integer best = 0;
  // sign-change construction: 2 sum_{j<k} C(n-1,j) for k <= n; f(n,n) >= 2^n otherwise
  {
    long long kk = std::min(k, n);
    Integer sum = 0;
    for (long long j = 0; j < kk; ++j) sum += binomial(n - 1, j);
    best = std::max(best, Integer(2) * sum);
  }
  // 2^(sqrt(nk)/3) in the regime 2 <= n <= 2k, exponent floored
  if (n <= 2 * k) {
    Integer s = boost::multiprecision::sqrt(Integer(n) * k);
    unsigned long e = (s / 3).convert_to<unsigned long>();
    best = std::max(best, Integer(1) << e);
  }
  // (n/k)^(k-1) in the regime n >= 2k (ceiling: f is an integer)
  if (n >= 2 * k && k >= 1) {
    Integer p = int_pow(Integer(n), static_cast<unsigned long>(k - 1));
    Integer q = int_pow(Integer(k), static_cast<unsigned long>(k - 1));
    best = std::max(best, Integer((p + q - 1) / q));
  }
  return best;
}

AuditReport audit_instance(const DrawnMultigraph& g, std::optional<Rational> thm2) {
  NonHomotopicReport rep = validate_nonhomotopic(g);
  if (!rep.ok()) throw InvalidInstance("audit_instance: multigraph is not non-homotopic");
  AuditReport out;
  out.n = g.vertex_count();
  out.m = g.edge_count();
  out.stats = multigraph_crossing_stats(g);

  auto add = [&](const std::string& name, const std::string& expected,
                 const std::string& measured, bool pass) {
    out.checks.push_back({name, expected, measured, pass});
    out.pass = out.pass && pass;
  };

  if (out.n > 1 && out.m > 4 * out.n) {
    Rational bound = cr_lower_thm1(out.n, out.m);
    add("cr >= m^2/(24n)", ">= " + to_string(bound), std::to_string(out.stats.cr),
        Rational(out.stats.cr) >= bound);
  }
  if (out.n >= 2) {
    Rational bound = crossing_pair_lower(out.n, out.m);
    add("crossing pairs >= Turan bound", ">= " + to_string(bound),
        std::to_string(out.stats.crossing_pairs), Rational(out.stats.crossing_pairs) >= bound);
  }
  if (thm2) {
    add("cr <= 30 (m^2/n) log2^2(m/n)", "<= " + to_string(*thm2), std::to_string(out.stats.cr),
        Rational(out.stats.cr) <= *thm2);
  }
  return out;
}

}  // namespace loopcross
