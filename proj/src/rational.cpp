#include "loopcross/rational.hpp"

#include <cctype>

namespace loopcross {

std::string to_string(const Rational& r) {
  return num(r).str() + "/" + den(r).str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw RationalFormatError("empty rational literal");
  auto slash = s.find('/');
  auto check_int = [&](const std::string& part) {
    if (part.empty()) throw RationalFormatError("bad rational literal: '" + s + "'");
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw RationalFormatError("bad rational literal: '" + s + "'");
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw RationalFormatError("bad rational literal: '" + s + "'");
  };
  try {
    if (slash == std::string::npos) {
      check_int(s);
      return Rational(Integer(s));
    }
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    check_int(p);
    check_int(q);
    Integer qp(p), qq(q);
    if (qq == 0) throw RationalFormatError("zero denominator in '" + s + "'");
    return Rational(qp, qq);
  } catch (const RationalFormatError&) {
    throw;
  } catch (const std::exception&) {
    throw RationalFormatError("bad rational literal: '" + s + "'");
  }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Integer int_pow(Integer base, unsigned long exp) {
  Integer out = 1;
  while (exp) {
    if (exp & 1) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

long floor_log2(const Integer& x) {
  if (x <= 0) throw ParameterOutOfRange("floor_log2 needs x >= 1");
  return static_cast<long>(boost::multiprecision::msb(x));
}

Log2Enclosure log2_enclosure(const Integer& x, unsigned frac_bits) {
  if (x <= 0) throw ParameterOutOfRange("log2 needs x >= 1");
  long k = floor_log2(x);
  // Binary digit extraction on y = x / 2^k in [1, 2); truncate the square to
  // `guard` bits each step so numerators stay small. Truncation only lowers y,
  // so the digits form a lower bound; one ulp on top gives the upper bound.
  if (x == int_pow(2, static_cast<unsigned long>(k))) return {Rational(k), Rational(k)};
  Rational y = Rational(x, int_pow(2, static_cast<unsigned long>(k)));
  Rational frac_lo = 0;
  Rational place(1, 2);
  const unsigned guard = frac_bits + 16;
  const Integer scale = int_pow(2, guard);
  for (unsigned i = 0; i < frac_bits; ++i) {
    y = y * y;
    // truncate y to `guard` fractional bits; truncation only lowers the digits
    Integer t = (num(y) * scale) / den(y);
    y = Rational(t, scale);
    if (y >= 2) {
      frac_lo += place;
      y /= 2;
    }
    place /= 2;
  }
  Rational lo = Rational(k) + frac_lo;
  Rational hi = lo + place * 4;
  return {lo, hi};
}

Log2Enclosure log2_enclosure(const Rational& x, unsigned frac_bits) {
  if (x <= 0) throw ParameterOutOfRange("log2 needs x > 0");
  Log2Enclosure n = log2_enclosure(num(x), frac_bits);
  Log2Enclosure d = log2_enclosure(den(x), frac_bits);
  return {n.lo - d.hi, n.hi - d.lo};
}

}  // namespace loopcross
