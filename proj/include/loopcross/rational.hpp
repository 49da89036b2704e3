#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "loopcross/errors.hpp"

namespace loopcross {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rational& r) { return r.sign(); }
inline int sign_of(const Integer& r) { return r.sign(); }

inline Rational rational(long long p, long long q = 1) { return Rational(p, q); }

// Canonical "p/q" form, q > 0, lowest terms. Integers render as "p/1".
std::string to_string(const Rational& r);

// Parses "p/q" or a bare integer "p". Throws RationalFormatError.
Rational parse_rational(const std::string& s);

double to_double(const Rational& r);

Integer int_pow(Integer base, unsigned long exp);

// floor(log2(x)) for x >= 1.
long floor_log2(const Integer& x);

// Directed rational enclosure of log2(x) for an integer x >= 1, with
// `frac_bits` binary digits after the point. lo <= log2(x) <= hi, and
// lo == hi iff x is a power of two.
struct Log2Enclosure {
  Rational lo;
  Rational hi;
};
Log2Enclosure log2_enclosure(const Integer& x, unsigned frac_bits = 48);

// Enclosure of log2(p/q) for a rational > 0.
Log2Enclosure log2_enclosure(const Rational& x, unsigned frac_bits = 48);

}  // namespace loopcross
