#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace zlift {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Parses "n" or "n/d" (optional leading sign). The result is canonical.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise; the inverse of parse_rational.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Integer& z) { return z.sign(); }

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
/// Nearest integer, halves rounded up: floor(q + 1/2).
Integer round_nearest(const Rational& q);

inline Integer floor(const Integer& z) { return z; }
inline Integer round_nearest(const Integer& z) { return z; }

inline Rational abs(const Rational& q) { return q.sign() < 0 ? Rational(-q) : q; }
inline Integer abs(const Integer& z) { return z.sign() < 0 ? Integer(-z) : z; }

/// 2^-bits as an exact rational.
Rational pow2_inverse(unsigned bits);

double to_double(const Rational& q);

}  // namespace zlift
