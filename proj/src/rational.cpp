#include "zlift/rational.hpp"

#include <cctype>

#include "zlift/error.hpp"

namespace zlift {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::syntax: return "syntax error";
    case Errc::non_monic: return "non-monic polynomial";
    case Errc::zero_polynomial: return "zero polynomial";
    case Errc::reducible: return "reducible polynomial";
    case Errc::not_squarefree: return "not squarefree";
    case Errc::not_totally_real: return "not totally real";
    case Errc::unsupported_degree: return "unsupported degree";
    case Errc::field_mismatch: return "field mismatch";
    case Errc::division_by_zero: return "division by zero";
    case Errc::zero_element: return "zero element";
    case Errc::non_integral: return "non-integral element";
    case Errc::dependent_basis: return "dependent basis";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::geometric_failure: return "geometric precondition failure";
    case Errc::precision_exhausted: return "precision exhausted";
    case Errc::io: return "i/o error";
  }
  return "unknown error";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw Error(Errc::syntax, "bad rational '" + std::string(whole) + "'");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(Errc::syntax, "bad rational '" + std::string(whole) + "'");
  Integer z{std::string(s)};
  return neg ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  Integer num = parse_integer(s.substr(0, slash), text);
  std::string_view den_text = s.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-'))
    throw Error(Errc::syntax, "bad rational '" + std::string(text) + "'");
  Integer den = parse_integer(den_text, text);
  if (den == 0) throw Error(Errc::division_by_zero, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

std::string to_string(const Integer& z) { return z.str(); }

Integer floor(const Rational& q) {
  const Integer n = boost::multiprecision::numerator(q);
  const Integer d = boost::multiprecision::denominator(q);
  Integer t = n / d;
  if (n % d != 0 && n < 0) t -= 1;
  return t;
}

Integer ceil(const Rational& q) { return -floor(Rational(-q)); }

Integer round_nearest(const Rational& q) { return floor(Rational(q + Rational(1, 2))); }

Rational pow2_inverse(unsigned bits) {
  Integer d(1);
  d <<= bits;
  return Rational(Integer(1), d);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace zlift
