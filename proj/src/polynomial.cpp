#include "zlift/polynomial.hpp"

#include <cctype>
#include <map>

namespace zlift {

DivMod divmod(const PolynomialQ& a, const PolynomialQ& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {PolynomialQ(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lead;
    quo[static_cast<std::size_t>(k - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= c * b.coefficient(j);
  }
  return {PolynomialQ(std::move(quo)), PolynomialQ(std::move(rem))};
}

PolynomialQ gcd(PolynomialQ a, PolynomialQ b) {
  while (!b.is_zero()) {
    PolynomialQ r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

namespace {

Rational power(const Rational& base, unsigned e) {
  Rational out(1);
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

Rational resultant(const PolynomialQ& a, const PolynomialQ& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  const int da = a.degree(), db = b.degree();
  if (db == 0) return power(b.leading(), static_cast<unsigned>(da));
  if (da == 0) return power(a.leading(), static_cast<unsigned>(db));
  // Res(a, b) = (-1)^(da db) Res(b, a), and Res(b, a) = lc(b)^(da - dr) Res(b, r)
  // where r = a mod b.
  const PolynomialQ r = divmod(a, b).remainder;
  if (r.is_zero()) return Rational(0);
  Rational scale = power(b.leading(), static_cast<unsigned>(da - r.degree()));
  if ((da * db) % 2 != 0) scale = -scale;
  return scale * resultant(b, r);
}

PolynomialQ to_rational(const PolynomialZ& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& z : p.coefficients()) c.emplace_back(z);
  return PolynomialQ(std::move(c));
}

IntegerPolynomial::IntegerPolynomial(std::vector<Integer> coeffs) : p_(std::move(coeffs)) {
  if (p_.is_zero()) throw Error(Errc::zero_polynomial, "zero polynomial");
  if (p_.leading() != 1) throw Error(Errc::non_monic, "polynomial is not monic");
}

namespace {

/// Recursive-descent reader for sums of terms c*x^k.
class TermReader {
 public:
  TermReader(std::string_view text, bool allow_fractions)
      : s_(text), fractions_(allow_fractions) {}

  std::map<int, Rational> read() {
    std::map<int, Rational> terms;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sgn = 1;
      if (peek() == '+' || peek() == '-') {
        sgn = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [deg, coeff] = term();
      terms[deg] += sgn > 0 ? coeff : Rational(-coeff);
      skip();
    }
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::syntax, "cannot parse polynomial '" + std::string(s_) + "' at offset " +
                                  std::to_string(pos_) + ": " + why);
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool is_var(char c) const { return c == 'x' || c == 'a'; }
  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(s_[pos_++]);
    return d;
  }

  std::pair<int, Rational> term() {
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Rational(Integer(digits()));
      have_coeff = true;
      skip();
      if (peek() == '/') {
        if (!fractions_) fail("fractional coefficient");
        ++pos_;
        skip();
        const std::string den = digits();
        if (den.empty()) fail("missing denominator");
        if (Integer(den) == 0) fail("zero denominator");
        coeff /= Rational(Integer(den));
        skip();
      }
      if (peek() == '*') {
        ++pos_;
        skip();
        if (!is_var(peek())) fail("expected variable after '*'");
      }
    }
    if (!is_var(peek())) {
      if (!have_coeff) fail("expected coefficient or variable");
      return {0, coeff};
    }
    if (var_ == '\0') var_ = peek();
    if (peek() != var_) fail("mixed variable names");
    ++pos_;
    skip();
    int deg = 1;
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::string d = digits();
      if (d.empty()) fail("expected exponent");
      if (d.size() > 4) fail("exponent too large");
      deg = std::stoi(d);
    }
    return {deg, coeff};
  }

  std::string_view s_;
  bool fractions_;
  std::size_t pos_ = 0;
  char var_ = '\0';
};

PolynomialQ from_terms(const std::map<int, Rational>& terms) {
  if (terms.empty()) return {};
  std::vector<Rational> c(static_cast<std::size_t>(terms.rbegin()->first) + 1, Rational(0));
  for (const auto& [deg, k] : terms) c[static_cast<std::size_t>(deg)] = k;
  return PolynomialQ(std::move(c));
}

template <typename Scalar>
std::string render(const std::vector<Scalar>& c) {
  std::string out;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    const Rational v(c[static_cast<std::size_t>(k)]);
    if (v == 0) continue;
    const bool neg = v < 0;
    const Rational mag = neg ? Rational(-v) : v;
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    if (mag != 1 || k == 0) out += to_string(mag);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_square(const Integer& n, Integer& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

}  // namespace

IntegerPolynomial parse_polynomial(std::string_view text) {
  const PolynomialQ q = from_terms(TermReader(text, false).read());
  if (q.is_zero()) throw Error(Errc::zero_polynomial, "zero polynomial");
  std::vector<Integer> c;
  for (const auto& x : q.coefficients()) c.push_back(boost::multiprecision::numerator(x));
  return IntegerPolynomial(std::move(c));
}

PolynomialQ parse_rational_polynomial(std::string_view text) {
  return from_terms(TermReader(text, true).read());
}

std::string to_string(const IntegerPolynomial& p) { return render(p.coefficients()); }
std::string to_string(const PolynomialQ& p) { return render(p.coefficients()); }

Integer discriminant(const IntegerPolynomial& p) {
  const PolynomialQ f = p.rational();
  const int n = p.degree();
  Rational r = resultant(f, f.derivative());
  if ((n * (n - 1) / 2) % 2 != 0) r = -r;
  return boost::multiprecision::numerator(r);
}

bool is_squarefree(const PolynomialQ& p) { return gcd(p, p.derivative()).degree() == 0; }

bool is_irreducible(const IntegerPolynomial& p) {
  const int n = p.degree();
  if (n == 1) return true;
  if (n > 4)
    throw Error(Errc::unsupported_degree, "irreducibility test supports degree <= 4");
  const auto& a = p.coefficients();
  if (a[0] == 0) return false;
  const std::vector<Integer> divs = divisors(a[0]);
  // Rational roots of a monic integer polynomial are integers dividing a0.
  for (const auto& d : divs) {
    for (const Integer& t : {d, Integer(-d)}) {
      if (p.integral().evaluate(t) == 0) return false;
    }
  }
  if (n < 4) return true;
  // (x^2 + s x + b)(x^2 + c x + e) with b e = a0, s + c = a3,
  // s c = a2 - b - e, s e + b c = a1.
  for (const auto& d : divs) {
    for (const Integer& b : {d, Integer(-d)}) {
      const Integer e = a[0] / b;
      const Integer prod = a[2] - b - e;
      const Integer disc = a[3] * a[3] - 4 * prod;
      Integer root;
      if (!is_square(disc, root)) continue;
      for (const Integer& sq : {root, Integer(-root)}) {
        if ((a[3] + sq) % 2 != 0) continue;
        const Integer s = (a[3] + sq) / 2;
        const Integer c = a[3] - s;
        if (s * e + b * c == a[1]) return false;
      }
    }
  }
  return true;
}

}  // namespace zlift
