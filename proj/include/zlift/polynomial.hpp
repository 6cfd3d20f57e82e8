#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zlift/error.hpp"
#include "zlift/rational.hpp"

namespace zlift {

/// Dense univariate polynomial, coefficients stored constant term first.
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients and degree -1.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Scalar& k) { return Polynomial({k}); }
  static Polynomial monomial(const Scalar& k, int degree) {
    std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar(0));
    c.back() = k;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coefficients() const { return c_; }
  Scalar coefficient(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Scalar(0);
  }
  const Scalar& leading() const { return c_.back(); }

  /// Horner evaluation at any ring-like value (scalars or intervals).
  template <typename T>
  T evaluate(const T& x) const {
    if (c_.empty()) return T(Scalar(0));
    T acc = T(c_.back());
    for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) {
      acc = acc * x;
      acc += T(*it);
    }
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    auto c = c_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
  Polynomial& operator*=(const Scalar& k) {
    for (auto& x : c_) x *= k;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& k) { return a *= k; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using PolynomialQ = Polynomial<Rational>;
using PolynomialZ = Polynomial<Integer>;

struct DivMod {
  PolynomialQ quotient;
  PolynomialQ remainder;
};

/// Euclidean division over the rationals. Throws on a zero divisor.
DivMod divmod(const PolynomialQ& a, const PolynomialQ& b);
PolynomialQ gcd(PolynomialQ a, PolynomialQ b);  // monic, or zero
/// Res(a, b) = lc(a)^deg(b) * prod_{a(t)=0} b(t).
Rational resultant(const PolynomialQ& a, const PolynomialQ& b);

PolynomialQ to_rational(const PolynomialZ& p);

/// Monic polynomial with integer coefficients.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  /// Throws Errc::zero_polynomial or Errc::non_monic.
  explicit IntegerPolynomial(std::vector<Integer> coeffs);

  int degree() const { return p_.degree(); }
  const std::vector<Integer>& coefficients() const { return p_.coefficients(); }
  const PolynomialZ& integral() const { return p_; }
  PolynomialQ rational() const { return to_rational(p_); }

  friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    return a.p_ == b.p_;
  }

 private:
  PolynomialZ p_;
};

/// Accepts e.g. "x^3-2x^2-x+1", "x^3 - 2*x^2 - x + 1". Integer coefficients
/// only; the result must be monic.
IntegerPolynomial parse_polynomial(std::string_view text);

/// Same grammar but coefficients may be rationals ("1/2x^2+1/2", "1/2*x");
/// no monic requirement. Used for basis entries.
PolynomialQ parse_rational_polynomial(std::string_view text);

/// Canonical text "x^3-2x^2-x+1" that parse_polynomial maps back.
std::string to_string(const IntegerPolynomial& p);
std::string to_string(const PolynomialQ& p);

/// Discriminant of a monic polynomial, (-1)^(n(n-1)/2) Res(f, f').
Integer discriminant(const IntegerPolynomial& p);

bool is_squarefree(const PolynomialQ& p);

/// Irreducibility over Q. Implemented for degree <= 4; throws
/// Errc::unsupported_degree above.
bool is_irreducible(const IntegerPolynomial& p);

}  // namespace zlift
