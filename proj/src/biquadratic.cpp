#include "zlift/biquadratic.hpp"

#include <algorithm>
#include <numeric>

#include "zlift/order.hpp"

namespace zlift {

namespace {

constexpr int kSigns[4][3] = {{1, 1, 1}, {-1, 1, -1}, {1, -1, -1}, {-1, -1, 1}};

// Enclosure of sqrt(n) of width 2^-k.
IntervalQ sqrt_interval(long n, const Rational& width) {
  unsigned k = 0;
  while (pow2_inverse(k) > width) ++k;
  const Integer scaled = Integer(n) << (2 * k);
  const Integer s = boost::multiprecision::sqrt(scaled);
  const Rational unit = pow2_inverse(k);
  if (s * s == scaled) return IntervalQ(Rational(s) * unit);
  return {Rational(s) * unit, Rational(s + 1) * unit};
}

BiquadElement make(const BiquadField& f, Rational x, Rational y, Rational z, Rational w) {
  return BiquadElement(f, {std::move(x), std::move(y), std::move(z), std::move(w)});
}

// 1/(k sqrt a) = sqrt(a) / (k a)
Rational inv(long k, long a) { return Rational(1, k * a); }

bool matches(int case_id, long a, long b) {
  const long ma = a % 4, mb = b % 4;
  switch (case_id) {
    case 1: return ma == 2 && mb == 3;
    case 2: return ma == 2 && mb == 1;
    case 3: return ma == 3 && mb == 1;
    case 4: return ma == 1 && mb == 1 && std::gcd(a, b) % 4 == 1;
    case 5: return ma == 1 && mb == 1 && std::gcd(a, b) % 4 == 3;
  }
  return false;
}

}  // namespace

BiquadElement BiquadElement::conjugate(int m) const {
  if (m < 0 || m > 3) throw Error(Errc::invalid_argument, "embedding index out of range");
  return BiquadElement(p_, q_, r_,
                       {c_[0], c_[1] * kSigns[m][0], c_[2] * kSigns[m][1], c_[3] * kSigns[m][2]});
}

BiquadElement& BiquadElement::operator+=(const BiquadElement& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

BiquadElement& BiquadElement::operator-=(const BiquadElement& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

BiquadElement operator*(const BiquadElement& a, const BiquadElement& b) {
  if (a.p_ != b.p_ || a.q_ != b.q_ || a.r_ != b.r_)
    throw Error(Errc::field_mismatch, "elements of different biquadratic fields");
  const long g = std::gcd(a.p_, a.q_);
  const auto& x = a.c_;
  const auto& y = b.c_;
  // sqrt p sqrt q = g sqrt r, sqrt p sqrt r = (p/g) sqrt q, sqrt q sqrt r = (q/g) sqrt p
  return BiquadElement(
      a.p_, a.q_, a.r_,
      {x[0] * y[0] + a.p_ * x[1] * y[1] + a.q_ * x[2] * y[2] + a.r_ * x[3] * y[3],
       x[0] * y[1] + x[1] * y[0] + (a.q_ / g) * (x[2] * y[3] + x[3] * y[2]),
       x[0] * y[2] + x[2] * y[0] + (a.p_ / g) * (x[1] * y[3] + x[3] * y[1]),
       x[0] * y[3] + x[3] * y[0] + g * (x[1] * y[2] + x[2] * y[1])});
}

BiquadElement operator*(const Rational& k, BiquadElement a) {
  for (auto& c : a.c_) c *= k;
  return a;
}

Rational trace(const BiquadElement& x) { return 4 * x[0]; }

Rational norm(const BiquadElement& x) {
  const BiquadElement n = (x * x.conjugate(1)) * (x.conjugate(2) * x.conjugate(3));
  if (n[1] != 0 || n[2] != 0 || n[3] != 0)
    throw Error(Errc::geometric_failure, "norm is not rational");
  return n[0];
}

IntervalQ embedding(const BiquadElement& x, int m, const Rational& width) {
  const BiquadElement c = x.conjugate(m);
  // each radical enclosure is scaled by a coefficient; keep the sum below width
  Rational scale(1);
  for (std::size_t i = 1; i < 4; ++i) scale += abs(c[i]);
  const Rational w = width / scale;
  IntervalQ out(c[0]);
  const long rad[3] = {x.p(), x.q(), x.r()};
  for (std::size_t i = 0; i < 3; ++i)
    if (c[i + 1] != 0) out += c[i + 1] * sqrt_interval(rad[i], w);
  return out;
}

SignVector signature(const BiquadElement& x) {
  if (x[0] == 0 && x[1] == 0 && x[2] == 0 && x[3] == 0)
    throw Error(Errc::zero_element, "signature of zero");
  std::vector<int> s(4);
  for (int m = 0; m < 4; ++m)
    s[static_cast<std::size_t>(m)] =
        certified_sign([&](const Rational& w) { return embedding(x, m, w); });
  return SignVector(std::move(s));
}

BiquadElement sqrt_element(const BiquadField& f, long a) {
  if (a == f.p) return make(f, 0, 1, 0, 0);
  if (a == f.q) return make(f, 0, 0, 1, 0);
  if (a == f.r) return make(f, 0, 0, 0, 1);
  throw Error(Errc::invalid_argument, "not one of p, q, r");
}

BiquadField normalize_case(long p, long q) {
  if (p < 2 || q < 2) throw Error(Errc::invalid_argument, "p and q must exceed 1");
  if (p == q) throw Error(Errc::invalid_argument, "p and q must differ");
  for (long n : {p, q})
    if (!is_squarefree_integer(Integer(n)))
      throw Error(Errc::invalid_argument, std::to_string(n) + " is not squarefree");
  const long g = std::gcd(p, q);
  const long r = (p / g) * (q / g);
  std::array<long, 3> sorted{p, q, r};
  std::sort(sorted.begin(), sorted.end());
  for (int id = 1; id <= 5; ++id) {
    auto t = sorted;
    do {
      if (matches(id, t[0], t[1])) {
        const int mu = id == 4 ? 1 : id == 5 ? -1 : 0;
        return {t[0], t[1], t[2], id, mu, p, q};
      }
    } while (std::next_permutation(t.begin(), t.end()));
  }
  throw Error(Errc::invalid_argument, "no integral-basis case matches");
}

std::array<BiquadElement, 4> integral_basis(const BiquadField& f) {
  const Rational h(1, 2), qt(1, 4);
  switch (f.case_id) {
    case 1:
      return {make(f, 1, 0, 0, 0), make(f, 0, 1, 0, 0), make(f, 0, 0, 1, 0), make(f, 0, h, 0, h)};
    case 2:
    case 3:
      return {make(f, 1, 0, 0, 0), make(f, 0, 1, 0, 0), make(f, h, 0, h, 0), make(f, 0, h, 0, h)};
    case 4:
      return {make(f, 1, 0, 0, 0), make(f, h, h, 0, 0), make(f, h, 0, h, 0),
              make(f, qt, qt, qt, qt)};
    case 5:
      return {make(f, 1, 0, 0, 0), make(f, h, h, 0, 0), make(f, h, 0, h, 0),
              make(f, qt, -qt, qt, qt)};
  }
  throw Error(Errc::invalid_argument, "field is not normalized");
}

std::array<BiquadElement, 4> codifferent_basis(const BiquadField& f) {
  const long p = f.p, q = f.q, r = f.r;
  const Rational qt(1, 4);
  std::array<BiquadElement, 4> d;
  switch (f.case_id) {
    case 1:
      d = {make(f, qt, 0, 0, 0), make(f, 0, inv(4, p), 0, -inv(4, r)), make(f, 0, 0, inv(4, q), 0),
           make(f, 0, 0, 0, inv(2, r))};
      break;
    case 2:
    case 3:
      d = {make(f, qt, 0, -inv(4, q), 0), make(f, 0, inv(4, p), 0, -inv(4, r)),
           make(f, 0, 0, inv(2, q), 0), make(f, 0, 0, 0, inv(2, r))};
      break;
    case 4:
      d = {make(f, qt, -inv(4, p), -inv(4, q), inv(4, r)), make(f, 0, inv(2, p), 0, -inv(2, r)),
           make(f, 0, 0, inv(2, q), -inv(2, r)), make(f, 0, 0, 0, inv(1, r))};
      break;
    case 5:
      d = {make(f, qt, -inv(4, p), -inv(4, q), -inv(4, r)), make(f, 0, inv(2, p), 0, inv(2, r)),
           make(f, 0, 0, inv(2, q), -inv(2, r)), make(f, 0, 0, 0, inv(1, r))};
      break;
    default:
      throw Error(Errc::invalid_argument, "field is not normalized");
  }
  const auto w = integral_basis(f);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (trace(w[i] * d[j]) != (i == j ? 1 : 0))
        throw Error(Errc::geometric_failure, "codifferent basis fails the duality identity");
  return d;
}

BiquadWitness witness(const BiquadField& f) {
  BiquadElement alpha, delta;
  std::string rule;
  switch (f.case_id) {
    case 1:
      alpha = sqrt_element(f, f.q);
      delta = make(f, 0, 0, inv(4, f.q), 0);
      rule = "case1: alpha = sqrt q";
      break;
    case 2:
    case 3:
      if (f.p < f.r) {
        alpha = sqrt_element(f, f.p);
        delta = make(f, 0, inv(4, f.p), 0, -inv(4, f.r));
        rule = "case2/3: alpha = sqrt p (p < r)";
      } else {
        alpha = sqrt_element(f, f.r);
        delta = make(f, 0, -inv(4, f.p), 0, inv(4, f.r));
        rule = "case2/3: alpha = sqrt r (p > r)";
      }
      break;
    case 4:
    case 5: {
      std::array<long, 3> s{f.p, f.q, f.r};
      std::sort(s.begin(), s.end());
      long a = s[0], b = s[1];
      rule = "case4/5: alpha = (1 + sqrt a)/2, a smallest";
      if (a == 5) {
        a = s[1];
        b = s[2];
        rule = "case4/5: alpha = (1 + sqrt b)/2, smallest is 5";
      }
      alpha = Rational(1, 2) * (make(f, 1, 0, 0, 0) + sqrt_element(f, a));
      delta = Rational(1, 2 * a) * sqrt_element(f, a) - Rational(1, 2 * b) * sqrt_element(f, b);
      break;
    }
    default:
      throw Error(Errc::invalid_argument, "field is not normalized");
  }
  SignVector eps = signature(alpha);
  if (!(signature(delta) == eps) || trace(delta * alpha) != 1 || abs(norm(alpha)) == 1)
    throw Error(Errc::geometric_failure, "biquadratic witness fails its own checks");
  return {std::move(alpha), std::move(delta), std::move(eps), std::move(rule)};
}

IntegerPolynomial biquadratic_defining_polynomial(long p, long q) {
  return IntegerPolynomial({Integer((p - q) * (p - q)), 0, Integer(-2 * (p + q)), 0, 1});
}

}  // namespace zlift
