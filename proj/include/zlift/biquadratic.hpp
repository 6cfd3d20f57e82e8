#pragma once

#include <array>
#include <string>

#include "zlift/field.hpp"

namespace zlift {

/// Real biquadratic field Q(sqrt p, sqrt q), r = pq / gcd(p, q)^2, with
/// (p, q, r) ordered to match one of the five integral-basis cases.
struct BiquadField {
  long p = 0;
  long q = 0;
  long r = 0;
  int case_id = 0;
  int mu = 0;  // +1 for case 4, -1 for case 5, 0 otherwise
  long input_p = 0;
  long input_q = 0;
};

/// x + y sqrt p + z sqrt q + w sqrt r.
class BiquadElement {
 public:
  BiquadElement() = default;
  BiquadElement(const BiquadField& f, std::array<Rational, 4> coords)
      : p_(f.p), q_(f.q), r_(f.r), c_(std::move(coords)) {}
  BiquadElement(long p, long q, long r, std::array<Rational, 4> coords)
      : p_(p), q_(q), r_(r), c_(std::move(coords)) {}

  const std::array<Rational, 4>& coords() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }

  /// Image under the m-th embedding of the sign table (m = 0..3):
  /// rho_1 = (+,+,+), rho_2 = (-,+,-), rho_3 = (+,-,-), rho_4 = (-,-,+) on
  /// (sqrt p, sqrt q, sqrt r).
  BiquadElement conjugate(int m) const;

  BiquadElement& operator+=(const BiquadElement& o);
  BiquadElement& operator-=(const BiquadElement& o);
  friend BiquadElement operator+(BiquadElement a, const BiquadElement& b) { return a += b; }
  friend BiquadElement operator-(BiquadElement a, const BiquadElement& b) { return a -= b; }
  friend BiquadElement operator*(const BiquadElement& a, const BiquadElement& b);
  friend BiquadElement operator*(const Rational& k, BiquadElement a);
  friend bool operator==(const BiquadElement&, const BiquadElement&) = default;

  long p() const { return p_; }
  long q() const { return q_; }
  long r() const { return r_; }

 private:
  long p_ = 0, q_ = 0, r_ = 0;
  std::array<Rational, 4> c_{};
};

Rational trace(const BiquadElement& x);  // 4x
Rational norm(const BiquadElement& x);   // product of the four conjugates
/// Interval enclosure of rho_m(x) (m = 0..3).
IntervalQ embedding(const BiquadElement& x, int m, const Rational& width);
/// Signs under rho_1..rho_4 of the sign table.
SignVector signature(const BiquadElement& x);

/// sqrt of one of p, q, r as an element (throws for other values).
BiquadElement sqrt_element(const BiquadField& f, long a);

/// Throws Errc::invalid_argument for non-squarefree, equal or < 2 inputs.
BiquadField normalize_case(long p, long q);

std::array<BiquadElement, 4> integral_basis(const BiquadField& f);
/// Dual basis of the integral basis under the trace form; the duality
/// identity is checked before returning.
std::array<BiquadElement, 4> codifferent_basis(const BiquadField& f);

struct BiquadWitness {
  BiquadElement alpha;
  BiquadElement delta;
  SignVector epsilon;
  std::string rule;  // which branch produced it
};

BiquadWitness witness(const BiquadField& f);

/// Minimal polynomial of sqrt p + sqrt q.
IntegerPolynomial biquadratic_defining_polynomial(long p, long q);

}  // namespace zlift
