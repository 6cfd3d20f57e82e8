#pragma once

#include <algorithm>
#include <optional>
#include <ostream>

namespace zlift {

/// Closed interval [lo, hi] with exact endpoints.
template <typename Scalar>
struct Interval {
  Scalar lo;
  Scalar hi;

  Interval() = default;
  Interval(const Scalar& point) : lo(point), hi(point) {}  // NOLINT
  Interval(const Scalar& l, const Scalar& h) : lo(l), hi(h) {}

  Scalar width() const { return hi - lo; }
  Scalar midpoint() const { return (lo + hi) / 2; }
  bool contains(const Scalar& x) const { return lo <= x && x <= hi; }

  /// +1 / -1 when every point of the interval has that sign, nothing when the
  /// interval touches zero.
  std::optional<int> certain_sign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    return std::nullopt;
  }

  Interval operator-() const { return {-hi, -lo}; }
  Interval& operator+=(const Interval& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
  }
  Interval& operator-=(const Interval& o) {
    Scalar l = lo - o.hi;
    hi = hi - o.lo;
    lo = l;
    return *this;
  }
  Interval& operator*=(const Interval& o) {
    Scalar a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    lo = std::min({a, b, c, d});
    hi = std::max({a, b, c, d});
    return *this;
  }
};

template <typename S>
Interval<S> operator+(Interval<S> a, const Interval<S>& b) { return a += b; }
template <typename S>
Interval<S> operator-(Interval<S> a, const Interval<S>& b) { return a -= b; }
template <typename S>
Interval<S> operator*(Interval<S> a, const Interval<S>& b) { return a *= b; }

template <typename S>
Interval<S> operator*(const S& k, const Interval<S>& a) {
  return k >= 0 ? Interval<S>(k * a.lo, k * a.hi) : Interval<S>(k * a.hi, k * a.lo);
}

template <typename S>
Interval<S> operator/(const Interval<S>& a, const Interval<S>& b) {
  // Caller guarantees 0 is not in b.
  Interval<S> inv(S(1) / b.hi, S(1) / b.lo);
  return a * inv;
}

template <typename S>
std::ostream& operator<<(std::ostream& os, const Interval<S>& iv) {
  return os << '[' << iv.lo << ", " << iv.hi << ']';
}

}  // namespace zlift
