#pragma once

#include <cstddef>
#include <vector>

#include "zlift/interval.hpp"
#include "zlift/polynomial.hpp"

namespace zlift {

using IntervalQ = Interval<Rational>;

std::vector<PolynomialQ> sturm_sequence(const PolynomialQ& p);

/// Number of distinct real roots in the closed interval [lo, hi].
int count_roots(const PolynomialQ& p, const Rational& lo, const Rational& hi);
int count_real_roots(const PolynomialQ& p);

/// Disjoint isolating intervals for the real roots of a squarefree
/// polynomial, ascending. Each interval either is a single rational root
/// [r, r] or contains exactly one root in its interior.
class RootIsolation {
 public:
  RootIsolation() = default;
  RootIsolation(PolynomialQ p, std::vector<IntervalQ> intervals)
      : p_(std::move(p)), intervals_(std::move(intervals)) {}

  std::size_t size() const { return intervals_.size(); }
  const IntervalQ& operator[](std::size_t i) const { return intervals_[i]; }
  const std::vector<IntervalQ>& intervals() const { return intervals_; }
  const PolynomialQ& polynomial() const { return p_; }

  /// Bisects interval i until its width is at most `width`.
  void refine(std::size_t i, const Rational& width);
  void refine_all(const Rational& width);

  /// sign(root_i - c), exact.
  int compare(std::size_t i, const Rational& c);

 private:
  void bisect(std::size_t i);

  PolynomialQ p_;
  std::vector<IntervalQ> intervals_;
};

/// Throws Errc::not_squarefree.
RootIsolation isolate_roots(const PolynomialQ& p, const Rational& width);
RootIsolation isolate_roots(const IntegerPolynomial& p, const Rational& width);

/// True iff every complex root is real. Throws Errc::reducible.
bool is_totally_real(const IntegerPolynomial& p);

/// 2^-20 unless ZLIFT_ISOLATION_WIDTH holds a positive rational.
Rational default_isolation_width();

}  // namespace zlift
