#pragma once

#include <optional>

#include "zlift/field.hpp"

namespace zlift {

/// Q(sqrt D) presented by x^2 - D with integral basis {1, tau}.
struct QuadField {
  long D = 0;
  FieldPtr field;
  FieldElement tau;
};

/// Throws Errc::invalid_argument unless D >= 2 is squarefree.
QuadField quadratic_field(long D);

/// The codifferent element with tr(delta) = 0, tr(delta tau) = 1.
FieldElement delta_f(long D);

struct QuadraticVerdict {
  enum class Kind { obstruction, exceptional };
  Kind kind = Kind::obstruction;
  QuadField field;
  long a = 0;  // alpha = a + tau
  std::optional<FieldElement> alpha;
  std::optional<FieldElement> delta;
  SignVector epsilon;  // (rho_1, rho_2) with rho_1(sqrt D) > 0
  Rational norm_alpha;
};

QuadraticVerdict certify_quadratic(long D);

struct SegmentBound {
  /// (rho_1(tau) - rho_2(tau))^2, compared against 3^2.
  Rational difference_sq;
  bool passes = false;
};

SegmentBound segment_bound_check(long D);

/// Signature in the (rho_1, rho_2) frame where rho_1(sqrt D) > 0.
SignVector quadratic_signature(const FieldElement& x);

}  // namespace zlift
