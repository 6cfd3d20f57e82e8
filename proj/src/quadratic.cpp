#include "zlift/quadratic.hpp"

#include "zlift/order.hpp"

namespace zlift {

namespace {

bool one_mod_four(long D) { return D % 4 == 1; }

FieldElement delta_in(const QuadField& f) {
  VectorQ c(2);
  c << 0, one_mod_four(f.D) ? Rational(1, f.D) : Rational(1, 2 * f.D);
  return f.field->element(c);
}

}  // namespace

QuadField quadratic_field(long D) {
  if (D < 2 || !is_squarefree_integer(Integer(D)))
    throw Error(Errc::invalid_argument, "D must be a squarefree integer >= 2");
  MatrixQ basis(2, 2);
  if (one_mod_four(D)) basis << 1, 0, Rational(1, 2), Rational(1, 2);
  else basis << 1, 0, 0, 1;
  FieldPtr k = NumberField::create(IntegerPolynomial({Integer(-D), 0, 1}), basis);
  FieldElement tau = k->basis_element(1);
  return {D, std::move(k), std::move(tau)};
}

FieldElement delta_f(long D) { return delta_in(quadratic_field(D)); }

SignVector quadratic_signature(const FieldElement& x) {
  if (x.field_ref().degree() != 2) throw Error(Errc::unsupported_degree, "quadratic field expected");
  // ascending roots are (-sqrt D, sqrt D)
  return signature(x).reversed();
}

QuadraticVerdict certify_quadratic(long D) {
  QuadField f = quadratic_field(D);
  const SignVector target({1, -1});
  for (long a : {0L, -1L, 1L, -2L, 2L}) {
    FieldElement alpha = f.tau + Rational(a);
    if (!(quadratic_signature(alpha) == target)) continue;
    const Rational n = norm(alpha);
    if (abs(n) == 1) continue;
    FieldElement delta = delta_in(f);
    return {QuadraticVerdict::Kind::obstruction, std::move(f), a, std::move(alpha),
            std::move(delta), target, n};
  }
  return {QuadraticVerdict::Kind::exceptional, std::move(f), 0, std::nullopt, std::nullopt,
          SignVector(), Rational(0)};
}

SegmentBound segment_bound_check(long D) {
  quadratic_field(D);
  const Rational diff_sq = one_mod_four(D) ? Rational(D) : Rational(4 * D);
  return {diff_sq, diff_sq < 9};
}

}  // namespace zlift
