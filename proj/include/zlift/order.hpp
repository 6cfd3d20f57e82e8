#pragma once

#include <string>
#include <vector>

#include "zlift/linalg.hpp"
#include "zlift/polynomial.hpp"

namespace zlift {

/// Primes p with p^2 dividing n (n != 0). Trial division up to 2^20; the
/// cofactor is resolved exactly when |n| < 2^60, otherwise throws
/// Errc::precision_exhausted.
std::vector<Integer> square_dividing_primes(const Integer& n);

bool is_squarefree_integer(const Integer& n);

/// Canonical basis of the Z-module spanned by the rows (power-basis
/// coordinates): element i has degree exactly i with positive leading
/// coordinate, so element 0 is the positive generator of the module's
/// intersection with Q (1 for an order).
MatrixQ triangular_basis(const MatrixQ& generators);

/// Rows: power-basis coordinates of an integral basis of the maximal order
/// of Q[x]/(f), in triangular form (first element 1). f must be irreducible.
MatrixQ maximal_order_basis(const IntegerPolynomial& f);

struct OrderCheck {
  bool ok = true;
  std::string reason;
};

/// Checks that `basis` (rows over the power basis) spans the maximal order:
/// elements integral, contains 1, closed under multiplication, p-maximal at
/// every p with p^2 | disc.
OrderCheck check_maximal_order(const IntegerPolynomial& f, const MatrixQ& basis);

}  // namespace zlift
