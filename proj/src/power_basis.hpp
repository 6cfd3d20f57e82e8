#pragma once

// Arithmetic on power-basis coordinate vectors of Q[x]/(f), shared by the
// field and order code.

#include <vector>

#include "zlift/linalg.hpp"
#include "zlift/polynomial.hpp"

namespace zlift::detail {

struct PowerBasis {
  int d = 0;
  std::vector<Integer> f;        // monic coefficients, constant first
  std::vector<Rational> traces;  // tr(x^k), k in [0, 2d-2]
  std::vector<VectorQ> reductions;  // x^k on the power basis, k in [0, 2d-2]

  explicit PowerBasis(const IntegerPolynomial& poly);

  VectorQ multiply(const VectorQ& a, const VectorQ& b) const;
  Rational trace(const VectorQ& a) const;
  PolynomialQ charpoly(const VectorQ& a) const;
  bool is_integral(const VectorQ& a) const;
  MatrixQ gram(const MatrixQ& rows) const;
};

}  // namespace zlift::detail
