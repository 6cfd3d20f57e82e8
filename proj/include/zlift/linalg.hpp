#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "zlift/error.hpp"
#include "zlift/rational.hpp"

namespace zlift {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;
using MatrixZ = Matrix<Integer>;
using VectorZ = Vector<Integer>;

/// Determinant by fraction-free (Bareiss) elimination; exact for any integral
/// domain scalar.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw Error(Errc::invalid_argument, "determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Matrix<Scalar> m = a;
  Scalar prev(1);
  int sgn = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      m.row(k).swap(m.row(swap));
      sgn = -sgn;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sgn > 0 ? Scalar(m(n - 1, n - 1)) : Scalar(-m(n - 1, n - 1));
}

/// Solves a * x = b over the rationals by Gauss-Jordan elimination.
/// Throws Errc::dependent_basis when a is singular.
MatrixQ exact_solve(const MatrixQ& a, const MatrixQ& b);
MatrixQ exact_inverse(const MatrixQ& a);

/// Row-style Hermite normal form of the lattice spanned by the rows of m:
/// upper triangular, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped.
MatrixZ hermite_normal_form(const MatrixZ& m);

/// Basis of the right kernel of m over F_p (entries reduced into [0, p)).
std::vector<VectorZ> kernel_mod_p(const MatrixZ& m, const Integer& p);

/// Least common multiple of the denominators of all entries.
Integer common_denominator(const MatrixQ& m);

bool is_integral(const MatrixQ& m);

}  // namespace zlift
