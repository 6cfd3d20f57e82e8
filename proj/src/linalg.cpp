#include "zlift/linalg.hpp"

#include <algorithm>

namespace zlift {

MatrixQ exact_solve(const MatrixQ& a, const MatrixQ& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n)
    throw Error(Errc::invalid_argument, "exact_solve: dimension mismatch");
  MatrixQ m(n, n + b.cols());
  m << a, b;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) throw Error(Errc::dependent_basis, "singular matrix in exact_solve");
    if (piv != col) m.row(piv).swap(m.row(col));
    const Rational inv = Rational(1) / m(col, col);
    m.row(col) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      m.row(r) -= f * m.row(col);
    }
  }
  return m.rightCols(b.cols());
}

MatrixQ exact_inverse(const MatrixQ& a) {
  return exact_solve(a, MatrixQ::Identity(a.rows(), a.rows()));
}

MatrixZ hermite_normal_form(const MatrixZ& input) {
  MatrixZ m = input;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c below row r until a single nonzero remains.
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < rows; ++i)
        if (m(i, c) != 0 && (best < 0 || abs(m(i, c)) < abs(m(best, c)))) best = i;
      if (best < 0) break;
      if (best != r) m.row(best).swap(m.row(r));
      bool done = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        const Integer qt = m(i, c) / m(r, c);
        m.row(i) -= qt * m.row(r);
        if (m(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) m.row(r) *= Integer(-1);
    for (Eigen::Index i = 0; i < r; ++i) {
      Integer qt = m(i, c) / m(r, c);
      if (m(i, c) - qt * m(r, c) < 0) qt -= 1;
      m.row(i) -= qt * m.row(r);
    }
    ++r;
  }
  return m.topRows(r);
}

std::vector<VectorZ> kernel_mod_p(const MatrixZ& input, const Integer& p) {
  const Eigen::Index rows = input.rows(), cols = input.cols();
  auto mod = [&](const Integer& x) {
    Integer y = x % p;
    if (y < 0) y += p;
    return y;
  };
  auto inverse_mod = [&](const Integer& x) {
    // p is prime; Fermat would need powm, extended Euclid is simpler here.
    Integer a = x, b = p, s0 = 1, s1 = 0;
    while (b != 0) {
      Integer qt = a / b;
      Integer t = a - qt * b;
      a = b;
      b = t;
      t = s0 - qt * s1;
      s0 = s1;
      s1 = t;
    }
    return mod(s0);
  };
  MatrixZ m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = mod(input(i, j));

  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    m.row(piv).swap(m.row(r));
    const Integer inv = inverse_mod(m(r, c));
    for (Eigen::Index j = 0; j < cols; ++j) m(r, j) = mod(m(r, j) * inv);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Integer f = m(i, c);
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = mod(m(i, j) - f * m(r, j));
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<VectorZ> basis;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    VectorZ v = VectorZ::Zero(cols);
    v(free) = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      v(pivot_cols[k]) = mod(Integer(-m(static_cast<Eigen::Index>(k), free)));
    basis.push_back(v);
  }
  return basis;
}

Integer common_denominator(const MatrixQ& m) {
  Integer l(1);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Integer d = boost::multiprecision::denominator(m(i, j));
      l = boost::multiprecision::lcm(l, d);
    }
  return l;
}

bool is_integral(const MatrixQ& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  return true;
}

}  // namespace zlift
