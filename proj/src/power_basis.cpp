#include "power_basis.hpp"

namespace zlift::detail {

PowerBasis::PowerBasis(const IntegerPolynomial& poly)
    : d(poly.degree()), f(poly.coefficients()) {
  const int top = 2 * d - 1;
  // Newton's identities for the power sums of the roots.
  traces.assign(static_cast<std::size_t>(top), Rational(0));
  traces[0] = d;
  for (int k = 1; k < top; ++k) {
    Rational s(0);
    for (int i = 1; i <= std::min(k - 1, d); ++i)
      s += Rational(f[static_cast<std::size_t>(d - i)]) * traces[static_cast<std::size_t>(k - i)];
    if (k <= d) s += Rational(k) * Rational(f[static_cast<std::size_t>(d - k)]);
    traces[static_cast<std::size_t>(k)] = -s;
  }
  reductions.reserve(static_cast<std::size_t>(top));
  for (int k = 0; k < top; ++k) {
    if (k < d) {
      VectorQ e = VectorQ::Zero(d);
      e(k) = 1;
      reductions.push_back(e);
      continue;
    }
    const VectorQ& prev = reductions.back();
    VectorQ next = VectorQ::Zero(d);
    for (int j = 0; j + 1 < d; ++j) next(j + 1) = prev(j);
    const Rational carry = prev(d - 1);
    for (int j = 0; j < d; ++j) next(j) -= carry * Rational(f[static_cast<std::size_t>(j)]);
    reductions.push_back(next);
  }
}

VectorQ PowerBasis::multiply(const VectorQ& a, const VectorQ& b) const {
  std::vector<Rational> conv(static_cast<std::size_t>(2 * d - 1), Rational(0));
  for (int i = 0; i < d; ++i) {
    if (a(i) == 0) continue;
    for (int j = 0; j < d; ++j) conv[static_cast<std::size_t>(i + j)] += a(i) * b(j);
  }
  VectorQ out = VectorQ::Zero(d);
  for (int k = 0; k < 2 * d - 1; ++k) {
    const Rational& c = conv[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (k < d) out(k) += c;
    else out += c * reductions[static_cast<std::size_t>(k)];
  }
  return out;
}

Rational PowerBasis::trace(const VectorQ& a) const {
  Rational t(0);
  for (int k = 0; k < d; ++k) t += a(k) * traces[static_cast<std::size_t>(k)];
  return t;
}

PolynomialQ PowerBasis::charpoly(const VectorQ& a) const {
  std::vector<Rational> s(static_cast<std::size_t>(d) + 1, Rational(0));
  VectorQ power = a;
  for (int k = 1; k <= d; ++k) {
    s[static_cast<std::size_t>(k)] = trace(power);
    if (k < d) power = multiply(power, a);
  }
  std::vector<Rational> e(static_cast<std::size_t>(d) + 1, Rational(0));
  e[0] = 1;
  for (int k = 1; k <= d; ++k) {
    Rational acc(0);
    for (int i = 1; i <= k; ++i) {
      const Rational term = e[static_cast<std::size_t>(k - i)] * s[static_cast<std::size_t>(i)];
      acc += (i % 2 == 1) ? term : Rational(-term);
    }
    e[static_cast<std::size_t>(k)] = acc / k;
  }
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
  for (int k = 0; k <= d; ++k)
    c[static_cast<std::size_t>(d - k)] = (k % 2 == 0) ? e[static_cast<std::size_t>(k)]
                                                      : Rational(-e[static_cast<std::size_t>(k)]);
  return PolynomialQ(std::move(c));
}

bool PowerBasis::is_integral(const VectorQ& a) const {
  const PolynomialQ cp = charpoly(a);
  for (const auto& c : cp.coefficients())
    if (!zlift::is_integer(c)) return false;
  return true;
}

MatrixQ PowerBasis::gram(const MatrixQ& rows) const {
  const Eigen::Index n = rows.rows();
  MatrixQ g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      g(i, j) = trace(multiply(rows.row(i).transpose(), rows.row(j).transpose()));
      g(j, i) = g(i, j);
    }
  return g;
}

}  // namespace zlift::detail
