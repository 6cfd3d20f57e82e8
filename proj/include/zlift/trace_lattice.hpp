#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "zlift/field.hpp"

namespace zlift {

using GramMatrix = MatrixQ;

/// Entries tr(w_i w_j). Throws Errc::dependent_basis.
GramMatrix gram(std::span<const FieldElement> basis);

/// Elements d_j with tr(w_i d_j) = [i == j].
std::vector<FieldElement> dual_basis(std::span<const FieldElement> basis);

/// <p(rho x), p(rho y)> = tr(xy) - tr(x) tr(y) / d.
Rational projected_inner(const FieldElement& x, const FieldElement& y);

/// Representative shifted by an integer so its trace lies in [0, d).
FieldElement canonical_representative(const FieldElement& x);

/// Projection of rho(O_K) onto the trace-zero hyperplane, with basis given by
/// the images of w_2, ..., w_d.
struct ProjectedLattice {
  FieldPtr field;
  std::vector<FieldElement> basis;
  MatrixQ gram;
};

ProjectedLattice lambda_basis(const FieldPtr& field);

struct LatticeVector {
  VectorZ coords;  // over the ProjectedLattice basis
  FieldElement representative;
  Rational squared_length;
};

/// Result of two-dimensional Gauss-Lagrange reduction of a Gram matrix.
/// `u` is a shortest nonzero vector (lexicographically smallest coordinates
/// among all shortest vectors), `v` completes it to a basis with
/// det(u, v) = 1 and |<u, v>| <= |u|^2 / 2.
template <typename Scalar>
struct GaussReduction {
  std::array<Integer, 2> u;
  std::array<Integer, 2> v;
  Scalar u_norm;
  Scalar v_norm;
  Scalar uv;
};

namespace detail {

template <typename Scalar>
Scalar quad(const Eigen::Matrix<Scalar, 2, 2>& g, const std::array<Integer, 2>& a,
            const std::array<Integer, 2>& b) {
  Scalar a0(a[0]), a1(a[1]), b0(b[0]), b1(b[1]);
  return a0 * b0 * g(0, 0) + (a0 * b1 + a1 * b0) * g(0, 1) + a1 * b1 * g(1, 1);
}

inline std::array<Integer, 2> combine(const std::array<Integer, 2>& a, const Integer& k,
                                      const std::array<Integer, 2>& b) {
  return {a[0] + k * b[0], a[1] + k * b[1]};
}

}  // namespace detail

/// Gauss-Lagrange reduction of a positive definite 2x2 Gram matrix.
template <typename Scalar>
GaussReduction<Scalar> gauss_reduce(const Eigen::Matrix<Scalar, 2, 2>& g) {
  using detail::combine;
  using detail::quad;
  if (!(g(0, 0) > 0) || !(g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0) > 0))
    throw Error(Errc::invalid_argument, "Gram matrix is not positive definite");

  std::array<Integer, 2> b1{1, 0}, b2{0, 1};
  Scalar n1 = g(0, 0), n2 = g(1, 1);
  if (n2 < n1) {
    std::swap(b1, b2);
    std::swap(n1, n2);
  }
  for (;;) {
    Integer k = round_nearest(Rational(quad(g, b1, b2)) / Rational(n1));
    b2 = combine(b2, Integer(-k), b1);
    n2 = quad(g, b2, b2);
    if (!(n2 < n1)) break;
    std::swap(b1, b2);
    std::swap(n1, n2);
  }

  // Every shortest vector of a reduced basis is among +-b1, +-b2, +-(b1 +- b2).
  std::vector<std::array<Integer, 2>> cands;
  for (const auto& w : {b1, b2, combine(b1, 1, b2), combine(b1, -1, b2)}) {
    cands.push_back(w);
    cands.push_back({-w[0], -w[1]});
  }
  Scalar best = quad(g, b1, b1);
  for (const auto& w : cands) best = std::min(best, quad(g, w, w));
  std::array<Integer, 2> u{};
  bool have = false;
  for (const auto& w : cands) {
    if (quad(g, w, w) != best) continue;
    if (!have || w < u) u = w;
    have = true;
  }

  // Any w with det(u, w) = +-1 completes u; b1 or b2 always does.
  auto det = [&](const std::array<Integer, 2>& w) { return u[0] * w[1] - u[1] * w[0]; };
  std::array<Integer, 2> v = abs(det(b1)) == 1 ? b1 : b2;
  if (det(v) < 0) v = {-v[0], -v[1]};
  const Rational ratio = Rational(quad(g, u, v)) / Rational(best);
  Integer k = round_nearest(ratio);
  v = combine(v, Integer(-k), u);
  // At a half-integer ratio both v and v + u are size-reduced.
  if (ratio - Rational(k) == Rational(1, 2)) {
    auto alt = combine(v, -1, u);
    if (alt < v) v = alt;
  } else if (Rational(k) - ratio == Rational(1, 2)) {
    auto alt = combine(v, 1, u);
    if (alt < v) v = alt;
  }
  return {u, v, best, quad(g, v, v), quad(g, u, v)};
}

/// Shortest vector u and completion v of a rank-2 projected lattice.
std::pair<LatticeVector, LatticeVector> gauss_reduce(const ProjectedLattice& lattice);

/// Integers t with rho(beta - t) on the bounded pieces of the line through
/// rho(beta) parallel to (1,1,1): segment 1 has sorted-frame signs (+,+,-),
/// segment 2 has (+,-,-). Cubic fields only.
struct OctantShifts {
  std::vector<Integer> segment1;
  std::vector<Integer> segment2;
  /// Embedding indices (ascending-root numbering) by decreasing rho(beta).
  std::vector<std::size_t> frame;
};

OctantShifts octant_shifts(const FieldElement& beta);

}  // namespace zlift
