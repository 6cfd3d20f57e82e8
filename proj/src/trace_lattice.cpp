#include "zlift/trace_lattice.hpp"

namespace zlift {

GramMatrix gram(std::span<const FieldElement> basis) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  GramMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      g(i, j) = trace(basis[i] * basis[j]);
      g(j, i) = g(i, j);
    }
  if (exact_determinant(g) == 0) throw Error(Errc::dependent_basis, "basis elements are dependent");
  return g;
}

std::vector<FieldElement> dual_basis(std::span<const FieldElement> basis) {
  const GramMatrix g = gram(basis);
  const auto n = static_cast<Eigen::Index>(basis.size());
  const MatrixQ x = exact_solve(g, MatrixQ::Identity(n, n));
  std::vector<FieldElement> out;
  for (Eigen::Index j = 0; j < n; ++j) {
    FieldElement d = basis[0] * x(0, j);
    for (Eigen::Index i = 1; i < n; ++i) d += basis[i] * x(i, j);
    out.push_back(std::move(d));
  }
  return out;
}

Rational projected_inner(const FieldElement& x, const FieldElement& y) {
  const int d = x.field_ref().degree();
  return trace(x * y) - trace(x) * trace(y) / d;
}

FieldElement canonical_representative(const FieldElement& x) {
  const int d = x.field_ref().degree();
  const Integer n = floor(trace(x) / d);
  return x - Rational(n);
}

ProjectedLattice lambda_basis(const FieldPtr& field) {
  auto elems = field->basis_elements();
  if (!(elems.front() == field->one()))
    throw Error(Errc::invalid_argument, "integral basis must start with 1");
  std::vector<FieldElement> reps(elems.begin() + 1, elems.end());
  const auto n = static_cast<Eigen::Index>(reps.size());
  MatrixQ g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      g(i, j) = projected_inner(reps[i], reps[j]);
      g(j, i) = g(i, j);
    }
  return {field, std::move(reps), std::move(g)};
}

namespace {

LatticeVector make_vector(const ProjectedLattice& l, const std::array<Integer, 2>& c) {
  FieldElement rep = l.basis[0] * Rational(c[0]) + l.basis[1] * Rational(c[1]);
  VectorZ coords(2);
  coords << c[0], c[1];
  Rational len = projected_inner(rep, rep);
  return {coords, canonical_representative(rep), len};
}

}  // namespace

std::pair<LatticeVector, LatticeVector> gauss_reduce(const ProjectedLattice& lattice) {
  if (lattice.gram.rows() != 2)
    throw Error(Errc::unsupported_degree, "Gauss reduction needs a rank-2 lattice");
  Eigen::Matrix<Rational, 2, 2> g = lattice.gram;
  const auto r = gauss_reduce(g);
  return {make_vector(lattice, r.u), make_vector(lattice, r.v)};
}

OctantShifts octant_shifts(const FieldElement& beta) {
  if (beta.field_ref().degree() != 3)
    throw Error(Errc::unsupported_degree, "octant shifts are defined for cubic fields");
  if (beta.is_rational())
    throw Error(Errc::invalid_argument, "element has repeated embedding values");
  OctantShifts out;
  out.frame = descending_order(beta);
  const Integer fi = embedding_floor(beta, out.frame[0]);
  const Integer fj = embedding_floor(beta, out.frame[1]);
  const Integer fk = embedding_floor(beta, out.frame[2]);
  // embeddings are irrational, so t < rho iff t <= floor(rho)
  for (Integer t = fk + 1; t <= fj; ++t) out.segment1.push_back(t);
  for (Integer t = fj + 1; t <= fi; ++t) out.segment2.push_back(t);
  return out;
}

}  // namespace zlift
