#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "zlift/interval.hpp"
#include "zlift/linalg.hpp"
#include "zlift/polynomial.hpp"
#include "zlift/roots.hpp"

namespace zlift {

/// Entries in {-1, +1}, one per real embedding.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<int> entries);

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  const std::vector<int>& entries() const { return e_; }
  /// Entries permuted so that result[k] = (*this)[order[k]].
  SignVector permuted(const std::vector<std::size_t>& order) const;
  SignVector reversed() const;
  std::string to_string() const;

  friend SignVector operator*(const SignVector& a, const SignVector& b);
  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<int> e_;
};

class FieldElement;

/// Totally real field Q[x]/(f) with a chosen integral basis. Immutable except
/// for the cached root isolation, which only ever narrows (guarded by a
/// mutex), so instances can be shared across threads.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// `integral_basis` rows are basis elements in power-basis coordinates.
  /// When omitted the maximal order is computed. A supplied basis is
  /// validated (invertible, integral elements, integer Gram) and replaced by
  /// its triangular form when its first element is not 1.
  /// Throws Errc::reducible, Errc::not_totally_real, Errc::non_integral, ...
  static std::shared_ptr<const NumberField> create(
      const IntegerPolynomial& f, std::optional<MatrixQ> integral_basis = std::nullopt);

  int degree() const { return degree_; }
  const IntegerPolynomial& defining_polynomial() const { return f_; }
  const MatrixQ& integral_basis() const { return basis_; }
  const MatrixQ& integral_basis_inverse() const { return basis_inv_; }

  /// tr(x^k) of the generator, k in [0, 2d-2].
  const Rational& power_trace(int k) const { return power_traces_[static_cast<std::size_t>(k)]; }
  /// x^k reduced to the power basis, k in [0, 2d-2].
  const VectorQ& power_reduction(int k) const { return reductions_[static_cast<std::size_t>(k)]; }

  /// det of the trace Gram of the integral basis.
  Integer discriminant() const;

  /// Isolating interval of the m-th smallest root, narrowed to `width`.
  IntervalQ root_interval(std::size_t m, const Rational& width) const;
  RootIsolation roots_snapshot() const;

  FieldElement element(const VectorQ& power_coords) const;
  FieldElement from_integral_coords(const VectorQ& coords) const;
  FieldElement rational(const Rational& q) const;
  FieldElement one() const;
  FieldElement generator() const;
  /// i-th integral basis element.
  FieldElement basis_element(std::size_t i) const;
  std::vector<FieldElement> basis_elements() const;

 private:
  NumberField() = default;

  IntegerPolynomial f_;
  int degree_ = 0;
  MatrixQ basis_;
  MatrixQ basis_inv_;
  std::vector<Rational> power_traces_;
  std::vector<VectorQ> reductions_;
  mutable std::mutex roots_mutex_;
  mutable RootIsolation roots_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class FieldElement {
 public:
  FieldElement(FieldPtr field, VectorQ coords);

  const FieldPtr& field() const { return field_; }
  const NumberField& field_ref() const { return *field_; }
  /// Coordinates over the power basis 1, x, ..., x^(d-1).
  const VectorQ& coords() const { return coords_; }
  /// Coordinates over the integral basis.
  VectorQ integral_coords() const;
  bool is_algebraic_integer() const;
  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_value() const;
  PolynomialQ as_polynomial() const;

  /// Enclosure of the m-th real embedding (ascending root order).
  IntervalQ embedding(std::size_t m, const Rational& width) const;

  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator*=(const Rational& k);
  FieldElement operator-() const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator*(FieldElement a, const Rational& k) { return a *= k; }
  friend FieldElement operator*(const Rational& k, FieldElement a) { return a *= k; }
  friend FieldElement operator+(FieldElement a, const Rational& k);
  friend FieldElement operator-(FieldElement a, const Rational& k);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  void require_same_field(const FieldElement& o) const;

  FieldPtr field_;
  VectorQ coords_;
};

Rational trace(const FieldElement& x);
/// Exact norm as a resultant of the defining polynomial and the coordinate
/// polynomial.
Rational norm(const FieldElement& x);
/// Matrix of multiplication by x on the power basis (columns are x * x^j).
MatrixQ multiplication_matrix(const FieldElement& x);
/// det(t - x) via Newton's identities on traces of powers, monic.
PolynomialQ characteristic_polynomial(const FieldElement& x);

/// Signs of the embeddings in ascending root order. Throws Errc::zero_element.
SignVector signature(const FieldElement& x);
/// Throws Errc::non_integral for non-integral x.
bool is_unit(const FieldElement& x);

/// Bisects the supplied enclosure function until its value excludes zero.
/// Throws Errc::precision_exhausted after `max_halvings` refinements (the
/// quantity is then presumed to be exactly zero).
int certified_sign(const std::function<IntervalQ(const Rational& width)>& enclosure,
                   unsigned max_halvings = 600);

/// sign(sum_m weights[m] * rho_m(x)) for ascending embeddings m.
int embedding_combination_sign(const FieldElement& x, const std::vector<Rational>& weights);
/// sign(rho_a(x) - rho_b(x)); 0 when x is rational.
int compare_embeddings(const FieldElement& x, std::size_t a, std::size_t b);
/// floor(rho_m(x)) for an irrational embedding value.
Integer embedding_floor(const FieldElement& x, std::size_t m);
/// Embedding indices sorted by decreasing rho_m(x); throws when two values
/// coincide.
std::vector<std::size_t> descending_order(const FieldElement& x);

}  // namespace zlift
