#include "zlift/field.hpp"

#include <algorithm>

#include "power_basis.hpp"
#include "zlift/order.hpp"

namespace zlift {

SignVector::SignVector(std::vector<int> entries) : e_(std::move(entries)) {
  for (int s : e_)
    if (s != 1 && s != -1) throw Error(Errc::invalid_argument, "sign entries must be +1 or -1");
}

SignVector SignVector::permuted(const std::vector<std::size_t>& order) const {
  std::vector<int> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(e_.at(i));
  return SignVector(std::move(out));
}

SignVector SignVector::reversed() const {
  return SignVector(std::vector<int>(e_.rbegin(), e_.rend()));
}

std::string SignVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += e_[i] > 0 ? "+1" : "-1";
  }
  return s + ")";
}

SignVector operator*(const SignVector& a, const SignVector& b) {
  if (a.size() != b.size()) throw Error(Errc::invalid_argument, "sign vector length mismatch");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return SignVector(std::move(out));
}

FieldPtr NumberField::create(const IntegerPolynomial& f, std::optional<MatrixQ> integral_basis) {
  const int d = f.degree();
  if (d < 1) throw Error(Errc::invalid_argument, "field degree must be positive");
  if (!is_irreducible(f))
    throw Error(Errc::reducible, "defining polynomial " + to_string(f) + " is reducible");
  if (count_real_roots(f.rational()) != d)
    throw Error(Errc::not_totally_real, to_string(f) + " is not totally real");

  std::shared_ptr<NumberField> k(new NumberField());
  k->f_ = f;
  k->degree_ = d;
  detail::PowerBasis pb(f);
  k->power_traces_ = pb.traces;
  k->reductions_ = pb.reductions;
  k->roots_ = isolate_roots(f, default_isolation_width());

  if (!integral_basis) {
    k->basis_ = maximal_order_basis(f);
  } else {
    MatrixQ b = *integral_basis;
    if (b.rows() != d || b.cols() != d)
      throw Error(Errc::invalid_argument, "integral basis must be a d x d matrix");
    if (exact_determinant(b) == 0) throw Error(Errc::dependent_basis, "integral basis is singular");
    for (Eigen::Index i = 0; i < d; ++i)
      if (!pb.is_integral(b.row(i).transpose()))
        throw Error(Errc::non_integral, "integral basis element " + std::to_string(i + 1) +
                                            " is not an algebraic integer");
    if (!is_integral(pb.gram(b)))
      throw Error(Errc::non_integral, "trace Gram of the basis is not integral");
    VectorQ one = VectorQ::Zero(d);
    one(0) = 1;
    if (VectorQ(b.row(0).transpose()) != one) {
      b = triangular_basis(b);
      if (VectorQ(b.row(0).transpose()) != one)
        throw Error(Errc::invalid_argument, "basis does not span a module containing 1 primitively");
    }
    k->basis_ = b;
  }
  k->basis_inv_ = exact_inverse(k->basis_);
  return k;
}

Integer NumberField::discriminant() const {
  detail::PowerBasis pb(f_);
  return boost::multiprecision::numerator(exact_determinant(pb.gram(basis_)));
}

IntervalQ NumberField::root_interval(std::size_t m, const Rational& width) const {
  std::lock_guard<std::mutex> lock(roots_mutex_);
  if (m >= roots_.size()) throw Error(Errc::invalid_argument, "embedding index out of range");
  roots_.refine(m, width);
  return roots_[m];
}

RootIsolation NumberField::roots_snapshot() const {
  std::lock_guard<std::mutex> lock(roots_mutex_);
  return roots_;
}

FieldElement NumberField::element(const VectorQ& power_coords) const {
  return FieldElement(shared_from_this(), power_coords);
}

FieldElement NumberField::from_integral_coords(const VectorQ& coords) const {
  return element(basis_.transpose() * coords);
}

FieldElement NumberField::rational(const Rational& q) const {
  VectorQ c = VectorQ::Zero(degree_);
  c(0) = q;
  return element(c);
}

FieldElement NumberField::one() const { return rational(Rational(1)); }

FieldElement NumberField::generator() const {
  VectorQ c = VectorQ::Zero(degree_);
  if (degree_ > 1) c(1) = 1;
  else c(0) = -Rational(f_.coefficients()[0]);
  return element(c);
}

FieldElement NumberField::basis_element(std::size_t i) const {
  return element(basis_.row(static_cast<Eigen::Index>(i)).transpose());
}

std::vector<FieldElement> NumberField::basis_elements() const {
  std::vector<FieldElement> out;
  for (int i = 0; i < degree_; ++i) out.push_back(basis_element(static_cast<std::size_t>(i)));
  return out;
}

FieldElement::FieldElement(FieldPtr field, VectorQ coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw Error(Errc::invalid_argument, "element without a field");
  if (coords_.size() != field_->degree())
    throw Error(Errc::invalid_argument, "coordinate vector has the wrong length");
}

VectorQ FieldElement::integral_coords() const {
  return field_->integral_basis_inverse().transpose() * coords_;
}

bool FieldElement::is_algebraic_integer() const {
  const VectorQ k = integral_coords();
  for (Eigen::Index i = 0; i < k.size(); ++i)
    if (!is_integer(k(i))) return false;
  return true;
}

bool FieldElement::is_zero() const {
  for (Eigen::Index i = 0; i < coords_.size(); ++i)
    if (coords_(i) != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (Eigen::Index i = 1; i < coords_.size(); ++i)
    if (coords_(i) != 0) return false;
  return true;
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw Error(Errc::invalid_argument, "element is not rational");
  return coords_(0);
}

PolynomialQ FieldElement::as_polynomial() const {
  return PolynomialQ(std::vector<Rational>(coords_.begin(), coords_.end()));
}

IntervalQ FieldElement::embedding(std::size_t m, const Rational& width) const {
  const IntervalQ root = field_->root_interval(m, width);
  return as_polynomial().evaluate(root);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  VectorQ one = VectorQ::Zero(coords_.size());
  one(0) = 1;
  return FieldElement(field_, exact_solve(multiplication_matrix(*this), one));
}

namespace {

// Separately created copies of one presentation count as the same field.
bool same_field(const NumberField* a, const NumberField* b) {
  return a == b || (a->defining_polynomial() == b->defining_polynomial() &&
                    a->integral_basis() == b->integral_basis());
}

}  // namespace

void FieldElement::require_same_field(const FieldElement& o) const {
  if (!same_field(field_.get(), o.field_.get()))
    throw Error(Errc::field_mismatch, "elements belong to different fields");
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same_field(o);
  coords_ += o.coords_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  require_same_field(o);
  coords_ -= o.coords_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  require_same_field(o);
  const auto d = static_cast<std::size_t>(field_->degree());
  std::vector<Rational> conv(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (coords_(static_cast<Eigen::Index>(i)) == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      conv[i + j] += coords_(static_cast<Eigen::Index>(i)) * o.coords_(static_cast<Eigen::Index>(j));
  }
  VectorQ out = VectorQ::Zero(static_cast<Eigen::Index>(d));
  for (std::size_t k = 0; k < conv.size(); ++k) {
    if (conv[k] == 0) continue;
    out += conv[k] * field_->power_reduction(static_cast<int>(k));
  }
  coords_ = std::move(out);
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& k) {
  coords_ *= k;
  return *this;
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, -coords_); }

FieldElement operator+(FieldElement a, const Rational& k) {
  a.coords_(0) += k;
  return a;
}

FieldElement operator-(FieldElement a, const Rational& k) {
  a.coords_(0) -= k;
  return a;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return same_field(a.field_.get(), b.field_.get()) && a.coords_ == b.coords_;
}

Rational trace(const FieldElement& x) {
  Rational t(0);
  for (int k = 0; k < x.field_ref().degree(); ++k) t += x.coords()(k) * x.field_ref().power_trace(k);
  return t;
}

Rational norm(const FieldElement& x) {
  if (x.is_zero()) return Rational(0);
  return resultant(x.field_ref().defining_polynomial().rational(), x.as_polynomial());
}

MatrixQ multiplication_matrix(const FieldElement& x) {
  const int d = x.field_ref().degree();
  MatrixQ m(d, d);
  FieldElement power = x;
  const FieldElement gen = x.field_ref().generator();
  for (int j = 0; j < d; ++j) {
    m.col(j) = power.coords();
    if (j + 1 < d) power *= gen;
  }
  return m;
}

PolynomialQ characteristic_polynomial(const FieldElement& x) {
  return detail::PowerBasis(x.field_ref().defining_polynomial()).charpoly(x.coords());
}

int certified_sign(const std::function<IntervalQ(const Rational& width)>& enclosure,
                   unsigned max_halvings) {
  Rational width = default_isolation_width();
  for (unsigned step = 0;; ++step) {
    if (const auto s = enclosure(width).certain_sign()) return *s;
    if (step >= max_halvings)
      throw Error(Errc::precision_exhausted, "sign undecided after refinement budget");
    width /= 2;
  }
}

SignVector signature(const FieldElement& x) {
  if (x.is_zero()) throw Error(Errc::zero_element, "signature of zero");
  const auto d = static_cast<std::size_t>(x.field_ref().degree());
  if (x.is_rational()) return SignVector(std::vector<int>(d, x.rational_value().sign()));
  std::vector<int> s(d);
  for (std::size_t m = 0; m < d; ++m)
    s[m] = certified_sign([&](const Rational& w) { return x.embedding(m, w); });
  return SignVector(std::move(s));
}

bool is_unit(const FieldElement& x) {
  if (!x.is_algebraic_integer())
    throw Error(Errc::non_integral, "is_unit needs an algebraic integer");
  return abs(norm(x)) == 1;
}

int embedding_combination_sign(const FieldElement& x, const std::vector<Rational>& weights) {
  const auto d = static_cast<std::size_t>(x.field_ref().degree());
  if (weights.size() != d) throw Error(Errc::invalid_argument, "one weight per embedding");
  if (x.is_rational()) {
    Rational total(0);
    for (const auto& w : weights) total += w;
    return (total * x.rational_value()).sign();
  }
  return certified_sign([&](const Rational& width) {
    IntervalQ acc(Rational(0));
    for (std::size_t m = 0; m < d; ++m) {
      if (weights[m] == 0) continue;
      acc += weights[m] * x.embedding(m, width);
    }
    return acc;
  }, 600);
}

int compare_embeddings(const FieldElement& x, std::size_t a, std::size_t b) {
  if (a == b || x.is_rational()) return 0;
  std::vector<Rational> w(static_cast<std::size_t>(x.field_ref().degree()), Rational(0));
  w[a] = 1;
  w[b] = -1;
  return embedding_combination_sign(x, w);
}

Integer embedding_floor(const FieldElement& x, std::size_t m) {
  if (x.is_rational()) return floor(x.rational_value());
  Rational width = default_isolation_width();
  for (int step = 0; step < 600; ++step) {
    const IntervalQ v = x.embedding(m, width);
    const Integer lo = floor(v.lo);
    if (lo == floor(v.hi)) return lo;
    width /= 2;
  }
  throw Error(Errc::precision_exhausted, "floor of embedding undecided");
}

std::vector<std::size_t> descending_order(const FieldElement& x) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(x.field_ref().degree()));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (compare_embeddings(x, idx[i], idx[j]) == 0)
        throw Error(Errc::invalid_argument, "embedding values coincide");
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return compare_embeddings(x, a, b) > 0; });
  return idx;
}

}  // namespace zlift
