#include "zlift/order.hpp"

#include <boost/multiprecision/integer.hpp>

#include "power_basis.hpp"

namespace zlift {

namespace {

Integer mod(const Integer& a, const Integer& p) {
  Integer r = a % p;
  if (r < 0) r += p;
  return r;
}

MatrixZ to_integer(const MatrixQ& m) {
  MatrixZ out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw Error(Errc::non_integral, "expected an integer matrix");
      out(i, j) = boost::multiprecision::numerator(m(i, j));
    }
  return out;
}

MatrixQ to_rational(const MatrixZ& m) { return m.cast<Rational>(); }

// An order given by a basis, with its structure constants in basis coordinates.
struct OrderTable {
  int d = 0;
  MatrixQ basis;  // rows over the power basis
  // table[i][j] = coordinates of w_i * w_j over the basis
  std::vector<std::vector<VectorZ>> table;
};

// Fills the multiplication table; nullopt-style flag when a product leaves the
// module (then the basis is not an order).
bool build_table(const detail::PowerBasis& pb, const MatrixQ& basis, OrderTable& out,
                 std::string* why = nullptr) {
  const int d = pb.d;
  out.d = d;
  out.basis = basis;
  const MatrixQ bt_inv = exact_inverse(MatrixQ(basis.transpose()));
  out.table.assign(static_cast<std::size_t>(d), std::vector<VectorZ>(static_cast<std::size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const VectorQ prod = pb.multiply(basis.row(i).transpose(), basis.row(j).transpose());
      const VectorQ k = bt_inv * prod;
      if (!is_integral(MatrixQ(k))) {
        if (why) *why = "product of basis elements " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1) + " leaves the module";
        return false;
      }
      out.table[i][j] = to_integer(MatrixQ(k)).col(0);
      out.table[j][i] = out.table[i][j];
    }
  return true;
}

VectorZ multiply_mod(const OrderTable& o, const VectorZ& a, const VectorZ& b, const Integer& p) {
  VectorZ out = VectorZ::Zero(o.d);
  for (int i = 0; i < o.d; ++i) {
    if (a(i) == 0) continue;
    for (int j = 0; j < o.d; ++j) {
      if (b(j) == 0) continue;
      const Integer c = a(i) * b(j);
      out += c * o.table[i][j];
    }
  }
  for (int i = 0; i < o.d; ++i) out(i) = mod(out(i), p);
  return out;
}

VectorZ multiply_exact(const OrderTable& o, const VectorZ& a, const VectorZ& b) {
  VectorZ out = VectorZ::Zero(o.d);
  for (int i = 0; i < o.d; ++i) {
    if (a(i) == 0) continue;
    for (int j = 0; j < o.d; ++j) {
      if (b(j) == 0) continue;
      out += Integer(a(i) * b(j)) * o.table[i][j];
    }
  }
  return out;
}

VectorZ power_mod(const OrderTable& o, VectorZ x, Integer e, const Integer& p) {
  VectorZ result = VectorZ::Zero(o.d);
  // basis coordinates of 1
  const VectorQ one_power = VectorQ::Unit(o.d, 0);
  const VectorQ one = exact_inverse(MatrixQ(o.basis.transpose())) * one_power;
  result = to_integer(MatrixQ(one)).col(0);
  for (int i = 0; i < o.d; ++i) x(i) = mod(x(i), p);
  while (e > 0) {
    if ((e & 1) != 0) result = multiply_mod(o, result, x, p);
    e >>= 1;
    if (e > 0) x = multiply_mod(o, x, x, p);
  }
  return result;
}

// One round-two step at p. Returns the ring of multipliers of the p-radical,
// as rows over the power basis; equal index means p-maximal.
MatrixQ multiplier_ring(const OrderTable& o, const Integer& p) {
  const int d = o.d;
  Integer q = p;
  while (q < d) q *= p;

  // p-radical: kernel of x -> x^q on O/pO
  MatrixZ frob(d, d);
  for (int i = 0; i < d; ++i) frob.col(i) = power_mod(o, VectorZ::Unit(d, i), q, p);
  std::vector<VectorZ> rad = kernel_mod_p(frob, p);

  MatrixZ gens(static_cast<Eigen::Index>(rad.size()) + d, d);
  for (std::size_t r = 0; r < rad.size(); ++r) gens.row(static_cast<Eigen::Index>(r)) = rad[r].transpose();
  for (int i = 0; i < d; ++i)
    gens.row(static_cast<Eigen::Index>(rad.size()) + i) = p * VectorZ::Unit(d, i).transpose();
  const MatrixZ ideal = hermite_normal_form(gens);  // rows over the order basis
  const MatrixQ ideal_t_inv = exact_inverse(MatrixQ(to_rational(ideal).transpose()));

  // y with y * I subset p * I, read mod p in ideal coordinates
  MatrixZ big(d * d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const VectorZ prod = multiply_exact(o, VectorZ::Unit(d, i), ideal.row(j).transpose());
      const VectorQ z = ideal_t_inv * prod.cast<Rational>();
      for (int k = 0; k < d; ++k) {
        if (!is_integer(z(k))) throw Error(Errc::geometric_failure, "radical is not an ideal");
        big(j * d + k, i) = mod(boost::multiprecision::numerator(z(k)), p);
      }
    }
  }
  std::vector<VectorZ> mult = kernel_mod_p(big, p);

  MatrixZ ext(static_cast<Eigen::Index>(mult.size()) + d, d);
  for (std::size_t r = 0; r < mult.size(); ++r) ext.row(static_cast<Eigen::Index>(r)) = mult[r].transpose();
  for (int i = 0; i < d; ++i)
    ext.row(static_cast<Eigen::Index>(mult.size()) + i) = p * VectorZ::Unit(d, i).transpose();
  const MatrixZ h = hermite_normal_form(ext);
  return (to_rational(h) / Rational(p)) * o.basis;
}

Integer index_of(const MatrixQ& sub, const MatrixQ& super) {
  // [super : sub] for sub contained in super
  const Rational r = exact_determinant(sub) / exact_determinant(super);
  return boost::multiprecision::numerator(abs(r));
}

}  // namespace

std::vector<Integer> square_dividing_primes(const Integer& n) {
  if (n == 0) throw Error(Errc::invalid_argument, "square_dividing_primes(0)");
  Integer m = abs(n);
  std::vector<Integer> out;
  const unsigned long limit = 1ul << 20;
  unsigned long p = 2;
  for (; p <= limit && Integer(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e >= 2) out.emplace_back(p);
  }
  // loop ended early: m is 1 or a prime
  if (p <= limit || m == 1) return out;
  // every prime factor of m now exceeds 2^20
  if (m < (Integer(1) << 40)) return out;
  if (m < (Integer(1) << 60)) {
    const Integer s = boost::multiprecision::sqrt(m);
    if (s * s == m) out.push_back(s);
    return out;
  }
  throw Error(Errc::precision_exhausted, "discriminant too large to factor: " + to_string(n));
}

bool is_squarefree_integer(const Integer& n) { return square_dividing_primes(n).empty(); }

MatrixQ triangular_basis(const MatrixQ& generators) {
  const Eigen::Index d = generators.cols();
  const Integer den = common_denominator(generators);
  MatrixZ scaled(generators.rows(), d);
  for (Eigen::Index i = 0; i < generators.rows(); ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      scaled(i, d - 1 - j) = boost::multiprecision::numerator(generators(i, j) * den);
  const MatrixZ h = hermite_normal_form(scaled);
  if (h.rows() != d) throw Error(Errc::dependent_basis, "generators do not span a full lattice");
  MatrixQ out(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      out(d - 1 - i, d - 1 - j) = Rational(h(i, j)) / den;
  return out;
}

MatrixQ maximal_order_basis(const IntegerPolynomial& f) {
  const detail::PowerBasis pb(f);
  MatrixQ basis = MatrixQ::Identity(pb.d, pb.d);
  const Integer disc = discriminant(f);
  for (const Integer& p : square_dividing_primes(disc)) {
    for (;;) {
      OrderTable o;
      if (!build_table(pb, basis, o)) throw Error(Errc::geometric_failure, "enlarged module is not a ring");
      MatrixQ next = multiplier_ring(o, p);
      if (index_of(basis, next) == 1) break;
      basis = triangular_basis(next);
    }
  }
  return triangular_basis(basis);
}

OrderCheck check_maximal_order(const IntegerPolynomial& f, const MatrixQ& basis) {
  const detail::PowerBasis pb(f);
  const int d = pb.d;
  if (basis.rows() != d || basis.cols() != d) return {false, "basis has the wrong shape"};
  if (exact_determinant(basis) == 0) return {false, "basis is singular"};
  for (int i = 0; i < d; ++i)
    if (!pb.is_integral(basis.row(i).transpose()))
      return {false, "basis element " + std::to_string(i + 1) + " is not integral"};
  const VectorQ one = exact_inverse(MatrixQ(basis.transpose())) * VectorQ::Unit(d, 0);
  if (!is_integral(MatrixQ(one))) return {false, "module does not contain 1"};
  OrderTable o;
  std::string why;
  if (!build_table(pb, basis, o, &why)) return {false, why};
  const Integer disc = boost::multiprecision::numerator(exact_determinant(pb.gram(basis)));
  for (const Integer& p : square_dividing_primes(disc)) {
    if (index_of(basis, multiplier_ring(o, p)) != 1)
      return {false, "order is not maximal at " + to_string(p)};
  }
  return {};
}

}  // namespace zlift
