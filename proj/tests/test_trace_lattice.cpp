#include <doctest.h>

#include "support.hpp"
#include "zlift/biquadratic.hpp"
#include "zlift/quadratic.hpp"
#include "zlift/trace_lattice.hpp"

using namespace zlift;
using zlift::testing::field;

namespace {

using Gram2 = Eigen::Matrix<Rational, 2, 2>;

Gram2 gram2(long a, long b, long c) {
  Gram2 g;
  g << Rational(a), Rational(b), Rational(b), Rational(c);
  return g;
}

// Brute force over the coefficient box [-10, 10]^2.
Rational enumerate_shortest(const Gram2& g) {
  std::optional<Rational> best;
  for (int a = -10; a <= 10; ++a)
    for (int b = -10; b <= 10; ++b) {
      if (a == 0 && b == 0) continue;
      Rational n = g(0, 0) * a * a + 2 * g(0, 1) * a * b + g(1, 1) * b * b;
      if (!best || n < *best) best = n;
    }
  return *best;
}

MatrixQ unimodular(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> c(-2, 2);
  MatrixQ u = MatrixQ::Identity(d, d);
  for (int step = 0; step < 6; ++step) {
    const int i = static_cast<int>(rng() % d), j = static_cast<int>(rng() % d);
    if (i != j) u.row(i) += Rational(c(rng)) * u.row(j);
  }
  return u;
}

}  // namespace

TEST_CASE("gram") {
  auto q2 = quadratic_field(2);
  std::vector<FieldElement> b{q2.field->one(), q2.tau};
  MatrixQ expected(2, 2);
  expected << 2, 0, 0, 4;
  CHECK(gram(b) == expected);

  auto k = field("x^3+x^2-2x-1");
  auto x = k->generator();
  std::vector<FieldElement> pb{k->one(), x, x * x};
  const MatrixQ g = gram(pb);
  CHECK(exact_determinant(g) == 49);
  CHECK(g == g.transpose());

  std::vector<FieldElement> dep{k->one(), x, Rational(2) * x};
  CHECK_THROWS_AS(gram(dep), Error);
}

TEST_CASE("dual basis") {
  auto q2 = quadratic_field(2);
  std::vector<FieldElement> b{q2.field->one(), q2.tau};
  auto d = dual_basis(b);
  CHECK(d[0] == q2.field->rational(Rational(1, 2)));
  CHECK(d[1] == Rational(1, 4) * q2.tau);

  // Q(sqrt2, sqrt3): dual of sqrt3 is 1/(4 sqrt3)
  auto f = normalize_case(2, 3);
  auto cod = codifferent_basis(f);
  auto sqrt3 = sqrt_element(f, 3);
  CHECK(cod[2] == Rational(1, 12) * sqrt3);
}

TEST_CASE("projected inner product") {
  auto k = field("x^3+x^2-2x-1");
  auto b = k->generator();
  CHECK(projected_inner(k->one(), k->one()) == 0);
  CHECK(projected_inner(b, b) == Rational(14, 3));
  auto z = b * b - Rational(3);
  CHECK(projected_inner(b + z, b) == projected_inner(b, b) + projected_inner(z, b));
  CHECK(projected_inner(b + Rational(5), b) == projected_inner(b, b));
}

TEST_CASE("lambda basis") {
  auto k = field("x^3+x^2-2x-1");
  auto lam = lambda_basis(k);
  REQUIRE(lam.gram.rows() == 2);
  CHECK(exact_determinant(lam.gram) == Rational(49, 3));
  CHECK(lam.gram(0, 0) > 0);
  CHECK(exact_determinant(lam.gram) > 0);

  // shifting a representative by an integer does not move its projection
  auto shifted = lam;
  shifted.basis[0] = shifted.basis[0] + Rational(5);
  CHECK(projected_inner(shifted.basis[0], shifted.basis[0]) == lam.gram(0, 0));
  CHECK(projected_inner(shifted.basis[0], shifted.basis[1]) == lam.gram(0, 1));
}

TEST_CASE("gauss reduction examples") {
  CHECK(gauss_reduce(gram2(2, 1, 2)).u_norm == 2);
  CHECK(gauss_reduce(gram2(5, 4, 5)).u_norm == 2);
  CHECK(enumerate_shortest(gram2(5, 4, 5)) == 2);
  CHECK_THROWS_AS(gauss_reduce(gram2(1, 2, 1)), Error);

  auto [u, v] = gauss_reduce(lambda_basis(field("x^3+x^2-2x-1")));
  CHECK(u.squared_length == Rational(14, 3));
  CHECK(v.squared_length >= u.squared_length);
}

TEST_CASE("property: gauss reduction against enumeration") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> e(-30, 30), den(1, 6);
  int done = 0;
  while (done < 100) {
    Gram2 g;
    const Rational a = Rational(e(rng)) / den(rng), b = Rational(e(rng)) / den(rng),
                   c = Rational(e(rng)) / den(rng);
    g << a, b, b, c;
    if (!(a > 0) || !(a * c - b * b > 0)) continue;
    ++done;
    const auto r = gauss_reduce(g);
    CHECK(r.u_norm == enumerate_shortest(g));
    CHECK(abs(r.u[0] * r.v[1] - r.u[1] * r.v[0]) == 1);
    CHECK(r.v_norm >= r.u_norm);
    CHECK(2 * abs(r.uv) <= r.u_norm);
  }
}

TEST_CASE("property: gram determinant under unimodular change") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto k = zlift::testing::random_field(rng, 3 + trial % 2);
    const int d = k->degree();
    const MatrixQ u = unimodular(rng, d);
    const MatrixQ changed = u * k->integral_basis();
    std::vector<FieldElement> b1 = k->basis_elements(), b2;
    for (int i = 0; i < d; ++i) b2.push_back(k->element(changed.row(i).transpose()));
    CHECK(exact_determinant(gram(b1)) == exact_determinant(gram(b2)));
  }
}

TEST_CASE("property: projected norm vanishes exactly on rationals") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto k = zlift::testing::random_field(rng, 3);
    auto x = zlift::testing::random_integral_element(rng, k, 3);
    const Rational n = projected_inner(x, x);
    CHECK(n >= 0);
    CHECK((n == 0) == x.is_rational());
    CHECK(projected_inner(k->rational(7), k->rational(7)) == 0);
  }
}

TEST_CASE("octant shifts") {
  auto k = field("x^3+x^2-2x-1");
  auto s = octant_shifts(k->generator());
  CHECK(s.segment1 == std::vector<Integer>{-1});
  CHECK(s.segment2 == std::vector<Integer>{0, 1});

  // x^3-3x^2+1 has its smallest root in (-1, 0) already
  auto k2 = field("x^3-3x^2+1");
  auto s2 = octant_shifts(k2->generator());
  CHECK(s2.segment1 == std::vector<Integer>{0});
  CHECK(s2.segment2 == std::vector<Integer>{1, 2});

  // brute force over t in [-10, 10]
  for (const auto* pk : {&k, &k2}) {
    auto b = (*pk)->generator();
    auto so = octant_shifts(b);
    std::vector<Integer> one, two;
    for (int t = -10; t <= 10; ++t) {
      const SignVector sg = signature(b - Rational(t)).permuted(so.frame);
      if (sg.entries() == std::vector<int>{1, 1, -1}) one.push_back(t);
      if (sg.entries() == std::vector<int>{1, -1, -1}) two.push_back(t);
    }
    CHECK(so.segment1 == one);
    CHECK(so.segment2 == two);
  }

  CHECK_THROWS_AS(octant_shifts(quadratic_field(2).tau), Error);
  CHECK_THROWS_AS(octant_shifts(k->rational(3)), Error);
}
