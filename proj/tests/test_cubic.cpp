#include <doctest.h>

#include <set>

#include "support.hpp"
#include "zlift/cubic.hpp"
#include "zlift/trace_lattice.hpp"

using namespace zlift;
using zlift::testing::field;
using zlift::testing::poly;

namespace {

std::set<std::string> names(const std::vector<IntegerPolynomial>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(to_string(p));
  return out;
}

void check_obstruction(const CubicVerdict& v) {
  REQUIRE(v.kind == CubicVerdict::Kind::obstruction);
  const auto& a = *v.alpha;
  const auto& d = *v.delta;
  CHECK(a.is_algebraic_integer());
  CHECK(abs(norm(a)) != 1);
  CHECK(trace(d) == 0);
  CHECK(trace(d * a) == 1);
  CHECK(signature(a) == v.epsilon);
  CHECK(signature(d) == v.epsilon);
  for (const auto& w : v.field->basis_elements()) CHECK(is_integer(trace(d * w)));
}

}  // namespace

TEST_CASE("candidate polynomials and the bound filter") {
  const auto cands = candidate_cubics();
  CHECK(cands.size() == 24);
  CHECK(names(cands).size() == 24);
  for (const auto& c : cands) {
    const auto& k = c.coefficients();
    const Integer m1 = k[0] + k[1] + k[2] + k[3];
    CHECK(abs(k[0]) == 1);
    CHECK(abs(m1) == 1);
  }
  const auto kept = filter_by_bounds(cands);
  CHECK(names(kept) == std::set<std::string>{"x^3-2x^2-x+1", "x^3-3x^2+1", "x^3-4x^2+x+1",
                                             "x^3-4x^2+3x+1", "x^3-5x^2+4x+1"});
}

TEST_CASE("cubic setup") {
  auto k = field("x^3+x^2-2x-1");
  auto s = cubic_setup(k);
  CHECK(s.u.squared_length == Rational(14, 3));
  CHECK(projected_inner(s.beta, s.beta) == Rational(14, 3));
  // smallest embedding in (-1, 0)
  const auto lo = s.beta.embedding(s.frame[2], pow2_inverse(40));
  CHECK(lo.lo > -1);
  CHECK(lo.hi < 0);
  CHECK(compare_embeddings(s.beta, s.frame[0], s.frame[1]) > 0);
  CHECK(compare_embeddings(s.beta, s.frame[1], s.frame[2]) > 0);

  auto b = shortest_beta(field("x^3-3x-1"));
  CHECK(embedding_floor(b, descending_order(b)[2]) == -1);
  CHECK(projected_inner(b, b) > 0);

  CHECK_THROWS_AS(cubic_setup(field("x^2-2")), Error);
}

TEST_CASE("delta construction") {
  for (const char* text : {"x^3+x^2-2x-1", "x^3-3x-1", "x^3-x^2-10x-4", "x^3-4x^2+x+1"}) {
    CAPTURE(text);
    auto s = cubic_setup(field(text));
    auto dp = construct_deltas(s);
    for (const auto* d : {&dp.delta1, &dp.delta2}) {
      CHECK(trace(*d) == 0);
      CHECK(trace(*d * s.beta) == 1);
      for (int t = -3; t <= 3; ++t) CHECK(trace(*d * (s.beta - Rational(t))) == 1);
    }
    CHECK(signature(dp.delta1).permuted(s.frame).entries() == std::vector<int>{1, 1, -1});
    CHECK(signature(dp.delta2).permuted(s.frame).entries() == std::vector<int>{1, -1, -1});
    CHECK(dp.distance_bound_holds);
    CHECK(4 * dp.line_distance_sq >= 3 * dp.u_sq);
    CHECK(dp.c1_segment_long);
    CHECK(dp.c2_segment_long);
    CHECK(dp.d1_agrees_with_signature);
    CHECK(dp.d2_agrees_with_signature);
    CHECK(cone_contains(kConeD1, dp.delta1, s.frame));
    CHECK(cone_contains(kConeD2, dp.delta2, s.frame));
  }
}

TEST_CASE("eliminated cubics") {
  const std::pair<const char*, int> cases[] = {{"x^3-3x^2+1", 3}, {"x^3-4x^2+x+1", 5}, {"x^3-5x^2+4x+1", 3}};
  for (const auto& [text, n] : cases) {
    CAPTURE(text);
    auto v = certify_cubic(poly(text));
    check_obstruction(v);
    CHECK(abs(norm(*v.alpha)) == n);
  }
  auto v = certify_cubic(poly("x^3-3x^2+1"));
  CHECK(*v.alpha == v.trail.beta - Rational(2));
  CHECK(v.shift == 2);
}

TEST_CASE("exceptional field") {
  for (const char* text : {"x^3-2x^2-x+1", "x^3-4x^2+3x+1", "x^3+x^2-2x-1"}) {
    CAPTURE(text);
    auto v = certify_cubic(poly(text));
    CHECK(v.kind == CubicVerdict::Kind::exceptional);
    CHECK_FALSE(v.alpha.has_value());
    // every point of the well line is a unit
    auto shifts = octant_shifts(v.trail.beta);
    for (const auto* seg : {&shifts.segment1, &shifts.segment2})
      for (const auto& t : *seg) CHECK(is_unit(v.trail.beta - Rational(t)));
  }
  CHECK(is_zeta7_field(*field("x^3-2x^2-x+1")));
  CHECK_FALSE(is_zeta7_field(*field("x^3-3x-1")));
  auto y = zeta7_root(*field("x^3-4x^2+3x+1"));
  REQUIRE(y.has_value());
  CHECK((*y) * (*y) * (*y) + (*y) * (*y) - Rational(2) * (*y) == y->field()->one());
}

TEST_CASE("certify_cubic on assorted fields") {
  for (const char* text : {"x^3-3x-1", "x^3-x^2-10x-4", "x^3-x^2-4x-1", "x^3-7x-5", "x^3-21x-35"}) {
    CAPTURE(text);
    check_obstruction(certify_cubic(poly(text)));
  }
  CHECK_THROWS_AS(certify_cubic(poly("x^3-2")), Error);
  CHECK_THROWS_AS(certify_cubic(poly("x^3-x")), Error);
  CHECK_THROWS_AS(certify_cubic(poly("x^4-10x^2+1")), Error);
}

TEST_CASE("supplied integral basis gives the same verdict") {
  auto f = poly("x^3-x^2-10x-4");
  MatrixQ b(3, 3);
  b << 1, 0, 0, 0, 1, 0, 0, Rational(1, 2), Rational(1, 2);
  auto with = certify_cubic(f, b);
  auto without = certify_cubic(f);
  CHECK(with.alpha->coords() == without.alpha->coords());
  CHECK(with.delta->coords() == without.delta->coords());
}
