#include "zlift/cubic.hpp"

#include <algorithm>

namespace zlift {

namespace {

std::vector<Rational> frame_weights(const std::array<int, 3>& form,
                                    const std::vector<std::size_t>& frame) {
  std::vector<Rational> w(3, Rational(0));
  for (std::size_t s = 0; s < 3; ++s) w[frame[s]] = form[s];
  return w;
}

SignVector sorted_signature(const FieldElement& x, const std::vector<std::size_t>& frame) {
  return signature(x).permuted(frame);
}

// sign of rho_{frame[s]}(x) - c
int compare_sorted(const FieldElement& x, const std::vector<std::size_t>& frame, std::size_t s,
                   const Rational& c) {
  std::vector<Rational> w(3, Rational(0));
  w[frame[s]] = 1;
  return embedding_combination_sign(x - c, w);
}

struct Embeddings {
  std::array<IntervalQ, 3> b;  // sorted frame
  std::array<IntervalQ, 3> g;
};

Embeddings sorted_embeddings(const FieldElement& beta, const FieldElement& gamma,
                             const std::vector<std::size_t>& frame, const Rational& width) {
  Embeddings e;
  for (std::size_t s = 0; s < 3; ++s) {
    e.b[s] = beta.embedding(frame[s], width);
    e.g[s] = gamma.embedding(frame[s], width);
  }
  return e;
}

// Endpoints of the t-ranges where gamma + t beta lies in C1 = (L1, R1) and
// C2 = (L2, L1), as enclosures.
struct ConeRanges {
  IntervalQ l1, r1, l2;
};

ConeRanges cone_ranges(const FieldElement& beta, const FieldElement& gamma,
                       const std::vector<std::size_t>& frame, Rational width) {
  for (int step = 0; step < 400; ++step, width /= 2) {
    const Embeddings e = sorted_embeddings(beta, gamma, frame, width);
    const IntervalQ b13 = e.b[0] - e.b[2], b23 = e.b[1] - e.b[2], b12 = e.b[0] - e.b[1];
    if (!b13.certain_sign() || !b23.certain_sign() || !b12.certain_sign()) continue;
    return {-((e.g[0] - e.g[2]) / b13), (e.g[2] - e.g[1]) / b23, -((e.g[0] - e.g[1]) / b12)};
  }
  throw Error(Errc::precision_exhausted, "cone ranges undecided");
}

// Integers inside [lo, hi] by increasing |k|, negative first on ties.
std::vector<Integer> ordered_integers(const IntervalQ& lo, const IntervalQ& hi) {
  std::vector<Integer> out;
  for (Integer k = ceil(lo.lo); k <= floor(hi.hi); ++k) out.push_back(k);
  std::stable_sort(out.begin(), out.end(), [](const Integer& a, const Integer& b) {
    if (abs(a) != abs(b)) return abs(a) < abs(b);
    return a < b;
  });
  return out;
}

// sign(x - 1) for an enclosure function
bool exceeds_one(const std::function<IntervalQ(const Rational&)>& f) {
  try {
    return certified_sign([&](const Rational& w) { return f(w) - IntervalQ(Rational(1)); }) > 0;
  } catch (const Error& e) {
    if (e.code() != Errc::precision_exhausted) throw;
    return true;  // equal to 1 up to the refinement budget
  }
}

Integer pick_k(const ConeSpec& cone, const FieldElement& beta, const FieldElement& gamma,
               const std::vector<std::size_t>& frame, const IntervalQ& lo, const IntervalQ& hi) {
  for (const Integer& k : ordered_integers(lo, hi))
    if (cone_contains(cone, gamma + beta * Rational(k), frame)) return k;
  throw Error(Errc::geometric_failure,
              std::string("no integer shift places v in cone ") + cone.name);
}

const char* const kSurvivors[] = {"x^3-2x^2-x+1", "x^3-3x^2+1", "x^3-4x^2+x+1",
                                  "x^3-4x^2+3x+1", "x^3-5x^2+4x+1"};

}  // namespace

bool cone_contains(const ConeSpec& cone, const FieldElement& x,
                   const std::vector<std::size_t>& frame) {
  if (frame.size() != 3) throw Error(Errc::unsupported_degree, "cones live in the cubic plane");
  return embedding_combination_sign(x, frame_weights(cone.form1, frame)) > 0 &&
         embedding_combination_sign(x, frame_weights(cone.form2, frame)) > 0;
}

CubicSetup cubic_setup(const FieldPtr& field) {
  if (field->degree() != 3) throw Error(Errc::unsupported_degree, "cubic field expected");
  ProjectedLattice lattice = lambda_basis(field);
  auto [u, v] = gauss_reduce(lattice);
  const FieldElement& rep = u.representative;
  const auto order = descending_order(rep);
  const Integer low = embedding_floor(rep, order[2]);
  FieldElement beta = rep - Rational(low + 1);
  return {std::move(lattice), std::move(u), std::move(v), std::move(beta), order};
}

FieldElement shortest_beta(const FieldPtr& field) { return cubic_setup(field).beta; }

DeltaWitnessPair construct_deltas(const CubicSetup& setup) {
  const FieldElement& beta = setup.beta;
  const auto& frame = setup.frame;
  FieldElement gamma = setup.v.representative;

  // Orient v so the line v + R u runs through C1 and C2: same side of R u as
  // the sorted direction (1, -2, 1).
  const int side = certified_sign([&](const Rational& w) {
    const Embeddings e = sorted_embeddings(beta, gamma, frame, w);
    return e.b[0] * (e.g[1] - e.g[2]) + e.b[1] * (e.g[2] - e.g[0]) + e.b[2] * (e.g[0] - e.g[1]);
  });
  const bool flipped = side > 0;
  if (flipped) gamma = -gamma;

  const Rational start = default_isolation_width();
  const ConeRanges r = cone_ranges(beta, gamma, frame, start);
  const Integer k1 = pick_k(kConeC1, beta, gamma, frame, r.l1, r.r1);
  const Integer k2 = pick_k(kConeC2, beta, gamma, frame, r.l2, r.l1);

  const bool c1_long = exceeds_one([&](const Rational& w) {
    const ConeRanges c = cone_ranges(beta, gamma, frame, w);
    return c.r1 - c.l1;
  });
  const bool c2_long = exceeds_one([&](const Rational& w) {
    const ConeRanges c = cone_ranges(beta, gamma, frame, w);
    return c.l1 - c.l2;
  });

  const FieldPtr& k = beta.field();
  const std::vector<FieldElement> b1{k->one(), beta, gamma + beta * Rational(k1)};
  const std::vector<FieldElement> b2{k->one(), beta, gamma + beta * Rational(k2)};
  FieldElement delta1 = dual_basis(b1)[1];
  FieldElement delta2 = dual_basis(b2)[1];
  if (trace(delta1) != 0 || trace(delta2) != 0 || trace(delta1 * beta) != 1 ||
      trace(delta2 * beta) != 1)
    throw Error(Errc::geometric_failure, "dual functional does not pair to 1 with beta");

  const Rational u_sq = projected_inner(beta, beta);
  const Rational uv = projected_inner(beta, gamma);
  const Rational dist_sq = projected_inner(gamma, gamma) - uv * uv / u_sq;
  const bool bound = 4 * dist_sq >= 3 * u_sq;
  if (!bound) throw Error(Errc::geometric_failure, "line distance below sqrt(3)/2 |u|");

  const bool d1_sig = sorted_signature(delta1, frame) == SignVector({1, 1, -1});
  const bool d2_sig = sorted_signature(delta2, frame) == SignVector({1, -1, -1});
  const bool d1_cone = cone_contains(kConeD1, delta1, frame);
  const bool d2_cone = cone_contains(kConeD2, delta2, frame);
  if (!d1_sig || !d2_sig)
    throw Error(Errc::geometric_failure, "dual functional has the wrong signature");

  return {std::move(delta1), std::move(delta2), k1, k2, flipped, dist_sq, u_sq, bound,
          c1_long, c2_long, d1_cone == d1_sig, d2_cone == d2_sig};
}

std::vector<IntegerPolynomial> candidate_cubics() {
  std::vector<IntegerPolynomial> out;
  for (int c1 = 0; c1 <= 5; ++c1)
    for (int c3 : {1, -1})
      for (int m1 : {1, -1}) {
        const int c2 = m1 - 1 + c1 + c3;
        out.emplace_back(std::vector<Integer>{-c3, c2, -c1, 1});
      }
  return out;
}

std::vector<IntegerPolynomial> filter_by_bounds(std::span<const IntegerPolynomial> candidates) {
  std::vector<IntegerPolynomial> out;
  for (const auto& f : candidates) {
    if (f.degree() != 3 || !is_irreducible(f) || count_real_roots(f.rational()) != 3) continue;
    RootIsolation roots = isolate_roots(f, default_isolation_width());
    const bool ok = roots.compare(0, Rational(-1)) > 0 && roots.compare(0, Rational(0)) < 0 &&
                    roots.compare(1, Rational(-1)) > 0 && roots.compare(1, Rational(2)) < 0 &&
                    roots.compare(2, Rational(1)) > 0 && roots.compare(2, Rational(4)) < 0;
    if (ok) out.push_back(f);
  }
  return out;
}

std::optional<FieldElement> zeta7_root(const NumberField& field) {
  if (field.degree() != 3) return std::nullopt;
  const IntegerPolynomial g({-1, -2, 1, 1});
  const Rational w = pow2_inverse(60);
  RootIsolation groots = isolate_roots(g, w);
  const auto basis = field.basis_elements();
  MatrixQ e(3, 3);
  for (std::size_t m = 0; m < 3; ++m)
    for (std::size_t i = 0; i < 3; ++i)
      e(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(i)) = basis[i].embedding(m, w).midpoint();
  std::array<std::size_t, 3> perm{0, 1, 2};
  do {
    MatrixQ rhs(3, 1);
    for (std::size_t m = 0; m < 3; ++m) rhs(static_cast<Eigen::Index>(m), 0) = groots[perm[m]].midpoint();
    const MatrixQ k = exact_solve(e, rhs);
    VectorQ coords(3);
    for (Eigen::Index i = 0; i < 3; ++i) coords(i) = Rational(round_nearest(k(i, 0)));
    const FieldElement y = field.from_integral_coords(coords);
    const FieldElement value = y * y * y + y * y - y * Rational(2) - Rational(1);
    if (value.is_zero()) return y;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool is_zeta7_field(const NumberField& field) {
  return field.degree() == 3 && field.discriminant() == 49 && zeta7_root(field).has_value();
}

CubicVerdict certify_cubic(const FieldPtr& field) {
  CubicSetup setup = cubic_setup(field);
  DeltaWitnessPair deltas = construct_deltas(setup);
  const FieldElement& beta = setup.beta;
  const auto& frame = setup.frame;
  const OctantShifts shifts = octant_shifts(beta);

  struct Nonunit {
    Integer t;
    int segment;
    Rational norm;
  };
  std::vector<Nonunit> nonunits;
  for (int seg : {1, 2})
    for (const auto& t : seg == 1 ? shifts.segment1 : shifts.segment2) {
      const Rational n = abs(norm(beta - Rational(t)));
      if (n != 1) nonunits.push_back({t, seg, n});
    }

  CubicDiagnostics trail{beta, {}, deltas.u_sq, deltas.line_distance_sq, deltas.k1, deltas.k2,
                         deltas.v_flipped, false, false, false, false, shifts.segment1,
                         shifts.segment2, {}, "", deltas};
  for (std::size_t s = 0; s < 3; ++s)
    trail.beta_embeddings.push_back(to_double(beta.embedding(frame[s], pow2_inverse(40)).midpoint()));
  trail.bound_j_below_2 = compare_sorted(beta, frame, 1, Rational(2)) < 0;
  trail.bound_i_below_4 = compare_sorted(beta, frame, 0, Rational(4)) < 0;
  trail.bound_i_above_1 = compare_sorted(beta, frame, 0, Rational(1)) > 0;
  const PolynomialQ mb = characteristic_polynomial(beta);
  for (const char* s : kSurvivors)
    if (parse_polynomial(s).rational() == mb) trail.beta_polynomial_is_survivor = true;
  for (const auto& n : nonunits) trail.nonunit_shifts.push_back(n.t);

  if (is_zeta7_field(*field)) {
    if (!nonunits.empty())
      throw Error(Errc::geometric_failure, "non-unit on the well line of the exceptional field");
    return {CubicVerdict::Kind::exceptional, field, std::nullopt, std::nullopt, SignVector(),
            Integer(0), std::move(trail)};
  }
  if (nonunits.empty())
    throw Error(Errc::geometric_failure, "every shift on the well line is a unit");

  const auto best = std::min_element(nonunits.begin(), nonunits.end(),
                                     [](const Nonunit& a, const Nonunit& b) {
                                       if (a.norm != b.norm) return a.norm < b.norm;
                                       if (abs(a.t) != abs(b.t)) return abs(a.t) < abs(b.t);
                                       return a.t < b.t;
                                     });
  FieldElement alpha = beta - Rational(best->t);
  FieldElement delta = best->segment == 1 ? deltas.delta1 : deltas.delta2;
  trail.delta_choice = best->segment == 1 ? "delta1" : "delta2";
  SignVector eps = signature(alpha);
  if (!(signature(delta) == eps) || trace(delta * alpha) != 1)
    throw Error(Errc::geometric_failure, "witness pair does not match");
  return {CubicVerdict::Kind::obstruction, field, std::move(alpha), std::move(delta),
          std::move(eps), best->t, std::move(trail)};
}

CubicVerdict certify_cubic(const IntegerPolynomial& poly, std::optional<MatrixQ> integral_basis) {
  if (poly.degree() != 3)
    throw Error(Errc::unsupported_degree, "certify_cubic needs a cubic polynomial");
  return certify_cubic(NumberField::create(poly, std::move(integral_basis)));
}

}  // namespace zlift
