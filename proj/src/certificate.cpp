#include "zlift/certificate.hpp"

#include <numeric>
#include <sstream>

#include <json.hpp>

#include "zlift/order.hpp"

namespace zlift {

const char* const kAssumptionNote =
    "Assumed, not computed: for totally real fields of degree at most 43 the trace-form "
    "lattices involved are of E-type, so every totally positive unit is a square and an "
    "integral element alpha admitting a codifferent delta of equal signature with "
    "tr(delta*alpha) = 1 must be a unit whenever a universal Z-form exists. A valid "
    "obstruction therefore excludes universal Z-forms under that hypothesis.";

using json = nlohmann::ordered_json;

const char* to_string(FieldKind k) {
  switch (k) {
    case FieldKind::polynomial: return "polynomial";
    case FieldKind::quadratic: return "quadratic";
    case FieldKind::biquadratic: return "biquadratic";
  }
  return "?";
}

const char* to_string(Coordinates c) {
  return c == Coordinates::power ? "power" : "sqrt-biquadratic";
}

const char* to_string(Convention c) {
  switch (c) {
    case Convention::ascending_roots: return "ascending-roots";
    case Convention::descending_roots: return "descending-roots";
    case Convention::biquadratic_sign_table: return "biquadratic-sign-table";
  }
  return "?";
}

namespace {

template <typename E>
E enum_from(const std::string& s, std::initializer_list<E> values) {
  for (E v : values)
    if (s == to_string(v)) return v;
  throw Error(Errc::syntax, "unknown tag '" + s + "'");
}

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

std::vector<Rational> rationals_from(const json& a) {
  std::vector<Rational> out;
  for (const auto& s : a) out.push_back(parse_rational(s.get<std::string>()));
  return out;
}

std::vector<Rational> coords(const VectorQ& v) { return {v.begin(), v.end()}; }

std::vector<std::vector<Rational>> rows(const MatrixQ& m) {
  std::vector<std::vector<Rational>> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(coords(m.row(i).transpose()));
  return out;
}

FieldDescription describe(const NumberField& k) {
  FieldDescription f;
  f.kind = FieldKind::polynomial;
  f.degree = k.degree();
  f.defining_poly = to_string(k.defining_polynomial());
  f.coordinates = Coordinates::power;
  f.integral_basis = rows(k.integral_basis());
  return f;
}

}  // namespace

std::string serialize(const ObstructionCertificate& c) {
  json field;
  field["kind"] = to_string(c.field.kind);
  field["degree"] = c.field.degree;
  field["defining_poly"] = c.field.defining_poly;
  field["coordinates"] = to_string(c.field.coordinates);
  json basis = json::array();
  for (const auto& row : c.field.integral_basis) basis.push_back(rationals(row));
  field["integral_basis"] = basis;
  if (c.field.kind == FieldKind::quadratic) field["D"] = c.field.D;
  if (c.field.kind == FieldKind::biquadratic) {
    field["p"] = c.field.p;
    field["q"] = c.field.q;
    field["r"] = c.field.r;
    field["case"] = c.field.case_id;
  }
  json j;
  j["schema_version"] = c.schema_version;
  j["verdict"] = c.verdict;
  j["field"] = field;
  j["convention"] = to_string(c.convention);
  j["isolation_width"] = c.isolation_width;
  j["alpha"] = rationals(c.alpha);
  j["delta"] = rationals(c.delta);
  j["epsilon"] = c.epsilon;
  j["trace_product"] = c.trace_product;
  j["norm_alpha"] = c.norm_alpha;
  j["assumption_note"] = c.assumption_note;
  return j.dump();
}

ObstructionCertificate deserialize(const std::string& line) {
  try {
    const json j = json::parse(line);
    ObstructionCertificate c;
    c.schema_version = j.at("schema_version").get<std::string>();
    c.verdict = j.at("verdict").get<std::string>();
    const json& f = j.at("field");
    c.field.kind = enum_from(f.at("kind").get<std::string>(),
                             {FieldKind::polynomial, FieldKind::quadratic, FieldKind::biquadratic});
    c.field.degree = f.at("degree").get<int>();
    c.field.defining_poly = f.at("defining_poly").get<std::string>();
    c.field.coordinates = enum_from(f.at("coordinates").get<std::string>(),
                                    {Coordinates::power, Coordinates::sqrt_biquadratic});
    for (const auto& row : f.at("integral_basis")) c.field.integral_basis.push_back(rationals_from(row));
    if (c.field.kind == FieldKind::quadratic) c.field.D = f.at("D").get<long>();
    if (c.field.kind == FieldKind::biquadratic) {
      c.field.p = f.at("p").get<long>();
      c.field.q = f.at("q").get<long>();
      c.field.r = f.at("r").get<long>();
      c.field.case_id = f.at("case").get<int>();
    }
    c.convention = enum_from(j.at("convention").get<std::string>(),
                             {Convention::ascending_roots, Convention::descending_roots,
                              Convention::biquadratic_sign_table});
    c.isolation_width = j.at("isolation_width").get<std::string>();
    c.alpha = rationals_from(j.at("alpha"));
    c.delta = rationals_from(j.at("delta"));
    c.epsilon = j.at("epsilon").get<std::vector<int>>();
    c.trace_product = j.at("trace_product").get<std::string>();
    c.norm_alpha = j.at("norm_alpha").get<std::string>();
    c.assumption_note = j.at("assumption_note").get<std::string>();
    return c;
  } catch (const json::exception& e) {
    throw Error(Errc::syntax, std::string("malformed certificate: ") + e.what());
  }
}

ObstructionCertificate make_certificate(const CubicVerdict& v) {
  ObstructionCertificate c;
  c.field = describe(*v.field);
  c.convention = Convention::ascending_roots;
  c.isolation_width = to_string(default_isolation_width());
  if (v.kind == CubicVerdict::Kind::exceptional) {
    c.verdict = "exceptional";
    return c;
  }
  c.alpha = coords(v.alpha->coords());
  c.delta = coords(v.delta->coords());
  c.epsilon = v.epsilon.entries();
  c.trace_product = to_string(trace(*v.delta * *v.alpha));
  c.norm_alpha = to_string(norm(*v.alpha));
  return c;
}

ObstructionCertificate make_certificate(const QuadraticVerdict& v) {
  ObstructionCertificate c;
  c.field = describe(*v.field.field);
  c.field.kind = FieldKind::quadratic;
  c.field.D = v.field.D;
  c.convention = Convention::descending_roots;
  c.isolation_width = to_string(default_isolation_width());
  if (v.kind == QuadraticVerdict::Kind::exceptional) {
    c.verdict = "exceptional";
    return c;
  }
  c.alpha = coords(v.alpha->coords());
  c.delta = coords(v.delta->coords());
  c.epsilon = v.epsilon.entries();
  c.trace_product = to_string(trace(*v.delta * *v.alpha));
  c.norm_alpha = to_string(v.norm_alpha);
  return c;
}

ObstructionCertificate make_certificate(const BiquadField& f, const BiquadWitness& w) {
  ObstructionCertificate c;
  c.field.kind = FieldKind::biquadratic;
  c.field.degree = 4;
  c.field.defining_poly = to_string(biquadratic_defining_polynomial(f.p, f.q));
  c.field.coordinates = Coordinates::sqrt_biquadratic;
  for (const auto& b : integral_basis(f)) c.field.integral_basis.emplace_back(b.coords().begin(), b.coords().end());
  c.field.p = f.p;
  c.field.q = f.q;
  c.field.r = f.r;
  c.field.case_id = f.case_id;
  c.convention = Convention::biquadratic_sign_table;
  c.isolation_width = to_string(default_isolation_width());
  c.alpha.assign(w.alpha.coords().begin(), w.alpha.coords().end());
  c.delta.assign(w.delta.coords().begin(), w.delta.coords().end());
  c.epsilon = w.epsilon.entries();
  c.trace_product = to_string(trace(w.delta * w.alpha));
  c.norm_alpha = to_string(norm(w.alpha));
  return c;
}

ObstructionCertificate certify_biquadratic(long p, long q) {
  const BiquadField f = normalize_case(p, q);
  return make_certificate(f, witness(f));
}

bool VerificationResult::failed(const std::string& name) const {
  for (const auto& f : failures)
    if (f.check == name) return true;
  return false;
}

std::string VerificationResult::summary() const {
  if (valid) return "valid";
  std::ostringstream os;
  os << "invalid:";
  for (const auto& f : failures) os << " [" << f.check << "] " << f.detail << ";";
  return os.str();
}

// ---------------------------------------------------------------------------
// Verifier. Uses field arithmetic only: the certificate's coordinates are
// mapped to the power basis of its defining polynomial and every claim is
// recomputed there.

namespace {

struct VerifierField {
  FieldPtr k;
  MatrixQ to_power;  // certificate coordinates (rows) -> power coordinates
  std::vector<std::size_t> frame;  // convention index -> ascending embedding
};

long gcd_long(long a, long b) { return std::gcd(a, b); }

VerifierField build_field(const ObstructionCertificate& c, std::vector<Failure>& fails) {
  auto fail = [&](const std::string& d) {
    fails.push_back({check::field, d});
    return VerifierField{};
  };
  const FieldDescription& f = c.field;
  if (c.schema_version != kSchemaVersion) return fail("unknown schema version " + c.schema_version);
  if (f.degree < 1 || f.degree > 43) return fail("degree outside 1..43");
  const auto d = static_cast<Eigen::Index>(f.degree);
  IntegerPolynomial poly;
  try {
    poly = parse_polynomial(f.defining_poly);
  } catch (const Error& e) {
    return fail(e.what());
  }
  if (poly.degree() != f.degree) return fail("defining polynomial degree differs from recorded degree");

  MatrixQ to_power = MatrixQ::Identity(d, d);
  Convention expected = Convention::ascending_roots;
  if (f.kind == FieldKind::quadratic) {
    expected = Convention::descending_roots;
    if (poly != IntegerPolynomial({Integer(-f.D), 0, 1})) return fail("quadratic field is not x^2 - D");
  }
  if (f.kind == FieldKind::biquadratic) {
    expected = Convention::biquadratic_sign_table;
    const long p = f.p, q = f.q;
    if (f.degree != 4 || p < 2 || q < 2 || p == q) return fail("bad biquadratic parameters");
    const long g = gcd_long(p, q);
    if (f.r != (p / g) * (q / g)) return fail("r is not pq/gcd(p,q)^2");
    if (poly != IntegerPolynomial({Integer((p - q) * (p - q)), 0, Integer(-2 * (p + q)), 0, 1}))
      return fail("defining polynomial is not that of sqrt p + sqrt q");
    if (f.coordinates != Coordinates::sqrt_biquadratic) return fail("coordinates must be sqrt-biquadratic");
    // theta = sqrt p + sqrt q
    VectorQ sp(4), sq(4), sr(4);
    const Rational den(2 * (q - p));  // q - p may be negative
    sp << 0, Rational(-(3 * p + q)) / den, 0, Rational(1) / den;
    sq = -sp;
    sq(1) += 1;
    sr << Rational(-(p + q), 2 * g), 0, Rational(1, 2 * g), 0;
    to_power.row(0) = VectorQ::Unit(4, 0).transpose();
    to_power.row(1) = sp.transpose();
    to_power.row(2) = sq.transpose();
    to_power.row(3) = sr.transpose();
  } else if (f.coordinates != Coordinates::power) {
    return fail("coordinates must be power");
  }
  if (c.convention != expected) return fail("convention does not match the field kind");

  if (static_cast<Eigen::Index>(f.integral_basis.size()) != d) return fail("integral basis has wrong size");
  MatrixQ basis(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (static_cast<Eigen::Index>(f.integral_basis[static_cast<std::size_t>(i)].size()) != d)
      return fail("integral basis row has wrong length");
    for (Eigen::Index j = 0; j < d; ++j) basis(i, j) = f.integral_basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const MatrixQ power_basis = basis * to_power;
  FieldPtr k;
  try {
    k = NumberField::create(poly, power_basis);
  } catch (const Error& e) {
    return fail(e.what());
  }
  const OrderCheck oc = check_maximal_order(poly, k->integral_basis());
  if (!oc.ok) return fail("basis is not the maximal order: " + oc.reason);

  std::vector<std::size_t> frame(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < frame.size(); ++i) frame[i] = i;
  if (expected == Convention::descending_roots) std::reverse(frame.begin(), frame.end());
  if (expected == Convention::biquadratic_sign_table) {
    const SignVector sp = signature(k->element(to_power.row(1).transpose()));
    const SignVector sq = signature(k->element(to_power.row(2).transpose()));
    const int table[4][2] = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
    for (std::size_t t = 0; t < 4; ++t)
      for (std::size_t m = 0; m < 4; ++m)
        if (sp[m] == table[t][0] && sq[m] == table[t][1]) frame[t] = m;
  }
  return {k, to_power, frame};
}

}  // namespace

VerificationResult verify_certificate(const ObstructionCertificate& c) {
  VerificationResult res;
  auto& fails = res.failures;
  const VerifierField vf = build_field(c, fails);
  if (!vf.k) return res;
  const NumberField& k = *vf.k;
  const auto d = static_cast<std::size_t>(k.degree());

  if (c.verdict == "exceptional") {
    const bool zeta7 = d == 3 && k.discriminant() == 49;
    const bool sqrt5 = d == 2 && k.discriminant() == 5;
    if (!zeta7 && !sqrt5) fails.push_back({check::field, "exceptional verdict for a field other than disc 49 cubic or Q(sqrt 5)"});
    res.valid = fails.empty();
    return res;
  }
  if (c.verdict != "obstruction") {
    fails.push_back({check::field, "unknown verdict '" + c.verdict + "'"});
    return res;
  }
  if (c.alpha.size() != d || c.delta.size() != d) {
    fails.push_back({check::field, "alpha/delta have the wrong number of coordinates"});
    return res;
  }
  auto element = [&](const std::vector<Rational>& v) {
    VectorQ x(static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) x(static_cast<Eigen::Index>(i)) = v[i];
    return k.element(vf.to_power.transpose() * x);
  };
  const FieldElement alpha = element(c.alpha);
  const FieldElement delta = element(c.delta);

  if (!alpha.is_algebraic_integer())
    fails.push_back({check::alpha_integral, "alpha is not in the maximal order"});

  for (const auto& w : k.basis_elements())
    if (!is_integer(trace(delta * w))) {
      fails.push_back({check::delta_codifferent, "tr(delta * w) is not an integer for a basis element"});
      break;
    }

  bool eps_ok = c.epsilon.size() == d;
  for (int e : c.epsilon) eps_ok = eps_ok && (e == 1 || e == -1);
  if (!eps_ok) {
    fails.push_back({check::signature, "epsilon is not a sign vector of length d"});
  } else {
    const SignVector eps(c.epsilon);
    for (const auto* x : {&alpha, &delta}) {
      const char* name = x == &alpha ? "alpha" : "delta";
      if (x->is_zero()) {
        fails.push_back({check::signature, std::string(name) + " is zero"});
        continue;
      }
      const SignVector s = signature(*x).permuted(vf.frame);
      if (!(s == eps)) fails.push_back({check::signature, std::string("Sgn(") + name + ") = " + s.to_string() + " differs from epsilon " + eps.to_string()});
    }
  }

  const Rational tp = trace(delta * alpha);
  if (tp != 1) fails.push_back({check::trace_product, "tr(delta*alpha) = " + to_string(tp)});
  try {
    if (parse_rational(c.trace_product) != tp)
      fails.push_back({check::trace_product, "recorded trace_product differs from recomputed value"});
  } catch (const Error&) {
    fails.push_back({check::trace_product, "recorded trace_product is not a rational"});
  }

  const Rational n = norm(alpha);
  if (abs(n) == 1) fails.push_back({check::norm, "|N(alpha)| = 1, alpha is a unit"});
  try {
    if (parse_rational(c.norm_alpha) != n)
      fails.push_back({check::norm, "recorded norm_alpha differs from recomputed value"});
  } catch (const Error&) {
    fails.push_back({check::norm, "recorded norm_alpha is not a rational"});
  }

  res.valid = fails.empty();
  return res;
}

}  // namespace zlift
