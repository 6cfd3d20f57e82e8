// Shared helpers for the unit tests and the acceptance runner.
#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "zlift/certificate.hpp"
#include "zlift/cubic.hpp"
#include "zlift/error.hpp"
#include "zlift/field.hpp"
#include "zlift/polynomial.hpp"

namespace zlift::testing {

inline std::filesystem::path data_dir() { return ZLIFT_TEST_DATA_DIR; }

inline IntegerPolynomial poly(const char* text) { return parse_polynomial(text); }

inline FieldPtr field(const char* text) { return NumberField::create(parse_polynomial(text)); }

// Random totally real fields of degree 2..4 with small coefficients.
// Perturbed products of linear factors are almost always totally real.
inline FieldPtr random_field(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> start(-8, -2), gap(3, 5), bump(-3, 3);
  for (;;) {
    PolynomialZ f = PolynomialZ::constant(Integer(1));
    std::vector<int> roots{start(rng)};
    while (static_cast<int>(roots.size()) < degree) roots.push_back(roots.back() + gap(rng));
    for (int r : roots) f = f * PolynomialZ(std::vector<Integer>{Integer(-r), Integer(1)});
    f += PolynomialZ::constant(Integer(bump(rng)));
    try {
      return NumberField::create(IntegerPolynomial(f.coefficients()));
    } catch (const Error&) {
      // reducible or not totally real, draw again
    }
  }
}

inline FieldElement random_integral_element(std::mt19937_64& rng, const FieldPtr& k, int bound) {
  std::uniform_int_distribution<int> c(-bound, bound);
  for (;;) {
    VectorQ v(k->degree());
    for (int i = 0; i < k->degree(); ++i) v(i) = c(rng);
    FieldElement x = k->from_integral_coords(v);
    if (!x.is_zero()) return x;
  }
}

// |rho_m(u)| > |rho_m(v)| for every m, decided on enclosures of width
// 2^-40 (false when undecided).
template <typename Embedding>
bool dominates(const Embedding& u, const Embedding& v, int degree) {
  const Rational w = pow2_inverse(40);
  for (int m = 0; m < degree; ++m) {
    const IntervalQ a = u(m, w), b = v(m, w);
    const Rational a_low = a.lo > 0 ? a.lo : a.hi < 0 ? Rational(-a.hi) : Rational(0);
    const Rational b_high = std::max(abs(b.lo), abs(b.hi));
    if (!(a_low > b_high)) return false;
  }
  return true;
}

// Single-field mutations of a serialized certificate and the verifier check
// each one must trip.
enum class Mutation { alpha_coordinate, delta_coordinate, epsilon_entry, trace_value, norm_value, basis_entry };
inline constexpr Mutation kAllMutations[] = {Mutation::alpha_coordinate, Mutation::delta_coordinate,
                                             Mutation::epsilon_entry,    Mutation::trace_value,
                                             Mutation::norm_value,       Mutation::basis_entry};

inline const char* expected_check(Mutation m) {
  switch (m) {
    case Mutation::alpha_coordinate: return check::alpha_integral;
    case Mutation::delta_coordinate: return check::delta_codifferent;
    case Mutation::epsilon_entry: return check::signature;
    case Mutation::trace_value: return check::trace_product;
    case Mutation::norm_value: return check::norm;
    case Mutation::basis_entry: return check::field;
  }
  return "";
}

inline const char* to_string(Mutation m) {
  switch (m) {
    case Mutation::alpha_coordinate: return "alpha coordinate";
    case Mutation::delta_coordinate: return "delta coordinate";
    case Mutation::epsilon_entry: return "epsilon entry";
    case Mutation::trace_value: return "trace_product";
    case Mutation::norm_value: return "norm_alpha";
    case Mutation::basis_entry: return "integral_basis entry";
  }
  return "";
}

// A large prime: x + 1/P is never integral in the small fields used here.
inline const Rational kNudge = Rational(1) / Rational(1000003);

inline std::string nudge(const std::string& s) { return zlift::to_string(parse_rational(s) + kNudge); }

// Applies m at position `pos` (taken modulo the field length) to the JSON
// form of the certificate and reads it back.
inline ObstructionCertificate mutate(const std::string& line, Mutation m, std::size_t pos) {
  auto j = nlohmann::ordered_json::parse(line);
  auto pick = [&](nlohmann::ordered_json& arr) -> nlohmann::ordered_json& { return arr[pos % arr.size()]; };
  switch (m) {
    case Mutation::alpha_coordinate: {
      auto& e = pick(j["alpha"]);
      e = nudge(e.get<std::string>());
      break;
    }
    case Mutation::delta_coordinate: {
      auto& e = pick(j["delta"]);
      e = nudge(e.get<std::string>());
      break;
    }
    case Mutation::epsilon_entry: {
      auto& e = pick(j["epsilon"]);
      e = -e.get<int>();
      break;
    }
    case Mutation::trace_value:
      j["trace_product"] = zlift::to_string(parse_rational(j["trace_product"].get<std::string>()) + 1);
      break;
    case Mutation::norm_value:
      j["norm_alpha"] = zlift::to_string(parse_rational(j["norm_alpha"].get<std::string>()) + 1);
      break;
    case Mutation::basis_entry: {
      auto& rows = j["field"]["integral_basis"];
      auto& row = rows[pos % rows.size()];
      auto& e = row[(pos / rows.size()) % row.size()];
      e = nudge(e.get<std::string>());
      break;
    }
  }
  return deserialize(j.dump());
}

}  // namespace zlift::testing
