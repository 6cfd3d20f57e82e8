#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zlift/biquadratic.hpp"
#include "zlift/cubic.hpp"
#include "zlift/quadratic.hpp"

namespace zlift {

inline constexpr const char* kSchemaVersion = "zlift-certificate/1";

/// Fixed statement of the hypothesis the obstruction relies on.
extern const char* const kAssumptionNote;

enum class FieldKind { polynomial, quadratic, biquadratic };
enum class Coordinates { power, sqrt_biquadratic };
enum class Convention { ascending_roots, descending_roots, biquadratic_sign_table };

const char* to_string(FieldKind);
const char* to_string(Coordinates);
const char* to_string(Convention);

struct FieldDescription {
  FieldKind kind = FieldKind::polynomial;
  int degree = 0;
  std::string defining_poly;
  Coordinates coordinates = Coordinates::power;
  /// Rows are integral basis elements in `coordinates`.
  std::vector<std::vector<Rational>> integral_basis;
  long D = 0;  // quadratic
  long p = 0;  // biquadratic, normalized
  long q = 0;
  long r = 0;
  int case_id = 0;

  friend bool operator==(const FieldDescription&, const FieldDescription&) = default;
};

struct ObstructionCertificate {
  std::string schema_version = kSchemaVersion;
  FieldDescription field;
  Convention convention = Convention::ascending_roots;
  std::string isolation_width;
  std::vector<Rational> alpha;
  std::vector<Rational> delta;
  std::vector<int> epsilon;
  std::string trace_product;
  std::string norm_alpha;
  std::string assumption_note = kAssumptionNote;
  std::string verdict = "obstruction";  // or "exceptional"

  friend bool operator==(const ObstructionCertificate&, const ObstructionCertificate&) = default;
};

/// One JSON object on one line, rationals as strings.
std::string serialize(const ObstructionCertificate& cert);
/// Throws Errc::syntax on malformed input.
ObstructionCertificate deserialize(const std::string& line);

ObstructionCertificate make_certificate(const CubicVerdict& verdict);
ObstructionCertificate make_certificate(const QuadraticVerdict& verdict);
ObstructionCertificate make_certificate(const BiquadField& field, const BiquadWitness& w);

/// Runs normalize_case and witness and packages the result.
ObstructionCertificate certify_biquadratic(long p, long q);

/// Names of the six verifier checks.
namespace check {
inline constexpr const char* field = "field";
inline constexpr const char* alpha_integral = "alpha_integral";
inline constexpr const char* delta_codifferent = "delta_codifferent";
inline constexpr const char* signature = "signature";
inline constexpr const char* trace_product = "trace_product";
inline constexpr const char* norm = "norm";
}  // namespace check

struct Failure {
  std::string check;
  std::string detail;
};

struct VerificationResult {
  bool valid = false;
  std::vector<Failure> failures;

  bool failed(const std::string& check_name) const;
  std::string summary() const;
};

/// Re-checks a certificate with field arithmetic only (no certifier code).
VerificationResult verify_certificate(const ObstructionCertificate& cert);

}  // namespace zlift
