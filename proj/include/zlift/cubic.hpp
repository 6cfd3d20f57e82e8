#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zlift/field.hpp"
#include "zlift/trace_lattice.hpp"

namespace zlift {

/// Open cone in H: both linear forms (weights on sorted-frame coordinates
/// y_1, y_2, y_3) strictly positive.
struct ConeSpec {
  const char* name;
  std::array<int, 3> form1;
  std::array<int, 3> form2;
};

inline constexpr ConeSpec kConeC0{"C0", {1, -1, 0}, {0, 1, -1}};   // y1 > y2 > y3
inline constexpr ConeSpec kConeC1{"C1", {1, 0, -1}, {0, -1, 1}};   // y1 > y3 > y2
inline constexpr ConeSpec kConeC2{"C2", {-1, 0, 1}, {1, -1, 0}};   // y3 > y1 > y2
inline constexpr ConeSpec kConeD1{"D1", {-1, 2, -1}, {2, -1, -1}};
inline constexpr ConeSpec kConeD2{"D2", {1, -2, 1}, {1, 1, -2}};

/// Certified membership of p(rho(x)) in a cone, with the sorted frame given
/// as ascending-root embedding indices.
bool cone_contains(const ConeSpec& cone, const FieldElement& x,
                   const std::vector<std::size_t>& frame);

/// The shortest projected vector u, its completion v and beta.
struct CubicSetup {
  ProjectedLattice lattice;
  LatticeVector u;
  LatticeVector v;
  /// Lifts u with the smallest embedding in (-1, 0).
  FieldElement beta;
  /// Embedding indices by decreasing rho(beta) (the i, j, k frame).
  std::vector<std::size_t> frame;
};

/// Throws Errc::unsupported_degree for non-cubic fields.
CubicSetup cubic_setup(const FieldPtr& field);
FieldElement shortest_beta(const FieldPtr& field);

struct DeltaWitnessPair {
  FieldElement delta1;  // sorted-frame signature (+,+,-)
  FieldElement delta2;  // sorted-frame signature (+,-,-)
  Integer k1;           // v + k1 u lies in C1
  Integer k2;           // v + k2 u lies in C2
  bool v_flipped = false;
  Rational line_distance_sq;  // d_l^2 for the line v + R u
  Rational u_sq;
  bool distance_bound_holds = false;  // d_l^2 >= 3/4 |u|^2
  bool c1_segment_long = false;       // |l cap C1| > |u|
  bool c2_segment_long = false;
  bool d1_agrees_with_signature = false;
  bool d2_agrees_with_signature = false;
};

/// Builds delta_1, delta_2 from the reduced basis. Throws
/// Errc::geometric_failure if any geometric precondition fails.
DeltaWitnessPair construct_deltas(const CubicSetup& setup);

/// The 24 monic cubics x^3 - c1 x^2 + c2 x - c3 with 0 <= c1 <= 5,
/// c3 = +-1, m(1) = +-1.
std::vector<IntegerPolynomial> candidate_cubics();
/// Keeps irreducible totally real candidates whose ascending roots satisfy
/// -1 < r1 < 0, -1 < r2 < 2, 1 < r3 < 4.
std::vector<IntegerPolynomial> filter_by_bounds(std::span<const IntegerPolynomial> candidates);

/// Field discriminant 49 and an exact root of x^3 + x^2 - 2x - 1.
bool is_zeta7_field(const NumberField& field);
/// An element y with y^3 + y^2 - 2y - 1 = 0, if one exists in O_K.
std::optional<FieldElement> zeta7_root(const NumberField& field);

struct CubicDiagnostics {
  FieldElement beta;
  std::vector<double> beta_embeddings;  // sorted frame, display only
  Rational u_sq;
  Rational line_distance_sq;
  Integer k1;
  Integer k2;
  bool v_flipped = false;
  bool bound_j_below_2 = false;  // rho_j(beta) < 2
  bool bound_i_below_4 = false;  // rho_i(beta) < 4
  bool bound_i_above_1 = false;  // rho_i(beta) > 1
  bool beta_polynomial_is_survivor = false;
  std::vector<Integer> segment1;
  std::vector<Integer> segment2;
  std::vector<Integer> nonunit_shifts;
  /// "delta1" or "delta2": which functional certifies the chosen alpha.
  std::string delta_choice;
  DeltaWitnessPair deltas;
};

struct CubicVerdict {
  enum class Kind { obstruction, exceptional };
  Kind kind = Kind::obstruction;
  FieldPtr field;
  std::optional<FieldElement> alpha;
  std::optional<FieldElement> delta;
  SignVector epsilon;  // ascending-root frame
  Integer shift;       // alpha = beta - shift
  CubicDiagnostics trail;
};

/// Throws Errc::unsupported_degree, Errc::reducible, Errc::not_totally_real.
CubicVerdict certify_cubic(const IntegerPolynomial& poly,
                           std::optional<MatrixQ> integral_basis = std::nullopt);
CubicVerdict certify_cubic(const FieldPtr& field);

}  // namespace zlift
