#pragma once

#include <stdexcept>
#include <string>

namespace zlift {

enum class Errc {
  syntax,
  non_monic,
  zero_polynomial,
  reducible,
  not_squarefree,
  not_totally_real,
  unsupported_degree,
  field_mismatch,
  division_by_zero,
  zero_element,
  non_integral,
  dependent_basis,
  invalid_argument,
  geometric_failure,
  precision_exhausted,
  io,
};

const char* to_string(Errc code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace zlift
