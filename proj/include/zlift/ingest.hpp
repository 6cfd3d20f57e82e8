#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zlift/linalg.hpp"
#include "zlift/polynomial.hpp"

namespace zlift {

/// One field of a list file. Line layout (fields separated by '|'):
///
///   <polynomial> [| <basis> [| <discriminant>]]
///
/// where <basis> is a comma-separated list of rational polynomials in x
/// (e.g. "1, x, 1/2x^2+1/2x") or empty / "-". '#' starts a comment.
struct FieldListEntry {
  std::size_t line = 0;
  std::string polynomial_text;
  IntegerPolynomial polynomial;
  std::optional<MatrixQ> integral_basis;
  std::optional<Integer> reference_discriminant;
};

struct IngestError {
  std::size_t line = 0;
  std::string message;
};

FieldListEntry parse_field_list_line(const std::string& line, std::size_t line_no);

/// Streams entries; malformed lines come back as IngestError and reading
/// continues.
class FieldListReader {
 public:
  /// Throws Errc::io when the file cannot be opened.
  explicit FieldListReader(const std::filesystem::path& path);

  std::optional<std::variant<FieldListEntry, IngestError>> next();

 private:
  std::ifstream in_;
  std::size_t line_no_ = 0;
};

struct IngestResult {
  std::vector<FieldListEntry> entries;
  std::vector<IngestError> errors;
};

IngestResult ingest_field_list(const std::filesystem::path& path);

/// Parses a basis written as comma- or newline-separated rational
/// polynomials in x.
MatrixQ parse_basis(const std::string& text, int degree);

}  // namespace zlift
