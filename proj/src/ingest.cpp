#include "zlift/ingest.hpp"

#include <algorithm>
#include <sstream>

namespace zlift {

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out(1);
  for (char c : s) {
    if (seps.find(c) != std::string::npos) out.emplace_back();
    else out.back() += c;
  }
  return out;
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return trim(hash == std::string::npos ? line : line.substr(0, hash));
}

}  // namespace

MatrixQ parse_basis(const std::string& text, int degree) {
  std::vector<PolynomialQ> elems;
  for (const auto& part : split(text, ",\n")) {
    const std::string t = trim(part);
    if (t.empty()) continue;
    PolynomialQ p = parse_rational_polynomial(t);
    if (p.degree() >= degree)
      throw Error(Errc::syntax, "basis element '" + t + "' has degree >= field degree");
    elems.push_back(std::move(p));
  }
  if (static_cast<int>(elems.size()) != degree)
    throw Error(Errc::syntax, "expected " + std::to_string(degree) + " basis elements, got " +
                                  std::to_string(elems.size()));
  MatrixQ m = MatrixQ::Zero(degree, degree);
  for (int i = 0; i < degree; ++i)
    for (int j = 0; j <= elems[static_cast<std::size_t>(i)].degree(); ++j)
      m(i, j) = elems[static_cast<std::size_t>(i)].coefficient(j);
  return m;
}

FieldListEntry parse_field_list_line(const std::string& line, std::size_t line_no) {
  const auto fields = split(strip_comment(line), "|");
  if (fields.size() > 3) throw Error(Errc::syntax, "too many '|' separated fields");
  FieldListEntry e;
  e.line = line_no;
  e.polynomial_text = trim(fields[0]);
  e.polynomial = parse_polynomial(e.polynomial_text);
  if (fields.size() > 1) {
    const std::string b = trim(fields[1]);
    if (!b.empty() && b != "-") e.integral_basis = parse_basis(b, e.polynomial.degree());
  }
  if (fields.size() > 2) {
    const std::string d = trim(fields[2]);
    if (!d.empty()) {
      const Rational q = parse_rational(d);
      if (!is_integer(q)) throw Error(Errc::syntax, "discriminant must be an integer");
      e.reference_discriminant = boost::multiprecision::numerator(q);
    }
  }
  return e;
}

FieldListReader::FieldListReader(const std::filesystem::path& path) : in_(path) {
  if (!in_) throw Error(Errc::io, "cannot open " + path.string());
}

std::optional<std::variant<FieldListEntry, IngestError>> FieldListReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (strip_comment(line).empty()) continue;
    try {
      return parse_field_list_line(line, line_no_);
    } catch (const Error& e) {
      return IngestError{line_no_, e.what()};
    }
  }
  return std::nullopt;
}

IngestResult ingest_field_list(const std::filesystem::path& path) {
  FieldListReader reader(path);
  IngestResult out;
  while (auto item = reader.next()) {
    if (auto* e = std::get_if<FieldListEntry>(&*item)) out.entries.push_back(std::move(*e));
    else out.errors.push_back(std::get<IngestError>(*item));
  }
  return out;
}

}  // namespace zlift
