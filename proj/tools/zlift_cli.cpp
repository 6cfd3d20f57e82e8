// zlift: certify, scan, verify and plot from the command line.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zlift/certificate.hpp"
#include "zlift/ingest.hpp"
#include "zlift/plot.hpp"
#include "zlift/scan.hpp"

namespace {

// exit codes
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kUsage = 2;
constexpr int kRejected = 3;
constexpr int kIoError = 4;
constexpr int kInternal = 5;

int exit_code(zlift::Errc e) {
  switch (e) {
    case zlift::Errc::io: return kIoError;
    case zlift::Errc::geometric_failure:
    case zlift::Errc::precision_exhausted: return kInternal;
    default: return kInputError;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw zlift::Error(zlift::Errc::io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw zlift::Error(zlift::Errc::io, "cannot write " + path);
}

void emit(const zlift::ObstructionCertificate& c, const std::string& out) {
  const std::string line = zlift::serialize(c) + "\n";
  if (out.empty()) std::cout << line;
  else write_file(out, line);
  std::cerr << c.verdict;
  if (c.verdict == "obstruction") std::cerr << ": N(alpha) = " << c.norm_alpha;
  std::cerr << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates against universal Z-forms over totally real fields"};
  app.require_subcommand(1);

  std::string poly, basis_file, out, input, cert_file;
  long p = 0, q = 0, D = 0;
  unsigned workers = 1;

  auto* cubic = app.add_subcommand("certify-cubic", "certify a totally real cubic field");
  cubic->add_option("--poly", poly, "defining polynomial, e.g. x^3-3x^2+1")->required();
  cubic->add_option("--basis", basis_file, "file with an integral basis (polynomials in x)");
  cubic->add_option("-o,--out", out, "write the certificate here instead of stdout");

  auto* biquad = app.add_subcommand("certify-biquadratic", "certify Q(sqrt p, sqrt q)");
  biquad->add_option("-p", p, "squarefree p > 1")->required();
  biquad->add_option("-q", q, "squarefree q > 1")->required();
  biquad->add_option("-o,--out", out, "write the certificate here instead of stdout");

  auto* quad = app.add_subcommand("certify-quadratic", "certify Q(sqrt D)");
  quad->add_option("-D", D, "squarefree D >= 2")->required();
  quad->add_option("-o,--out", out, "write the certificate here instead of stdout");

  auto* scan = app.add_subcommand("scan", "certify every cubic field of a list file");
  scan->add_option("--input", input, "field list (poly | basis | disc per line)")->required();
  scan->add_option("--out", out, "output directory")->required();
  scan->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "re-check certificates (one JSON object per line)");
  verify->add_option("file", cert_file)->required();

  auto* plot = app.add_subcommand("plot", "draw the plane H of a cubic field as SVG");
  plot->add_option("--poly", poly)->required();
  plot->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (*cubic) {
      const auto f = zlift::parse_polynomial(poly);
      std::optional<zlift::MatrixQ> basis;
      if (!basis_file.empty()) basis = zlift::parse_basis(read_file(basis_file), f.degree());
      emit(zlift::make_certificate(zlift::certify_cubic(f, basis)), out);
    } else if (*biquad) {
      emit(zlift::certify_biquadratic(p, q), out);
    } else if (*quad) {
      emit(zlift::make_certificate(zlift::certify_quadratic(D)), out);
    } else if (*scan) {
      const auto list = zlift::ingest_field_list(input);
      for (const auto& e : list.errors)
        std::cerr << input << ":" << e.line << ": " << e.message << "\n";
      const auto s = zlift::scan(list.entries, workers, std::filesystem::path(out));
      std::cout << "fields " << s.records.size() << ", obstructions " << s.obstructions
                << ", exceptional " << s.exceptional << ", errors " << s.errors
                << ", unparsed lines " << list.errors.size() << "\n";
      for (const auto& r : s.records)
        if (r.status == "error") std::cerr << "line " << r.line << " (" << r.polynomial << "): " << r.error << "\n";
    } else if (*verify) {
      std::istringstream lines(read_file(cert_file));
      std::string line;
      bool all_valid = true;
      std::size_t n = 0;
      while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ++n;
        const auto r = zlift::verify_certificate(zlift::deserialize(line));
        std::cout << cert_file << ":" << n << ": " << r.summary() << "\n";
        all_valid = all_valid && r.valid;
      }
      if (n == 0) throw zlift::Error(zlift::Errc::syntax, "no certificate in " + cert_file);
      return all_valid ? kOk : kRejected;
    } else if (*plot) {
      write_file(out, zlift::plot_plane_h(zlift::NumberField::create(zlift::parse_polynomial(poly))));
    }
  } catch (const zlift::Error& e) {
    std::cerr << "error (" << zlift::to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
