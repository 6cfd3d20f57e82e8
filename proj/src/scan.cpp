#include "zlift/scan.hpp"

#include <atomic>
#include <fstream>
#include <thread>

#include <json.hpp>

namespace zlift {

namespace {

ScanRecord process(const FieldListEntry& e, std::size_t index) {
  ScanRecord rec;
  rec.index = index;
  rec.line = e.line;
  rec.polynomial = e.polynomial_text;
  try {
    if (e.polynomial.degree() != 3)
      throw Error(Errc::unsupported_degree, "scan certifies cubic fields only");
    FieldPtr k = NumberField::create(e.polynomial, e.integral_basis);
    if (e.reference_discriminant && k->discriminant() != *e.reference_discriminant)
      throw Error(Errc::field_mismatch, "discriminant " + to_string(k->discriminant()) +
                                            " differs from reference " +
                                            to_string(*e.reference_discriminant));
    CubicVerdict v = certify_cubic(k);
    ObstructionCertificate cert = make_certificate(v);
    const VerificationResult check = verify_certificate(cert);
    if (!check.valid) throw Error(Errc::geometric_failure, "certificate rejected: " + check.summary());
    rec.status = cert.verdict;
    rec.certificate = std::move(cert);
    rec.diagnostics = std::move(v.trail);
    rec.file = "cert-" + std::to_string(index) + ".jsonl";
  } catch (const std::exception& ex) {
    rec.status = "error";
    rec.error = ex.what();
  }
  return rec;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(Errc::io, "write failed for " + path.string());
}

}  // namespace

ScanSummary scan(std::span<const FieldListEntry> entries, unsigned workers,
                 const std::optional<std::filesystem::path>& out_dir) {
  ScanSummary summary;
  summary.records.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++)
      summary.records[i] = process(entries[i], i + 1);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(entries.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (const auto& r : summary.records) {
    if (r.status == "obstruction") ++summary.obstructions;
    else if (r.status == "exceptional") ++summary.exceptional;
    else ++summary.errors;
  }
  if (out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*out_dir, ec);
    if (ec) throw Error(Errc::io, "cannot create " + out_dir->string() + ": " + ec.message());
    for (const auto& r : summary.records)
      if (r.certificate) write_file(*out_dir / r.file, serialize(*r.certificate) + "\n");
    write_file(*out_dir / "summary.json", summary_json(summary) + "\n");
  }
  return summary;
}

std::string summary_json(const ScanSummary& s) {
  nlohmann::ordered_json j;
  j["total"] = s.records.size();
  j["obstructions"] = s.obstructions;
  j["exceptional"] = s.exceptional;
  j["errors"] = s.errors;
  auto recs = nlohmann::ordered_json::array();
  for (const auto& r : s.records) {
    nlohmann::ordered_json o;
    o["index"] = r.index;
    o["line"] = r.line;
    o["polynomial"] = r.polynomial;
    o["status"] = r.status;
    if (!r.file.empty()) o["certificate"] = r.file;
    if (!r.error.empty()) o["error"] = r.error;
    recs.push_back(o);
  }
  j["records"] = recs;
  return j.dump(2);
}

}  // namespace zlift
