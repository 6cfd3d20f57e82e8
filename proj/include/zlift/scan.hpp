#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zlift/certificate.hpp"
#include "zlift/ingest.hpp"

namespace zlift {

struct ScanRecord {
  std::size_t index = 0;  // 1-based position in the input
  std::size_t line = 0;
  std::string polynomial;
  std::string status;  // "obstruction", "exceptional" or "error"
  std::string error;
  std::optional<ObstructionCertificate> certificate;
  std::optional<CubicDiagnostics> diagnostics;
  std::string file;  // certificate file name, relative to the output dir
};

struct ScanSummary {
  std::size_t obstructions = 0;
  std::size_t exceptional = 0;
  std::size_t errors = 0;
  std::vector<ScanRecord> records;
};

/// Certifies every entry on `workers` threads. When `out_dir` is given,
/// writes cert-<index>.jsonl per certified field plus summary.json. Output is
/// independent of the worker count.
ScanSummary scan(std::span<const FieldListEntry> entries, unsigned workers,
                 const std::optional<std::filesystem::path>& out_dir = std::nullopt);

std::string summary_json(const ScanSummary& summary);

}  // namespace zlift
