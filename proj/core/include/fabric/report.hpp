#pragma once

// Report emission in the Table-3 style text layout and as JSON.

#include <optional>
#include <string>
#include <vector>

#include "fabric/cost_model.hpp"
#include "fabric/critical_path.hpp"

namespace fabric {

enum class ReportFormat : std::uint8_t { Text, Json };

struct RunManifest {
  std::string input;
  std::vector<std::string> passes;
  std::string config;
  ReportFormat format = ReportFormat::Text;
  int exit_status = 0;
};

struct ThroughputReport {
  std::uint64_t batch = 0;
  CpMethod method = CpMethod::LongestPath;
  std::size_t depth = 0;
  Throughput figures;
};

struct AnalysisReport {
  RunManifest manifest;
  std::optional<ResourceReport> resources;
  std::vector<CriticalPathResult> critical_paths;
  std::optional<ThroughputReport> throughput;
};

// Zero-FC op rows are omitted; totals always present when resources are.
std::string emit_text(const AnalysisReport& report);
// Stable key order; every op tag appears under per_kind_fcs.
std::string emit_json(const AnalysisReport& report);

std::string emit_report(const AnalysisReport& report, ReportFormat format);

}  // namespace fabric
