#include "fabric/report.hpp"

#include <sstream>

#include "json.hpp"

namespace fabric {
namespace {

// Shortest round-trippable decimal, "14" rather than "14.000000".
std::string number(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

void row(std::ostringstream& os, const std::string& label, const std::string& value) {
  os << label << "  " << value << "\n";
}

}  // namespace

std::string emit_text(const AnalysisReport& report) {
  std::ostringstream os;
  if (const auto& r = report.resources) {
    os << "Function @" << r->function_name << " (" << r->op_count << " ops)\n";
    for (OpTag tag : all_op_tags())
      if (r->fcs(tag) != 0) row(os, std::string(report_name(tag)) + " (FCs)", std::to_string(r->fcs(tag)));
    row(os, "Total FCs", std::to_string(r->total_fcs));
    if (r->total_tiles != 0) row(os, "Total Tiles", std::to_string(r->total_tiles));
    if (r->total_hbm_bytes != 0) row(os, "Total HBM bytes", std::to_string(r->total_hbm_bytes));
    if (r->total_ddr_bytes != 0) row(os, "Total DDR bytes", std::to_string(r->total_ddr_bytes));
    row(os, "Total Mx2 Chips", std::to_string(r->chips));
    row(os, "Total Mx8 Boards", std::to_string(r->boards));
  }
  for (const CriticalPathResult& cp : report.critical_paths)
    os << "Critical Path (" << method_name(cp.method) << "): depth " << cp.depth << ", latency "
       << number(cp.latency_unit_time) << "\n";
  if (const auto& t = report.throughput)
    os << "Throughput @ batch " << t->batch << ": " << t->figures.outputs_per_batch_window << "\n";
  return os.str();
}

std::string emit_json(const AnalysisReport& report) {
  using nlohmann::ordered_json;
  ordered_json doc;

  const RunManifest& m = report.manifest;
  ordered_json manifest;
  manifest["input"] = m.input;
  manifest["passes"] = m.passes;
  manifest["config"] = m.config;
  manifest["format"] = m.format == ReportFormat::Json ? "json" : "text";
  manifest["exit_status"] = m.exit_status;
  doc["manifest"] = std::move(manifest);

  if (const auto& r = report.resources) {
    ordered_json res;
    res["function"] = r->function_name;
    res["op_count"] = r->op_count;
    ordered_json per_kind = ordered_json::object();
    for (OpTag tag : all_op_tags()) per_kind[std::string(mnemonic(tag))] = r->fcs(tag);
    res["per_kind_fcs"] = std::move(per_kind);
    res["total_fcs"] = r->total_fcs;
    res["total_hbm_bytes"] = r->total_hbm_bytes;
    res["total_ddr_bytes"] = r->total_ddr_bytes;
    res["total_tiles"] = r->total_tiles;
    res["chips"] = r->chips;
    res["boards"] = r->boards;
    doc["resources"] = std::move(res);
  } else {
    doc["resources"] = nullptr;
  }

  ordered_json cps = ordered_json::array();
  for (const CriticalPathResult& cp : report.critical_paths) {
    ordered_json entry;
    entry["method"] = method_name(cp.method);
    entry["depth"] = cp.depth;
    entry["latency"] = cp.latency_unit_time;
    entry["ops"] = cp.ops;
    cps.push_back(std::move(entry));
  }
  doc["critical_path"] = std::move(cps);

  if (const auto& t = report.throughput) {
    ordered_json tp;
    tp["batch"] = t->batch;
    tp["method"] = method_name(t->method);
    tp["depth"] = t->depth;
    tp["latency"] = t->figures.latency_unit_time;
    tp["outputs"] = t->figures.outputs_per_batch_window;
    doc["throughput"] = std::move(tp);
  } else {
    doc["throughput"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

std::string emit_report(const AnalysisReport& report, ReportFormat format) {
  return format == ReportFormat::Json ? emit_json(report) : emit_text(report);
}

}  // namespace fabric
