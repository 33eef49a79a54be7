#include "driver.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "fabric/circuit.hpp"
#include "fabric/cost_model.hpp"
#include "fabric/critical_path.hpp"
#include "fabric/fixtures.hpp"
#include "fabric/ir_text.hpp"
#include "fabric/report.hpp"
#include "fabric/transforms.hpp"

namespace fabric::cli {
namespace {

struct Failure {
  int code;
  std::string message;
};

std::optional<std::string> dialect_mismatch(const CircuitGraph& g, Dialect want) {
  const char* flag = want == Dialect::Boolean ? "--cggi-estimate" : "--ckks-estimate";
  for (ValueId a : g.arguments) {
    const bool boolean = g.type_of(a) == ValueType::LweCiphertext;
    if (boolean != (want == Dialect::Boolean))
      return std::string(flag) + ": argument %" + g.value(a).name + " has type " +
             std::string(type_token(g.type_of(a))) + " from the other dialect";
  }
  for (const Operator& op : g.operators)
    if (dialect_of(op.kind.tag) != want)
      return std::string(flag) + ": graph contains " +
             (dialect_of(op.kind.tag) == Dialect::Boolean ? "scifr_bool." : "scifr_ckks.") +
             std::string(mnemonic(op.kind.tag));
  return std::nullopt;
}

void require_boolean(const CircuitGraph& g, const std::string& pass) {
  for (const Operator& op : g.operators)
    if (dialect_of(op.kind.tag) != Dialect::Boolean)
      throw Failure{kExitDiagnostics, "--" + pass + " requires a Boolean-dialect graph; found scifr_ckks." +
                                          std::string(mnemonic(op.kind.tag))};
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Estimate fabric resources, critical paths and throughput for .scifr circuits", "fabric-est"};

  std::string input;
  bool lower = false, canon = false, sectionize_flag = false;
  std::optional<std::uint64_t> capacity;
  bool cggi = false, ckks = false, cp_flag = false, throughput_flag = false, print_ir = false;
  std::string method = "all";
  std::optional<std::uint64_t> batch;
  std::optional<std::string> config_path;
  std::optional<std::string> profile;
  std::string emit = "text";
  std::optional<std::string> fixture;
  std::optional<std::size_t> size;
  std::optional<std::string> output;

  app.add_option("input", input, "Input .scifr file");
  auto* lower_opt = app.add_flag("--lower-gates", lower, "Lower named gates to LutLinComb");
  auto* canon_opt = app.add_flag("--canonicalize", canon, "Dead-op elimination, double negation, gate fusion");
  auto* sect_opt = app.add_flag("--sectionize", sectionize_flag, "Pack ops into capacity-bounded sections");
  app.add_option("--capacity", capacity, "Section capacity in FCs (default: usable FCs of one chip)")
      ->needs(sect_opt)
      ->check(CLI::PositiveNumber);
  app.add_flag("--cggi-estimate,--cggi-tigris-estimator", cggi, "Resource estimate for a Boolean circuit");
  app.add_flag("--ckks-estimate,--ckks-tigris-estimate", ckks, "Resource estimate for a CKKS circuit");
  auto* cp_opt = app.add_flag("--critical-path", cp_flag, "Critical-path analysis");
  app.add_option("--method", method, "approx|paper-exact|longest|all")
      ->needs(cp_opt)
      ->check(CLI::IsMember({"approx", "paper-exact", "longest", "all"}));
  auto* tp_opt = app.add_flag("--throughput", throughput_flag, "Pipelined throughput for a batch");
  app.add_option("--batch", batch, "Batch size")->needs(tp_opt)->check(CLI::PositiveNumber);
  auto* config_opt = app.add_option("--config", config_path, "JSON fabric/cost config");
  app.add_option("--profile", profile, "Built-in profile (paper-default)")
      ->excludes(config_opt)
      ->check(CLI::IsMember({std::string(kPaperDefaultProfile)}));
  app.add_option("--emit", emit, "Report format: text|json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--print-ir", print_ir, "Print the transformed IR before the report");
  auto* fixture_opt = app.add_option("--fixture", fixture, "Generate a named fixture instead of reading input");
  app.add_option("--size", size, "Fixture size parameter")->needs(fixture_opt)->check(CLI::PositiveNumber);
  app.add_option("-o,--output", output, "Fixture output path")->needs(fixture_opt);

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fabric-est: " << e.what() << "\n";
    return kExitUsage;
  }

  auto usage = [&](const std::string& message) {
    err << "fabric-est: " << message << "\n";
    return kExitUsage;
  };
  if (fixture && !input.empty()) return usage("give either an input file or --fixture, not both");
  if (!fixture && input.empty()) return usage("an input .scifr file is required");
  if (fixture && !output) return usage("--fixture requires -o PATH");
  if (throughput_flag && !batch) return usage("--throughput requires --batch N");

  AnalysisReport report;
  report.manifest.input = fixture ? "fixture:" + *fixture : input;
  report.manifest.config = config_path.value_or(std::string(kPaperDefaultProfile));
  report.manifest.format = emit == "json" ? ReportFormat::Json : ReportFormat::Text;

  try {
    Profile prof;
    try {
      prof = load_profile(report.manifest.config);
    } catch (const Error& e) {
      throw Failure{kExitDiagnostics, e.what()};
    }

    CircuitGraph graph;
    if (fixture) {
      try {
        graph = fixtures::generate(*fixture, size);
      } catch (const Error& e) {
        throw Failure{kExitUsage, e.what()};
      }
      std::ofstream file(*output, std::ios::binary);
      file << print(graph);
      if (!file) throw Failure{kExitDiagnostics, "cannot write '" + *output + "'"};
    } else {
      ParseResult parsed = parse_file(input);
      if (!parsed.ok()) {
        for (const Diagnostic& d : parsed.diagnostics()) err << format_diagnostic(input, d) << "\n";
        return kExitDiagnostics;
      }
      graph = std::move(parsed.graph());
    }

    // Transforms run in command-line order.
    for (const CLI::Option* opt : app.parse_order()) {
      if (opt == lower_opt) {
        require_boolean(graph, "lower-gates");
        graph = lower_gates(graph);
        report.manifest.passes.emplace_back("lower-gates");
      } else if (opt == canon_opt) {
        require_boolean(graph, "canonicalize");
        graph = canonicalize(graph);
        report.manifest.passes.emplace_back("canonicalize");
      } else if (opt == sect_opt) {
        const std::uint64_t cap = capacity.value_or(prof.fabric.usable_fcs_per_chip());
        try {
          graph = sectionize(graph, cap, prof.costs).first;
        } catch (const Error& e) {
          throw Failure{kExitDiagnostics, e.what()};
        }
        report.manifest.passes.push_back("sectionize(capacity=" + std::to_string(cap) + ")");
      }
    }

    if (print_ir) out << print(graph);

    if (cggi || ckks) {
      for (Dialect d : {Dialect::Boolean, Dialect::Ckks}) {
        if ((d == Dialect::Boolean && !cggi) || (d == Dialect::Ckks && !ckks)) continue;
        if (auto mismatch = dialect_mismatch(graph, d)) throw Failure{kExitDiagnostics, *mismatch};
      }
      report.resources = estimate(graph, prof.fabric, prof.costs);
      if (cggi) report.manifest.passes.emplace_back("cggi-estimate");
      if (ckks) report.manifest.passes.emplace_back("ckks-estimate");
    }

    std::vector<CpMethod> methods;
    if (cp_flag) {
      if (method == "approx" || method == "all") methods.push_back(CpMethod::Approximate);
      if (method == "paper-exact" || method == "all") methods.push_back(CpMethod::PaperExact);
      if (method == "longest" || method == "all") methods.push_back(CpMethod::LongestPath);
      for (CpMethod m : methods)
        report.critical_paths.push_back(critical_path(graph, m, prof.fabric.unit_time_per_gate));
      report.manifest.passes.push_back("critical-path(" + method + ")");
    }

    if (throughput_flag) {
      ThroughputReport t;
      t.batch = *batch;
      t.method = methods.size() == 1 ? methods.front() : CpMethod::LongestPath;
      auto it = std::find_if(report.critical_paths.begin(), report.critical_paths.end(),
                             [&](const CriticalPathResult& cp) { return cp.method == t.method; });
      t.depth = it != report.critical_paths.end() ? it->depth
                                                  : critical_path(graph, t.method, prof.fabric.unit_time_per_gate).depth;
      try {
        t.figures = fabric::throughput(t.depth, t.batch, prof.fabric);
      } catch (const Error& e) {
        throw Failure{kExitDiagnostics, e.what()};
      }
      report.throughput = t;
      report.manifest.passes.push_back("throughput(batch=" + std::to_string(t.batch) + ")");
    }

    if (report.resources || !report.critical_paths.empty() || report.throughput)
      out << emit_report(report, report.manifest.format);
  } catch (const Failure& f) {
    err << "fabric-est: " << f.message << "\n";
    return f.code;
  }
  return kExitOk;
}

}  // namespace fabric::cli
