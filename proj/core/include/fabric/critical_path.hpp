#pragma once

// Critical-path estimation over the operator dependency graph.
//
// Two estimators are deliberately literal, quirks included:
//   approximate_cp   topological order minus its last node, minus sources
//                    (arguments) and sinks.
//   paper_exact_cp   longest of the unweighted *shortest* source->sink paths.
// longest_path_cp is the true longest source->sink chain, used as the
// reference and for the throughput figures.
//
// Depth always counts compute ops only (arguments are not counted).

#include <cstdint>
#include <string_view>
#include <vector>

#include "fabric/circuit.hpp"
#include "fabric/cost_model.hpp"

namespace fabric {

enum class CpMethod : std::uint8_t { Approximate, PaperExact, LongestPath };

std::string_view method_name(CpMethod method);  // "approximate", "paper-exact", "longest"

struct CriticalPathResult {
  CpMethod method = CpMethod::LongestPath;
  std::vector<OpId> ops;
  std::size_t depth = 0;
  double latency_unit_time = 0.0;

  bool operator==(const CriticalPathResult&) const = default;
};

std::vector<OpId> topological_sort(const CircuitGraph& graph);

CriticalPathResult approximate_cp(const CircuitGraph& graph, double unit_time_per_gate = 1.0);
CriticalPathResult paper_exact_cp(const CircuitGraph& graph, double unit_time_per_gate = 1.0);
CriticalPathResult longest_path_cp(const CircuitGraph& graph, double unit_time_per_gate = 1.0);

CriticalPathResult critical_path(const CircuitGraph& graph, CpMethod method,
                                 double unit_time_per_gate = 1.0);

struct Throughput {
  double latency_unit_time = 0.0;
  std::uint64_t outputs_per_batch_window = 0;
};

// Pipelined throughput: one output per stage once the pipe is full, so a
// batch yields floor(batch / depth) outputs per latency window. Throws
// Error when depth is 0.
Throughput throughput(std::size_t depth, std::uint64_t batch, const FabricConfig& config);

}  // namespace fabric
