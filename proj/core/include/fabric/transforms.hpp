#pragma once

// Graph-to-graph passes over Boolean circuits. Every pass returns a fresh
// graph and leaves its input untouched.

#include <cstdint>
#include <utility>
#include <vector>

#include "fabric/circuit.hpp"
#include "fabric/cost_model.hpp"

namespace fabric {

// Rewrites each two-input named gate as LutLinComb(coeffs = [1, 2]) whose
// LUT is the gate truth table indexed by 2*b + a, and Not as
// LutLinComb(coeffs = [1], lut = 0b01). Result values are reused, so
// consumers and returns are untouched.
CircuitGraph lower_gates(const CircuitGraph& graph);

// Dead-op elimination, Not(Not(x)) -> x, and fusion of a single-use
// two-input gate into its consuming two-input gate as one Lut2/Lut3,
// repeated to a fixed point.
CircuitGraph canonicalize(const CircuitGraph& graph);

struct SectionPlan {
  std::uint32_t section_count = 1;
  std::vector<std::uint32_t> assignment;  // indexed by op id
  std::uint64_t capacity_fcs = 0;
};

// Greedy packing in topological order: an op joins the current section
// while the section's FC sum stays within capacity, else opens a new one.
// Throws Error naming the op when a single op exceeds the capacity.
std::pair<CircuitGraph, SectionPlan> sectionize(const CircuitGraph& graph, std::uint64_t capacity_fcs,
                                                const CostTable& costs);

}  // namespace fabric
