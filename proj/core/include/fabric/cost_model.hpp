#pragma once

// Hardware model of the systolic fabric and the cumulative resource
// estimation pass: per-op costs summed over the graph, then packed into
// chips (at an occupancy limit) and boards.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "fabric/circuit.hpp"

namespace fabric {

struct ResourceCost {
  std::uint64_t fcs = 0;
  std::uint64_t hbm_bytes = 0;
  std::uint64_t ddr_bytes = 0;
  std::uint64_t tiles = 0;

  bool operator==(const ResourceCost&) const = default;
};

class CostTable {
 public:
  const ResourceCost& operator[](OpTag tag) const { return costs_[static_cast<std::size_t>(tag)]; }
  ResourceCost& operator[](OpTag tag) { return costs_[static_cast<std::size_t>(tag)]; }

  bool operator==(const CostTable&) const = default;

 private:
  std::array<ResourceCost, kNumOpTags> costs_{};
};

struct FabricConfig {
  std::uint64_t fcs_per_chip = 4096;
  double occupancy = 0.5;
  std::uint64_t chips_per_board = 4;
  double unit_time_per_gate = 1.0;
  std::uint64_t slots = 8;

  // floor(fcs_per_chip * occupancy)
  std::uint64_t usable_fcs_per_chip() const;
};

struct Profile {
  FabricConfig fabric;
  CostTable costs;
};

inline constexpr std::string_view kPaperDefaultProfile = "paper-default";

// 256 FCs per bootstrapped Boolean op, 16 for Not, 512 per CKKS op.
Profile paper_default_profile();

// Throws Error for malformed JSON, unknown or missing op tags, and
// out-of-range fabric values.
Profile load_config_text(std::string_view json_text);
Profile load_config_file(const std::string& path);
// `paper-default` or a path to a JSON config.
Profile load_profile(const std::string& name_or_path);

// Throws Error when a fabric value is out of range.
void check_fabric(const FabricConfig& fabric);

struct ResourceReport {
  std::string function_name;
  std::array<std::uint64_t, kNumOpTags> per_kind_fcs{};
  std::uint64_t total_fcs = 0;
  std::uint64_t total_hbm_bytes = 0;
  std::uint64_t total_ddr_bytes = 0;
  std::uint64_t total_tiles = 0;
  std::uint64_t chips = 1;
  std::uint64_t boards = 1;
  std::uint64_t op_count = 0;

  std::uint64_t fcs(OpTag tag) const { return per_kind_fcs[static_cast<std::size_t>(tag)]; }
};

ResourceReport estimate(const CircuitGraph& graph, const FabricConfig& config, const CostTable& costs);

// Chip and board counts for a given FC total (minimum one of each).
std::uint64_t chips_for(std::uint64_t total_fcs, const FabricConfig& config);
std::uint64_t boards_for(std::uint64_t chips, const FabricConfig& config);

}  // namespace fabric
