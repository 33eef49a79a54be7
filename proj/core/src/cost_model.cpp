#include "fabric/cost_model.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fabric {

std::uint64_t FabricConfig::usable_fcs_per_chip() const {
  return static_cast<std::uint64_t>(std::floor(static_cast<double>(fcs_per_chip) * occupancy));
}

Profile paper_default_profile() {
  Profile p;
  for (OpTag tag : all_op_tags()) {
    if (dialect_of(tag) == Dialect::Ckks) {
      p.costs[tag].fcs = 512;
    } else {
      p.costs[tag].fcs = tag == OpTag::Not ? 16 : 256;
    }
  }
  return p;
}

void check_fabric(const FabricConfig& f) {
  if (f.fcs_per_chip < 1) throw Error("fcs_per_chip must be a positive integer");
  if (!(f.occupancy > 0.0 && f.occupancy <= 1.0)) throw Error("occupancy must be in (0,1]");
  if (f.chips_per_board < 1) throw Error("chips_per_board must be a positive integer");
  if (!(f.unit_time_per_gate > 0.0) || !std::isfinite(f.unit_time_per_gate))
    throw Error("unit_time_per_gate must be positive");
  if (f.slots < 1 || !std::has_single_bit(f.slots)) throw Error("slots must be a positive power of two");
  if (f.usable_fcs_per_chip() < 1) throw Error("usable FCs per chip (fcs_per_chip * occupancy) must be at least 1");
}

namespace {

using nlohmann::json;

std::uint64_t positive_int(const json& v, std::string_view key) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
    throw Error(std::string(key) + " must be a positive integer");
  return v.get<std::uint64_t>();
}

std::uint64_t non_negative_int(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw Error(where + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

}  // namespace

Profile load_config_text(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed config JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("config must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "fabric" && key != "costs") throw Error("unknown config section '" + key + "'");

  Profile p;
  if (doc.contains("fabric")) {
    const json& f = doc["fabric"];
    if (!f.is_object()) throw Error("'fabric' must be an object");
    for (const auto& [key, v] : f.items()) {
      if (key == "fcs_per_chip") {
        p.fabric.fcs_per_chip = positive_int(v, key);
      } else if (key == "chips_per_board") {
        p.fabric.chips_per_board = positive_int(v, key);
      } else if (key == "slots") {
        p.fabric.slots = positive_int(v, key);
      } else if (key == "occupancy") {
        if (!v.is_number()) throw Error("occupancy must be in (0,1]");
        p.fabric.occupancy = v.get<double>();
      } else if (key == "unit_time_per_gate") {
        if (!v.is_number()) throw Error("unit_time_per_gate must be positive");
        p.fabric.unit_time_per_gate = v.get<double>();
      } else {
        throw Error("unknown fabric field '" + key + "'");
      }
    }
  }
  check_fabric(p.fabric);

  if (!doc.contains("costs") || !doc["costs"].is_object()) throw Error("config needs a 'costs' object");
  const json& costs = doc["costs"];
  for (const auto& [key, entry] : costs.items()) {
    auto tag = tag_from_mnemonic(key);
    if (!tag) throw Error("unknown op tag '" + key + "' in costs");
    if (!entry.is_object()) throw Error("cost for op '" + key + "' must be an object");
    ResourceCost& c = p.costs[*tag];
    for (const auto& [field, v] : entry.items()) {
      const std::string where = "costs." + key + "." + field;
      if (field == "fcs") {
        c.fcs = non_negative_int(v, where);
      } else if (field == "hbm_bytes") {
        c.hbm_bytes = non_negative_int(v, where);
      } else if (field == "ddr_bytes") {
        c.ddr_bytes = non_negative_int(v, where);
      } else if (field == "tiles") {
        c.tiles = non_negative_int(v, where);
      } else {
        throw Error("unknown cost field '" + field + "' for op '" + key + "'");
      }
    }
  }
  for (OpTag tag : all_op_tags())
    if (!costs.contains(std::string(mnemonic(tag))))
      throw Error("missing cost for op '" + std::string(mnemonic(tag)) + "'");
  return p;
}

Profile load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_config_text(buf.str());
}

Profile load_profile(const std::string& name_or_path) {
  if (name_or_path == kPaperDefaultProfile) return paper_default_profile();
  return load_config_file(name_or_path);
}

std::uint64_t chips_for(std::uint64_t total_fcs, const FabricConfig& config) {
  const std::uint64_t usable = config.usable_fcs_per_chip();
  const std::uint64_t chips = (total_fcs + usable - 1) / usable;
  return chips == 0 ? 1 : chips;
}

std::uint64_t boards_for(std::uint64_t chips, const FabricConfig& config) {
  const std::uint64_t boards = (chips + config.chips_per_board - 1) / config.chips_per_board;
  return boards == 0 ? 1 : boards;
}

ResourceReport estimate(const CircuitGraph& graph, const FabricConfig& config, const CostTable& costs) {
  ResourceReport r;
  r.function_name = graph.name;
  for (const Operator& op : graph.operators) {
    const ResourceCost& c = costs[op.kind.tag];
    r.per_kind_fcs[static_cast<std::size_t>(op.kind.tag)] += c.fcs;
    r.total_fcs += c.fcs;
    r.total_hbm_bytes += c.hbm_bytes;
    r.total_ddr_bytes += c.ddr_bytes;
    r.total_tiles += c.tiles;
  }
  r.op_count = graph.operators.size();
  r.chips = chips_for(r.total_fcs, config);
  r.boards = boards_for(r.chips, config);
  return r;
}

}  // namespace fabric
