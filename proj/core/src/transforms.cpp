#include "fabric/transforms.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace fabric {

CircuitGraph lower_gates(const CircuitGraph& graph) {
  CircuitGraph out = graph;
  for (Operator& op : out.operators) {
    if (is_binary_gate(op.kind.tag)) {
      op.kind = make_lincomb({1, 2}, gate_truth_table(op.kind.tag));
    } else if (op.kind.tag == OpTag::Not) {
      op.kind = make_lincomb({1}, 0b01);
    }
  }
  return out;
}

namespace {

bool eliminate_dead_ops(CircuitGraph& g) {
  std::vector<bool> live(g.values.size(), false);
  for (ValueId r : g.returns) live[r.index] = true;
  const std::vector<OpId> order = topological_order(g);
  std::vector<bool> keep(g.operators.size(), false);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Operator& op = g.operators[*it];
    if (std::none_of(op.results.begin(), op.results.end(), [&](ValueId r) { return live[r.index]; })) continue;
    keep[*it] = true;
    for (ValueId v : op.operands) live[v.index] = true;
  }
  if (std::all_of(keep.begin(), keep.end(), [](bool k) { return k; })) return false;
  std::vector<Operator> kept;
  for (std::size_t i = 0; i < g.operators.size(); ++i)
    if (keep[i]) kept.push_back(std::move(g.operators[i]));
  g.operators = std::move(kept);
  return true;
}

bool eliminate_double_negation(CircuitGraph& g) {
  const Dependencies deps = dependencies(g);
  std::unordered_map<std::uint32_t, ValueId> replace;
  for (const Operator& outer : g.operators) {
    if (outer.kind.tag != OpTag::Not) continue;
    const auto producer = deps.producer[outer.operands.front().index];
    if (!producer) continue;
    const Operator& inner = g.operators[*producer];
    if (inner.kind.tag != OpTag::Not) continue;
    replace[outer.results.front().index] = inner.operands.front();
  }
  if (replace.empty()) return false;

  auto resolve = [&](ValueId v) {
    for (auto it = replace.find(v.index); it != replace.end(); it = replace.find(v.index)) v = it->second;
    return v;
  };
  bool changed = false;
  auto rewire = [&](ValueId& v) {
    const ValueId r = resolve(v);
    if (r != v) {
      v = r;
      changed = true;
    }
  };
  for (Operator& op : g.operators)
    for (ValueId& v : op.operands) rewire(v);
  for (ValueId& v : g.returns) rewire(v);
  return changed;
}

bool fuse_gates(CircuitGraph& g) {
  const Dependencies deps = dependencies(g);
  std::vector<std::size_t> uses(g.values.size(), 0);
  for (const Operator& op : g.operators)
    for (ValueId v : op.operands) ++uses[v.index];
  for (ValueId r : g.returns) ++uses[r.index];

  std::vector<bool> removed(g.operators.size(), false);
  std::vector<bool> touched(g.operators.size(), false);
  bool changed = false;

  for (OpId outer_id = 0; outer_id < g.operators.size(); ++outer_id) {
    Operator& outer = g.operators[outer_id];
    if (touched[outer_id] || !is_binary_gate(outer.kind.tag)) continue;
    for (std::size_t pos = 0; pos < 2; ++pos) {
      const ValueId fed = outer.operands[pos];
      const auto inner_id = deps.producer[fed.index];
      if (!inner_id || *inner_id == outer_id || touched[*inner_id] || uses[fed.index] != 1) continue;
      const Operator& inner = g.operators[*inner_id];
      if (!is_binary_gate(inner.kind.tag)) continue;

      const ValueId other = outer.operands[1 - pos];
      std::vector<ValueId> inputs;
      for (ValueId v : {inner.operands[0], inner.operands[1], other})
        if (std::find(inputs.begin(), inputs.end(), v) == inputs.end()) inputs.push_back(v);
      while (inputs.size() < 2) inputs.push_back(inputs.back());

      // Composite truth table; a value's bit comes from its first slot.
      auto slot_bit = [&](std::uint64_t index, ValueId v) {
        const auto at = std::find(inputs.begin(), inputs.end(), v) - inputs.begin();
        return static_cast<unsigned>((index >> at) & 1U);
      };
      auto gate = [](OpTag tag, unsigned a, unsigned b) { return (gate_truth_table(tag) >> ((b << 1) | a)) & 1U; };
      std::uint64_t mask = 0;
      for (std::uint64_t index = 0; index < (std::uint64_t{1} << inputs.size()); ++index) {
        const unsigned fed_bit =
            gate(inner.kind.tag, slot_bit(index, inner.operands[0]), slot_bit(index, inner.operands[1]));
        const unsigned other_bit = slot_bit(index, other);
        const unsigned bit =
            pos == 0 ? gate(outer.kind.tag, fed_bit, other_bit) : gate(outer.kind.tag, other_bit, fed_bit);
        mask |= std::uint64_t{bit} << index;
      }

      outer.kind = make_lut(inputs.size() == 3 ? OpTag::Lut3 : OpTag::Lut2, mask);
      outer.operands = std::move(inputs);
      removed[*inner_id] = true;
      touched[*inner_id] = true;
      touched[outer_id] = true;
      changed = true;
      break;
    }
  }
  if (!changed) return false;
  std::vector<Operator> kept;
  for (std::size_t i = 0; i < g.operators.size(); ++i)
    if (!removed[i]) kept.push_back(std::move(g.operators[i]));
  g.operators = std::move(kept);
  return true;
}

}  // namespace

CircuitGraph canonicalize(const CircuitGraph& graph) {
  CircuitGraph g = graph;
  bool changed = true;
  while (changed) {
    changed = false;
    changed |= eliminate_dead_ops(g);
    changed |= eliminate_double_negation(g);
    changed |= fuse_gates(g);
  }
  return compact(g);
}

std::pair<CircuitGraph, SectionPlan> sectionize(const CircuitGraph& graph, std::uint64_t capacity_fcs,
                                                const CostTable& costs) {
  if (capacity_fcs == 0) throw Error("section capacity must be positive");
  for (const Operator& op : graph.operators) {
    const std::uint64_t fcs = costs[op.kind.tag].fcs;
    if (fcs > capacity_fcs) {
      const std::string name =
          op.results.empty() ? std::string(mnemonic(op.kind.tag)) : "%" + graph.value(op.results.front()).name;
      throw Error("operator exceeds section capacity: " + name + " (" + std::string(mnemonic(op.kind.tag)) +
                  ", " + std::to_string(fcs) + " FCs > " + std::to_string(capacity_fcs) + ")");
    }
  }

  SectionPlan plan;
  plan.capacity_fcs = capacity_fcs;
  plan.assignment.assign(graph.operators.size(), 0);
  std::uint32_t section = 0;
  std::uint64_t used = 0;
  for (OpId op : topological_order(graph)) {
    const std::uint64_t fcs = costs[graph.operators[op].kind.tag].fcs;
    if (used + fcs > capacity_fcs) {
      ++section;
      used = 0;
    }
    used += fcs;
    plan.assignment[op] = section;
  }
  plan.section_count = section + 1;

  CircuitGraph out = graph;
  for (OpId op = 0; op < out.operators.size(); ++op) out.operators[op].section = plan.assignment[op];
  return {std::move(out), std::move(plan)};
}

}  // namespace fabric
