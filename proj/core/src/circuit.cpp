#include "fabric/circuit.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace fabric {
namespace {

struct TagInfo {
  OpTag tag;
  std::string_view mnemonic;
  std::string_view report;
};

constexpr std::array<TagInfo, kNumOpTags> kTags = {{
    {OpTag::And, "and", "AndOp"},
    {OpTag::Nand, "nand", "NandOp"},
    {OpTag::Nor, "nor", "NorOp"},
    {OpTag::Or, "or", "OrOp"},
    {OpTag::Xor, "xor", "XorOp"},
    {OpTag::XNor, "xnor", "XNorOp"},
    {OpTag::Not, "not", "NotOp"},
    {OpTag::Packed, "packed", "PackedOp"},
    {OpTag::Lut2, "lut2", "Lut2Op"},
    {OpTag::Lut3, "lut3", "Lut3Op"},
    {OpTag::LutLinComb, "lut_lincomb", "LutLinCombOp"},
    {OpTag::MultiLutLinComb, "multi_lut_lincomb", "MultiLutLinCombOp"},
    {OpTag::Add, "add", "AddOp"},
    {OpTag::AddPlain, "add_plain", "AddPlainOp"},
    {OpTag::Sub, "sub", "SubOp"},
    {OpTag::SubPlain, "sub_plain", "SubPlainOp"},
    {OpTag::Mul, "mul", "MulOp"},
    {OpTag::MulPlain, "mul_plain", "MulPlainOp"},
    {OpTag::Rotate, "rotate", "RotateOp"},
    {OpTag::Extract, "extract", "ExtractOp"},
    {OpTag::Negate, "negate", "NegateOp"},
    {OpTag::Relinearize, "relinearize", "RelinearizeOp"},
    {OpTag::Rescale, "rescale", "RescaleOp"},
}};

constexpr std::array<OpTag, kNumOpTags> kAllTags = [] {
  std::array<OpTag, kNumOpTags> out{};
  for (std::size_t i = 0; i < kNumOpTags; ++i) out[i] = kTags[i].tag;
  return out;
}();

const TagInfo& info(OpTag tag) { return kTags[static_cast<std::size_t>(tag)]; }

constexpr unsigned kMaxLinCombArity = 6;

// Expected operand count, or nullopt when it depends on attributes.
std::optional<std::size_t> fixed_arity(OpTag tag) {
  switch (tag) {
    case OpTag::Not:
    case OpTag::Packed:
    case OpTag::Negate:
    case OpTag::Relinearize:
    case OpTag::Rescale:
    case OpTag::Rotate:
    case OpTag::Extract:
      return 1;
    case OpTag::Lut3:
      return 3;
    case OpTag::LutLinComb:
    case OpTag::MultiLutLinComb:
      return std::nullopt;
    default:
      return 2;
  }
}

// Operand type expected at `position`.
ValueType operand_type(OpTag tag, std::size_t position) {
  if (dialect_of(tag) == Dialect::Boolean) return ValueType::LweCiphertext;
  switch (tag) {
    case OpTag::AddPlain:
    case OpTag::SubPlain:
    case OpTag::MulPlain:
      return position == 1 ? ValueType::CkksPlaintext : ValueType::CkksCiphertext;
    default:
      return ValueType::CkksCiphertext;
  }
}

bool mask_fits(std::uint64_t mask, std::size_t arity) {
  if (arity >= kMaxLinCombArity) return true;  // 2^64 entries: every uint64 fits
  return mask < (std::uint64_t{1} << (std::uint64_t{1} << arity));
}

std::string value_ref(const CircuitGraph& g, ValueId id) {
  if (id.index < g.values.size() && !g.values[id.index].name.empty())
    return "%" + g.values[id.index].name;
  return "%" + std::to_string(id.index);
}

}  // namespace

std::span<const OpTag> all_op_tags() { return kAllTags; }

Dialect dialect_of(OpTag tag) {
  return static_cast<std::size_t>(tag) <= static_cast<std::size_t>(OpTag::MultiLutLinComb)
             ? Dialect::Boolean
             : Dialect::Ckks;
}

std::string_view mnemonic(OpTag tag) { return info(tag).mnemonic; }
std::string_view report_name(OpTag tag) { return info(tag).report; }

std::optional<OpTag> tag_from_mnemonic(std::string_view name) {
  for (const auto& t : kTags)
    if (t.mnemonic == name) return t.tag;
  return std::nullopt;
}

std::string_view type_token(ValueType type) {
  switch (type) {
    case ValueType::LweCiphertext:
      return "!lwe";
    case ValueType::CkksCiphertext:
      return "!ct";
    case ValueType::CkksPlaintext:
      return "!pt";
  }
  return "!lwe";
}

bool is_binary_gate(OpTag tag) {
  switch (tag) {
    case OpTag::And:
    case OpTag::Nand:
    case OpTag::Nor:
    case OpTag::Or:
    case OpTag::Xor:
    case OpTag::XNor:
      return true;
    default:
      return false;
  }
}

std::uint8_t gate_truth_table(OpTag tag) {
  switch (tag) {
    case OpTag::And:
      return 0b1000;
    case OpTag::Nand:
      return 0b0111;
    case OpTag::Nor:
      return 0b0001;
    case OpTag::Or:
      return 0b1110;
    case OpTag::Xor:
      return 0b0110;
    case OpTag::XNor:
      return 0b1001;
    default:
      throw Error("gate_truth_table: not a two-input gate: " + std::string(mnemonic(tag)));
  }
}

ValueType result_type(OpTag tag) {
  return dialect_of(tag) == Dialect::Boolean ? ValueType::LweCiphertext
                                             : ValueType::CkksCiphertext;
}

OpKind make_kind(OpTag tag) {
  OpKind k;
  k.tag = tag;
  return k;
}

OpKind make_lut(OpTag tag, std::uint64_t lut) {
  OpKind k = make_kind(tag);
  k.lut = lut;
  return k;
}

OpKind make_lincomb(std::vector<std::int64_t> coeffs, std::uint64_t lut) {
  OpKind k = make_kind(OpTag::LutLinComb);
  k.coeffs = std::move(coeffs);
  k.lut = lut;
  return k;
}

OpKind make_multi_lincomb(std::vector<std::int64_t> coeffs, std::vector<std::uint64_t> luts) {
  OpKind k = make_kind(OpTag::MultiLutLinComb);
  k.coeffs = std::move(coeffs);
  k.luts = std::move(luts);
  return k;
}

OpKind make_rotate(std::int64_t offset) {
  OpKind k = make_kind(OpTag::Rotate);
  k.offset = offset;
  return k;
}

OpKind make_extract(std::uint64_t index) {
  OpKind k = make_kind(OpTag::Extract);
  k.index = index;
  return k;
}

// ---------------------------------------------------------------------------
// GraphBuilder

GraphBuilder::GraphBuilder(std::string name) { graph_.name = std::move(name); }

ValueId GraphBuilder::new_value(ValueType type, std::string name) {
  ValueId id{static_cast<std::uint32_t>(graph_.values.size())};
  if (name.empty()) name = std::to_string(id.index);
  graph_.values.push_back({std::move(name), type});
  return id;
}

ValueId GraphBuilder::add_argument(ValueType type, std::string name) {
  ValueId id = new_value(type, std::move(name));
  graph_.arguments.push_back(id);
  return id;
}

ValueId GraphBuilder::add_op(OpKind kind, std::vector<ValueId> operands, std::string result_name) {
  ValueId id = new_value(result_type(kind.tag), std::move(result_name));
  graph_.operators.push_back({std::move(kind), std::move(operands), {id}, std::nullopt});
  return id;
}

std::vector<ValueId> GraphBuilder::add_multi_op(OpKind kind, std::vector<ValueId> operands,
                                                std::size_t result_count) {
  std::vector<ValueId> results;
  for (std::size_t i = 0; i < result_count; ++i)
    results.push_back(new_value(result_type(kind.tag), {}));
  graph_.operators.push_back({std::move(kind), std::move(operands), results, std::nullopt});
  return results;
}

void GraphBuilder::set_returns(std::vector<ValueId> returns) { graph_.returns = std::move(returns); }

// ---------------------------------------------------------------------------
// Structure

Dependencies dependencies(const CircuitGraph& graph) {
  Dependencies deps;
  const std::size_t n = graph.operators.size();
  deps.op_preds.resize(n);
  deps.op_succs.resize(n);
  deps.arg_succs.resize(graph.arguments.size());
  deps.producer.assign(graph.values.size(), std::nullopt);

  std::vector<std::optional<std::size_t>> arg_pos(graph.values.size());
  for (std::size_t i = 0; i < graph.arguments.size(); ++i)
    if (graph.arguments[i].index < graph.values.size()) arg_pos[graph.arguments[i].index] = i;
  for (OpId op = 0; op < n; ++op)
    for (ValueId r : graph.operators[op].results)
      if (r.index < graph.values.size() && !deps.producer[r.index]) deps.producer[r.index] = op;

  for (OpId op = 0; op < n; ++op) {
    for (ValueId v : graph.operators[op].operands) {
      if (v.index >= graph.values.size()) continue;
      if (auto p = deps.producer[v.index]) {
        deps.op_preds[op].push_back(*p);
        deps.op_succs[*p].push_back(op);
      } else if (auto a = arg_pos[v.index]) {
        deps.arg_succs[*a].push_back(op);
      }
    }
  }
  auto tidy = [](std::vector<OpId>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  };
  for (auto& xs : deps.op_preds) tidy(xs);
  for (auto& xs : deps.op_succs) tidy(xs);
  for (auto& xs : deps.arg_succs) tidy(xs);
  return deps;
}

std::vector<OpId> sink_ops(const CircuitGraph& graph) {
  const Dependencies deps = dependencies(graph);
  std::vector<OpId> sinks;
  for (OpId op = 0; op < graph.operators.size(); ++op)
    if (deps.op_succs[op].empty()) sinks.push_back(op);
  return sinks;
}

namespace {

// Kahn's algorithm with the ready set ordered by op id. Returns a partial
// order when the graph has a cycle.
std::vector<OpId> kahn(const Dependencies& deps) {
  const std::size_t n = deps.op_preds.size();
  std::vector<std::size_t> indegree(n);
  for (std::size_t i = 0; i < n; ++i) indegree[i] = deps.op_preds[i].size();
  std::priority_queue<OpId, std::vector<OpId>, std::greater<>> ready;
  for (OpId i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push(i);
  std::vector<OpId> order;
  order.reserve(n);
  while (!ready.empty()) {
    OpId op = ready.top();
    ready.pop();
    order.push_back(op);
    for (OpId s : deps.op_succs[op])
      if (--indegree[s] == 0) ready.push(s);
  }
  return order;
}

}  // namespace

std::vector<Violation> validate(const CircuitGraph& graph) {
  std::vector<Violation> out;
  const std::size_t nvalues = graph.values.size();
  std::vector<unsigned> defs(nvalues, 0);

  auto define = [&](ValueId v, std::optional<OpId> op) {
    if (v.index >= nvalues) {
      out.push_back({ViolationKind::UseBeforeDef,
                     "result " + value_ref(graph, v) + " has no value entry", op, v, {}});
      return;
    }
    if (++defs[v.index] == 2)
      out.push_back({ViolationKind::DoubleDef, "double-def " + value_ref(graph, v), op, v, {}});
  };
  for (ValueId a : graph.arguments) define(a, std::nullopt);
  for (OpId op = 0; op < graph.operators.size(); ++op)
    for (ValueId r : graph.operators[op].results) define(r, op);

  auto defined = [&](ValueId v) { return v.index < nvalues && defs[v.index] > 0; };

  for (OpId op = 0; op < graph.operators.size(); ++op) {
    const Operator& o = graph.operators[op];
    const OpTag tag = o.kind.tag;
    const std::string name = std::string(mnemonic(tag));

    std::size_t expected_arity = 0;
    if (auto fixed = fixed_arity(tag)) {
      expected_arity = *fixed;
    } else {
      expected_arity = o.kind.coeffs.size();
      if (expected_arity == 0 || expected_arity > kMaxLinCombArity)
        out.push_back({ViolationKind::ArityMismatch,
                       name + " needs 1.." + std::to_string(kMaxLinCombArity) + " coefficients, got " +
                           std::to_string(expected_arity),
                       op, {}, {}});
    }
    if (o.operands.size() != expected_arity)
      out.push_back({ViolationKind::ArityMismatch,
                     "arity mismatch: " + name + " expects " + std::to_string(expected_arity) +
                         " operands, got " + std::to_string(o.operands.size()),
                     op, {}, {}});

    for (std::size_t i = 0; i < o.operands.size(); ++i) {
      ValueId v = o.operands[i];
      if (!defined(v)) {
        out.push_back({ViolationKind::UseBeforeDef, "use-before-def " + value_ref(graph, v), op, v, i});
        continue;
      }
      ValueType want = operand_type(tag, i);
      if (graph.values[v.index].type != want)
        out.push_back({ViolationKind::TypeMismatch,
                       "type mismatch: operand " + std::to_string(i) + " of " + name + " must be " +
                           std::string(type_token(want)) + ", got " +
                           std::string(type_token(graph.values[v.index].type)),
                       op, v, i});
    }

    const std::size_t expected_results = tag == OpTag::MultiLutLinComb ? o.kind.luts.size() : 1;
    if (tag == OpTag::MultiLutLinComb && o.kind.luts.empty())
      out.push_back({ViolationKind::ResultCount, "multi_lut_lincomb needs at least one LUT", op, {}, {}});
    if (o.results.size() != expected_results)
      out.push_back({ViolationKind::ResultCount,
                     name + " defines " + std::to_string(o.results.size()) + " results, expected " +
                         std::to_string(expected_results),
                     op, {}, {}});
    for (ValueId r : o.results)
      if (r.index < nvalues && graph.values[r.index].type != result_type(tag))
        out.push_back({ViolationKind::TypeMismatch,
                       "type mismatch: " + name + " produces " +
                           std::string(type_token(result_type(tag))) + ", result declared " +
                           std::string(type_token(graph.values[r.index].type)),
                       op, r, {}});

    auto mask_violation = [&] {
      out.push_back({ViolationKind::LutMaskOutOfRange, "LUT mask out of range", op, {}, {}});
    };
    switch (tag) {
      case OpTag::Lut2:
        if (o.kind.lut >= 16) mask_violation();
        break;
      case OpTag::Lut3:
        if (o.kind.lut >= 256) mask_violation();
        break;
      case OpTag::LutLinComb:
        if (!mask_fits(o.kind.lut, o.kind.coeffs.size())) mask_violation();
        break;
      case OpTag::MultiLutLinComb:
        for (std::uint64_t m : o.kind.luts)
          if (!mask_fits(m, o.kind.coeffs.size())) {
            mask_violation();
            break;
          }
        break;
      default:
        break;
    }
  }

  for (ValueId r : graph.returns)
    if (!defined(r))
      out.push_back({ViolationKind::UseBeforeDef, "use-before-def " + value_ref(graph, r), {}, r, {}});

  std::unordered_map<std::string, ValueId> names;
  auto check_name = [&](ValueId v) {
    if (v.index >= nvalues || graph.values[v.index].name.empty()) return;
    auto [it, inserted] = names.emplace(graph.values[v.index].name, v);
    if (!inserted && it->second != v)
      out.push_back({ViolationKind::DuplicateName, "duplicate value name " + value_ref(graph, v), {}, v, {}});
  };
  for (ValueId a : graph.arguments) check_name(a);
  for (const Operator& o : graph.operators)
    for (ValueId r : o.results) check_name(r);

  const Dependencies deps = dependencies(graph);
  const std::vector<OpId> order = kahn(deps);
  if (order.size() != graph.operators.size()) {
    std::vector<bool> placed(graph.operators.size(), false);
    for (OpId op : order) placed[op] = true;
    for (OpId op = 0; op < graph.operators.size(); ++op)
      if (!placed[op]) {
        std::string what = graph.operators[op].results.empty()
                               ? "op " + std::to_string(op)
                               : value_ref(graph, graph.operators[op].results.front());
        out.push_back({ViolationKind::Cycle, "cycle through " + what, op, {}, {}});
      }
  }
  return out;
}

std::vector<OpId> topological_order(const CircuitGraph& graph) {
  std::vector<OpId> order = kahn(dependencies(graph));
  if (order.size() != graph.operators.size()) throw Error("graph contains a cycle");
  return order;
}

// ---------------------------------------------------------------------------
// Plaintext evaluation

namespace {

bool as_bit(const PlainValue& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b;
  throw Error("evaluate: expected a bit, got a slot vector");
}

const std::vector<double>& as_slots(const PlainValue& v) {
  if (const auto* s = std::get_if<std::vector<double>>(&v)) return *s;
  throw Error("evaluate: expected a slot vector, got a bit");
}

std::uint64_t lincomb_index(const OpKind& kind, const std::vector<bool>& bits) {
  std::int64_t index = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) index += kind.coeffs[i] * (bits[i] ? 1 : 0);
  const std::int64_t size = std::int64_t{1} << bits.size();
  if (index < 0 || index >= size)
    throw Error("evaluate: LutLinComb index " + std::to_string(index) + " outside LUT range [0, " +
                std::to_string(size) + ")");
  return static_cast<std::uint64_t>(index);
}

std::vector<double> elementwise(const std::vector<double>& a, const std::vector<double>& b,
                                const std::function<double(double, double)>& f) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f(a[i], b[i]);
  return out;
}

}  // namespace

ValueMap evaluate(const CircuitGraph& graph, const std::map<ValueId, PlainValue>& inputs) {
  ValueMap env(graph.values.size(), PlainValue{false});
  std::vector<bool> is_arg(graph.values.size(), false);
  std::optional<std::size_t> slots;

  for (ValueId a : graph.arguments) {
    is_arg[a.index] = true;
    auto it = inputs.find(a);
    if (it == inputs.end()) throw Error("evaluate: missing input for " + value_ref(graph, a));
    const bool want_bit = graph.type_of(a) == ValueType::LweCiphertext;
    if (want_bit != std::holds_alternative<bool>(it->second))
      throw Error("evaluate: input for " + value_ref(graph, a) + " has the wrong kind");
    if (!want_bit) {
      const std::size_t n = std::get<std::vector<double>>(it->second).size();
      if (n == 0 || !std::has_single_bit(n))
        throw Error("evaluate: slot count must be a positive power of two");
      if (slots && *slots != n) throw Error("evaluate: inputs disagree on slot count");
      slots = n;
    }
    env[a.index] = it->second;
  }
  for (const auto& [id, value] : inputs)
    if (id.index >= is_arg.size() || !is_arg[id.index])
      throw Error("evaluate: input given for non-argument " + value_ref(graph, id));

  for (OpId op : topological_order(graph)) {
    const Operator& o = graph.operators[op];
    const OpKind& k = o.kind;
    auto operand = [&](std::size_t i) -> const PlainValue& { return env[o.operands[i].index]; };
    auto set = [&](PlainValue v) { env[o.results.front().index] = std::move(v); };

    if (dialect_of(k.tag) == Dialect::Boolean) {
      std::vector<bool> bits;
      for (std::size_t i = 0; i < o.operands.size(); ++i) bits.push_back(as_bit(operand(i)));
      auto lut_bit = [&](std::uint64_t mask, std::uint64_t index) { return ((mask >> index) & 1U) != 0; };
      if (is_binary_gate(k.tag)) {
        set(lut_bit(gate_truth_table(k.tag), (bits[1] ? 2U : 0U) | (bits[0] ? 1U : 0U)));
        continue;
      }
      switch (k.tag) {
        case OpTag::Not:
          set(!bits[0]);
          break;
        case OpTag::Packed:
          set(bits[0]);
          break;
        case OpTag::Lut2:
        case OpTag::Lut3: {
          std::uint64_t index = 0;
          for (std::size_t i = 0; i < bits.size(); ++i) index |= (bits[i] ? 1U : 0U) << i;
          set(lut_bit(k.lut, index));
          break;
        }
        case OpTag::LutLinComb:
          set(lut_bit(k.lut, lincomb_index(k, bits)));
          break;
        case OpTag::MultiLutLinComb: {
          const std::uint64_t index = lincomb_index(k, bits);
          for (std::size_t r = 0; r < o.results.size(); ++r)
            env[o.results[r].index] = lut_bit(k.luts[r], index);
          break;
        }
        default:
          break;
      }
      continue;
    }

    const std::vector<double>& a = as_slots(operand(0));
    switch (k.tag) {
      case OpTag::Add:
      case OpTag::AddPlain:
        set(elementwise(a, as_slots(operand(1)), std::plus<>{}));
        break;
      case OpTag::Sub:
      case OpTag::SubPlain:
        set(elementwise(a, as_slots(operand(1)), std::minus<>{}));
        break;
      case OpTag::Mul:
      case OpTag::MulPlain:
        set(elementwise(a, as_slots(operand(1)), std::multiplies<>{}));
        break;
      case OpTag::Rotate: {
        const auto n = static_cast<std::int64_t>(a.size());
        std::vector<double> out(a.size());
        for (std::int64_t i = 0; i < n; ++i) out[i] = a[((i + k.offset) % n + n) % n];
        set(std::move(out));
        break;
      }
      case OpTag::Extract:
        if (k.index >= a.size())
          throw Error("evaluate: extract index " + std::to_string(k.index) + " outside " +
                      std::to_string(a.size()) + " slots");
        set(std::vector<double>(a.size(), a[k.index]));
        break;
      case OpTag::Negate: {
        std::vector<double> out(a);
        for (double& x : out) x = -x;
        set(std::move(out));
        break;
      }
      case OpTag::Relinearize:
      case OpTag::Rescale:
        set(a);
        break;
      default:
        break;
    }
  }
  return env;
}

std::vector<PlainValue> evaluate_returns(const CircuitGraph& graph, const std::vector<PlainValue>& args) {
  if (args.size() != graph.arguments.size())
    throw Error("evaluate: expected " + std::to_string(graph.arguments.size()) + " inputs, got " +
                std::to_string(args.size()));
  std::map<ValueId, PlainValue> inputs;
  for (std::size_t i = 0; i < args.size(); ++i) inputs.emplace(graph.arguments[i], args[i]);
  const ValueMap env = evaluate(graph, inputs);
  std::vector<PlainValue> out;
  out.reserve(graph.returns.size());
  for (ValueId r : graph.returns) out.push_back(env[r.index]);
  return out;
}

std::uint64_t evaluate_bits(const CircuitGraph& graph, std::uint64_t arg_bits) {
  std::vector<PlainValue> args;
  for (std::size_t i = 0; i < graph.arguments.size(); ++i) args.emplace_back(((arg_bits >> i) & 1U) != 0);
  const std::vector<PlainValue> rets = evaluate_returns(graph, args);
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < rets.size(); ++i)
    if (as_bit(rets[i])) out |= std::uint64_t{1} << i;
  return out;
}

// ---------------------------------------------------------------------------

bool isomorphic(const CircuitGraph& a, const CircuitGraph& b) {
  if (a.arguments.size() != b.arguments.size() || a.operators.size() != b.operators.size() ||
      a.returns.size() != b.returns.size())
    return false;

  // Canonical slot of each value: definition order.
  auto numbering = [](const CircuitGraph& g) {
    std::vector<std::int64_t> slot(g.values.size(), -1);
    std::int64_t next = 0;
    for (ValueId v : g.arguments) slot.at(v.index) = next++;
    for (const Operator& o : g.operators)
      for (ValueId r : o.results) slot.at(r.index) = next++;
    return slot;
  };
  const auto sa = numbering(a);
  const auto sb = numbering(b);
  auto same = [&](ValueId x, ValueId y) {
    return x.index < sa.size() && y.index < sb.size() && sa[x.index] >= 0 && sa[x.index] == sb[y.index];
  };
  auto same_list = [&](const std::vector<ValueId>& xs, const std::vector<ValueId>& ys) {
    if (xs.size() != ys.size()) return false;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (!same(xs[i], ys[i])) return false;
    return true;
  };

  for (std::size_t i = 0; i < a.arguments.size(); ++i)
    if (a.type_of(a.arguments[i]) != b.type_of(b.arguments[i])) return false;
  for (std::size_t i = 0; i < a.operators.size(); ++i) {
    const Operator& x = a.operators[i];
    const Operator& y = b.operators[i];
    if (!(x.kind == y.kind) || x.section != y.section || !same_list(x.operands, y.operands) ||
        x.results.size() != y.results.size())
      return false;
    for (std::size_t r = 0; r < x.results.size(); ++r)
      if (a.type_of(x.results[r]) != b.type_of(y.results[r])) return false;
  }
  return same_list(a.returns, b.returns);
}

CircuitGraph compact(const CircuitGraph& graph) {
  CircuitGraph out;
  out.name = graph.name;
  std::vector<std::optional<ValueId>> remap(graph.values.size());
  auto fresh = [&](ValueId old) {
    ValueId id{static_cast<std::uint32_t>(out.values.size())};
    out.values.push_back(graph.values.at(old.index));
    remap[old.index] = id;
    return id;
  };
  for (ValueId a : graph.arguments) out.arguments.push_back(fresh(a));
  for (const Operator& o : graph.operators) {
    Operator copy = o;
    for (ValueId& r : copy.results) r = fresh(r);
    out.operators.push_back(std::move(copy));
  }
  auto lookup = [&](ValueId v) {
    if (v.index < remap.size() && remap[v.index]) return *remap[v.index];
    throw Error("compact: reference to undefined value %" + std::to_string(v.index));
  };
  for (Operator& o : out.operators)
    for (ValueId& v : o.operands) v = lookup(v);
  for (ValueId r : graph.returns) out.returns.push_back(lookup(r));
  return out;
}

}  // namespace fabric
