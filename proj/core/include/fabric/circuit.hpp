#pragma once

// Operator-circuit representation shared by every pass: an SSA DAG of
// Boolean (CGGI) and CKKS dialect operators over typed values, plus a
// plaintext evaluator used as the semantics oracle for transforms.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fabric {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ValueId {
  std::uint32_t index = 0;
  auto operator<=>(const ValueId&) const = default;
};

enum class ValueType : std::uint8_t { LweCiphertext, CkksCiphertext, CkksPlaintext };

enum class Dialect : std::uint8_t { Boolean, Ckks };

enum class OpTag : std::uint8_t {
  // Boolean dialect.
  And,
  Nand,
  Nor,
  Or,
  Xor,
  XNor,
  Not,
  Packed,
  Lut2,
  Lut3,
  LutLinComb,
  MultiLutLinComb,
  // CKKS dialect.
  Add,
  AddPlain,
  Sub,
  SubPlain,
  Mul,
  MulPlain,
  Rotate,
  Extract,
  Negate,
  Relinearize,
  Rescale,
};

inline constexpr std::size_t kNumOpTags = 23;

// All tags in declaration order.
std::span<const OpTag> all_op_tags();

Dialect dialect_of(OpTag tag);
// Lower-case mnemonic: "and", "lut_lincomb", "add_plain", ...
std::string_view mnemonic(OpTag tag);
// Report label stem: "AndOp", "LutLinCombOp", ...
std::string_view report_name(OpTag tag);
std::optional<OpTag> tag_from_mnemonic(std::string_view name);
std::string_view type_token(ValueType type);  // "!lwe", "!ct", "!pt"

// Two-input named gates And/Nand/Nor/Or/Xor/XNor.
bool is_binary_gate(OpTag tag);
// Truth table of a two-input gate indexed by (b << 1) | a.
std::uint8_t gate_truth_table(OpTag tag);

struct OpKind {
  OpTag tag = OpTag::And;
  std::uint64_t lut = 0;                 // Lut2, Lut3, LutLinComb
  std::vector<std::int64_t> coeffs;      // LutLinComb, MultiLutLinComb
  std::vector<std::uint64_t> luts;       // MultiLutLinComb
  std::int64_t offset = 0;               // Rotate
  std::uint64_t index = 0;               // Extract

  bool operator==(const OpKind&) const = default;
};

struct Operator {
  OpKind kind;
  std::vector<ValueId> operands;
  std::vector<ValueId> results;
  std::optional<std::uint32_t> section;

  bool operator==(const Operator&) const = default;
};

// Operator ids are positions in CircuitGraph::operators.
using OpId = std::uint32_t;

struct ValueInfo {
  std::string name;  // textual name without '%'
  ValueType type = ValueType::LweCiphertext;

  bool operator==(const ValueInfo&) const = default;
};

struct CircuitGraph {
  std::string name;
  std::vector<ValueInfo> values;  // indexed by ValueId::index
  std::vector<ValueId> arguments;
  std::vector<Operator> operators;
  std::vector<ValueId> returns;

  const ValueInfo& value(ValueId id) const { return values.at(id.index); }
  ValueType type_of(ValueId id) const { return value(id).type; }
};

// Incremental construction with automatic value naming. Values without an
// explicit name get their numeric index as name.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::string name);

  ValueId add_argument(ValueType type, std::string name = {});
  // Single-result op; result type follows the dialect typing rules.
  ValueId add_op(OpKind kind, std::vector<ValueId> operands, std::string result_name = {});
  std::vector<ValueId> add_multi_op(OpKind kind, std::vector<ValueId> operands,
                                    std::size_t result_count);
  void set_returns(std::vector<ValueId> returns);

  const CircuitGraph& graph() const { return graph_; }
  CircuitGraph take() { return std::move(graph_); }

 private:
  ValueId new_value(ValueType type, std::string name);

  CircuitGraph graph_;
};

OpKind make_kind(OpTag tag);
OpKind make_lut(OpTag tag, std::uint64_t lut);
OpKind make_lincomb(std::vector<std::int64_t> coeffs, std::uint64_t lut);
OpKind make_multi_lincomb(std::vector<std::int64_t> coeffs, std::vector<std::uint64_t> luts);
OpKind make_rotate(std::int64_t offset);
OpKind make_extract(std::uint64_t index);

// Result type an op of this tag produces.
ValueType result_type(OpTag tag);

enum class ViolationKind : std::uint8_t {
  UseBeforeDef,
  DoubleDef,
  ArityMismatch,
  TypeMismatch,
  LutMaskOutOfRange,
  ResultCount,
  Cycle,
  DuplicateName,
};

struct Violation {
  ViolationKind kind;
  std::string message;
  std::optional<OpId> op;
  std::optional<ValueId> value;
  std::optional<std::size_t> operand;  // operand position within `op`
};

// Empty result means the graph is well formed.
std::vector<Violation> validate(const CircuitGraph& graph);

// A bit for Boolean values, a slot vector for CKKS values.
using PlainValue = std::variant<bool, std::vector<double>>;

// Result of evaluate(): one entry per ValueId.
using ValueMap = std::vector<PlainValue>;

ValueMap evaluate(const CircuitGraph& graph, const std::map<ValueId, PlainValue>& inputs);

// Convenience form: inputs positional over graph.arguments, outputs
// positional over graph.returns.
std::vector<PlainValue> evaluate_returns(const CircuitGraph& graph,
                                         const std::vector<PlainValue>& args);

// Boolean-only helper: argument bits packed LSB-first, returns packed LSB-first.
std::uint64_t evaluate_bits(const CircuitGraph& graph, std::uint64_t arg_bits);

// Per-op dependency structure. Successor lists are sorted by op id and
// de-duplicated.
struct Dependencies {
  std::vector<std::vector<OpId>> op_preds;
  std::vector<std::vector<OpId>> op_succs;
  // Ops consuming each argument, indexed by argument position.
  std::vector<std::vector<OpId>> arg_succs;
  // Producer op of every value, absent for arguments.
  std::vector<std::optional<OpId>> producer;
};

Dependencies dependencies(const CircuitGraph& graph);

// Kahn's algorithm, ready set ordered by op id. Throws Error on a cycle.
std::vector<OpId> topological_order(const CircuitGraph& graph);

// Ops none of whose results is consumed by another op.
std::vector<OpId> sink_ops(const CircuitGraph& graph);

// Same arguments, operator order, kinds, attributes, sections, edges and
// returns. Value names and ValueId numbering are ignored.
bool isomorphic(const CircuitGraph& a, const CircuitGraph& b);

// Renumbers values as arguments first, then op results in op order, and
// drops values nobody defines.
CircuitGraph compact(const CircuitGraph& graph);

}  // namespace fabric
