#include "fabric/fixtures.hpp"

#include <array>
#include <bit>
#include <string>

namespace fabric::fixtures {
namespace {

using Bit = std::optional<ValueId>;  // absent = constant zero

struct BitAdder {
  GraphBuilder& b;

  std::pair<Bit, Bit> add3(Bit x, Bit y, Bit z, bool need_carry) {
    std::vector<ValueId> present;
    for (const Bit& v : {x, y, z})
      if (v) present.push_back(*v);
    switch (present.size()) {
      case 0:
        return {std::nullopt, std::nullopt};
      case 1:
        return {present[0], std::nullopt};
      case 2: {
        const ValueId sum = b.add_op(make_kind(OpTag::Xor), {present[0], present[1]});
        if (!need_carry) return {sum, std::nullopt};
        return {sum, b.add_op(make_kind(OpTag::And), {present[0], present[1]})};
      }
      default: {
        const ValueId t = b.add_op(make_kind(OpTag::Xor), {present[0], present[1]});
        const ValueId sum = b.add_op(make_kind(OpTag::Xor), {t, present[2]});
        if (!need_carry) return {sum, std::nullopt};
        const ValueId c1 = b.add_op(make_kind(OpTag::And), {present[0], present[1]});
        const ValueId c2 = b.add_op(make_kind(OpTag::And), {t, present[2]});
        return {sum, b.add_op(make_kind(OpTag::Or), {c1, c2})};
      }
    }
  }

  // Ripple addition; result has max(|x|, |y|) + 1 bits, or exactly `limit`
  // bits (mod 2^limit) when given.
  std::vector<Bit> add(const std::vector<Bit>& x, const std::vector<Bit>& y,
                       std::optional<std::size_t> limit = std::nullopt) {
    const std::size_t width = limit.value_or(std::max(x.size(), y.size()) + 1);
    std::vector<Bit> out;
    Bit carry;
    for (std::size_t i = 0; i < width; ++i) {
      auto [s, c] = add3(i < x.size() ? x[i] : Bit{}, i < y.size() ? y[i] : Bit{}, carry, i + 1 < width);
      out.push_back(s);
      carry = c;
    }
    return out;
  }
};

std::vector<ValueId> bit_args(GraphBuilder& b, std::string_view prefix, std::size_t n) {
  std::vector<ValueId> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(b.add_argument(ValueType::LweCiphertext, std::string(prefix) + std::to_string(i)));
  return out;
}

// Materialises absent bits as xor(v, v).
std::vector<ValueId> materialise(GraphBuilder& b, const std::vector<Bit>& bits, ValueId any) {
  std::optional<ValueId> zero;
  std::vector<ValueId> out;
  for (const Bit& bit : bits) {
    if (bit) {
      out.push_back(*bit);
      continue;
    }
    if (!zero) zero = b.add_op(make_kind(OpTag::Xor), {any, any}, "zero");
    out.push_back(*zero);
  }
  return out;
}

void require_size(std::size_t n, std::string_view what) {
  if (n < 1) throw Error(std::string(what) + ": size must be at least 1");
}

}  // namespace

CircuitGraph and_gate() {
  GraphBuilder b("and_gate");
  std::vector<ValueId> args = bit_args(b, "x", 8);
  std::vector<ValueId> outs;
  for (std::size_t i = 0; i < 4; ++i)
    outs.push_back(b.add_op(make_kind(OpTag::And), {args[2 * i], args[2 * i + 1]}, "y" + std::to_string(i)));
  b.set_returns(outs);
  return b.take();
}

CircuitGraph half_adder() {
  GraphBuilder b("half_adder");
  const ValueId a = b.add_argument(ValueType::LweCiphertext, "a");
  const ValueId c = b.add_argument(ValueType::LweCiphertext, "b");
  const ValueId sum = b.add_op(make_kind(OpTag::Xor), {a, c}, "sum");
  const ValueId carry = b.add_op(make_kind(OpTag::And), {a, c}, "carry");
  b.set_returns({sum, carry});
  return b.take();
}

CircuitGraph full_adder() {
  GraphBuilder b("full_adder");
  const ValueId a = b.add_argument(ValueType::LweCiphertext, "a");
  const ValueId c = b.add_argument(ValueType::LweCiphertext, "b");
  const ValueId cin = b.add_argument(ValueType::LweCiphertext, "cin");
  const ValueId t = b.add_op(make_kind(OpTag::Xor), {a, c}, "t");
  const ValueId sum = b.add_op(make_kind(OpTag::Xor), {t, cin}, "sum");
  const ValueId c1 = b.add_op(make_kind(OpTag::And), {a, c}, "c1");
  const ValueId c2 = b.add_op(make_kind(OpTag::And), {t, cin}, "c2");
  const ValueId cout = b.add_op(make_kind(OpTag::Or), {c1, c2}, "cout");
  b.set_returns({sum, cout});
  return b.take();
}

CircuitGraph ripple_adder(std::size_t n) {
  require_size(n, "ripple-adder");
  GraphBuilder b("ripple_adder_" + std::to_string(n));
  const std::vector<ValueId> a = bit_args(b, "a", n);
  const std::vector<ValueId> c = bit_args(b, "b", n);
  BitAdder adder{b};
  const std::vector<Bit> sum = adder.add({a.begin(), a.end()}, {c.begin(), c.end()});
  b.set_returns(materialise(b, sum, a.front()));
  return b.take();
}

CircuitGraph array_mult(std::size_t n) {
  require_size(n, "array-mult");
  GraphBuilder b("array_mult_" + std::to_string(n));
  const std::vector<ValueId> a = bit_args(b, "a", n);
  const std::vector<ValueId> c = bit_args(b, "b", n);
  BitAdder adder{b};

  std::vector<Bit> acc(2 * n);
  for (std::size_t j = 0; j < n; ++j) acc[j] = b.add_op(make_kind(OpTag::And), {a[j], c[0]});
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<Bit> row(2 * n);
    for (std::size_t j = 0; j < n; ++j) row[i + j] = b.add_op(make_kind(OpTag::And), {a[j], c[i]});
    acc = adder.add(acc, row, 2 * n);
  }
  b.set_returns(materialise(b, acc, a.front()));
  return b.take();
}

CircuitGraph lut_canonicalize() {
  GraphBuilder b("lut_canonicalize");
  const ValueId a = b.add_argument(ValueType::LweCiphertext, "a");
  const ValueId c = b.add_argument(ValueType::LweCiphertext, "b");
  const ValueId d = b.add_argument(ValueType::LweCiphertext, "c");
  const ValueId t = b.add_op(make_lut(OpTag::Lut2, 0b0110), {a, c}, "t");
  const ValueId r = b.add_op(make_lut(OpTag::Lut3, 0b10010110), {t, c, d}, "r");
  b.set_returns({r});
  return b.take();
}

CircuitGraph table3_mult8() {
  constexpr std::size_t kAnd = 44, kNand = 44, kXNor = 18, kXor = 35;
  GraphBuilder b("table3_mult8");
  const std::vector<ValueId> a = bit_args(b, "a", 8);
  const std::vector<ValueId> c = bit_args(b, "b", 8);

  std::vector<ValueId> results;
  for (std::size_t i = 0; i < kAnd; ++i)
    results.push_back(b.add_op(make_kind(OpTag::And), {a[i % 8], c[(i / 8 + i) % 8]}));
  const std::size_t total = kAnd + kNand + kXNor + kXor;
  for (std::size_t k = kAnd; k < total; ++k) {
    const OpTag tag = k < kAnd + kNand ? OpTag::Nand : k < kAnd + kNand + kXNor ? OpTag::XNor : OpTag::Xor;
    results.push_back(b.add_op(make_kind(tag), {results[k - kAnd], results[k - kAnd + 1]}));
  }
  // Results consumed above are [0, total - kAnd]; the rest are outputs.
  b.set_returns({results.begin() + static_cast<std::ptrdiff_t>(total - kAnd + 1), results.end()});
  return b.take();
}

CircuitGraph ckks_dot_product(std::size_t n) {
  require_size(n, "ckks-dot-product");
  GraphBuilder b("ckks_dot_product_" + std::to_string(n));
  const ValueId x = b.add_argument(ValueType::CkksCiphertext, "x");
  const ValueId w = b.add_argument(ValueType::CkksPlaintext, "w");
  std::optional<ValueId> acc;
  for (std::size_t i = 0; i < n; ++i) {
    // extract -> x[i] everywhere; * w -> x[i] * w[j]; rotate by i -> slot 0 = x[i] * w[i]
    const ValueId e = b.add_op(make_extract(i), {x});
    ValueId term = b.add_op(make_kind(OpTag::MulPlain), {e, w});
    if (i > 0) term = b.add_op(make_rotate(static_cast<std::int64_t>(i)), {term});
    acc = acc ? b.add_op(make_kind(OpTag::Add), {*acc, term}) : term;
  }
  const ValueId scaled = b.add_op(make_kind(OpTag::Rescale), {*acc});
  b.set_returns({b.add_op(make_extract(0), {scaled}, "dot")});
  return b.take();
}

CircuitGraph ckks_box_blur(std::size_t k) {
  require_size(k, "ckks-box-blur");
  GraphBuilder b("ckks_box_blur_" + std::to_string(k));
  const ValueId img = b.add_argument(ValueType::CkksCiphertext, "img");
  const auto width = static_cast<std::int64_t>(k);
  ValueId acc = img;
  for (std::int64_t dy = -1; dy <= 1; ++dy)
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      if (dy == 0 && dx == 0) continue;
      const ValueId shifted = b.add_op(make_rotate(dy * width + dx), {img});
      acc = b.add_op(make_kind(OpTag::Add), {acc, shifted});
    }
  b.set_returns({acc});
  return b.take();
}

CircuitGraph ckks_simple_sum(std::size_t n) {
  require_size(n, "ckks-simple-sum");
  if (!std::has_single_bit(n)) throw Error("ckks-simple-sum: size must be a power of two");
  GraphBuilder b("ckks_simple_sum_" + std::to_string(n));
  ValueId acc = b.add_argument(ValueType::CkksCiphertext, "x");
  for (std::size_t step = n / 2; step >= 1; step /= 2) {
    const ValueId shifted = b.add_op(make_rotate(static_cast<std::int64_t>(step)), {acc});
    acc = b.add_op(make_kind(OpTag::Add), {acc, shifted});
  }
  b.set_returns({acc});
  return b.take();
}

namespace {
constexpr std::array<std::string_view, 10> kNames = {
    "and-gate",     "half-adder",  "full-adder",       "ripple-adder",  "array-mult",
    "lut-canonicalize", "table3-mult8", "ckks-dot-product", "ckks-box-blur", "ckks-simple-sum",
};
}  // namespace

std::span<const std::string_view> names() { return kNames; }

CircuitGraph generate(std::string_view name, std::optional<std::size_t> size) {
  if (name == "and-gate") return and_gate();
  if (name == "half-adder") return half_adder();
  if (name == "full-adder") return full_adder();
  if (name == "lut-canonicalize") return lut_canonicalize();
  if (name == "table3-mult8") return table3_mult8();
  if (name == "ripple-adder") return ripple_adder(size.value_or(8));
  if (name == "array-mult") return array_mult(size.value_or(8));
  if (name == "ckks-dot-product") return ckks_dot_product(size.value_or(8));
  if (name == "ckks-box-blur") return ckks_box_blur(size.value_or(4));
  if (name == "ckks-simple-sum") return ckks_simple_sum(size.value_or(8));
  throw Error("unknown fixture '" + std::string(name) + "'");
}

}  // namespace fabric::fixtures
