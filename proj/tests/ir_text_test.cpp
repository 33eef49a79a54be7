#include <gtest/gtest.h>

#include <random>

#include "fabric/fixtures.hpp"
#include "fabric/ir_text.hpp"
#include "fabric/transforms.hpp"
#include "support/graphs.hpp"

namespace fabric {
namespace {

std::vector<std::string> messages(const ParseResult& r) {
  std::vector<std::string> out;
  if (!r.ok())
    for (const Diagnostic& d : r.diagnostics()) out.push_back(d.message);
  return out;
}

TEST(Parse, MinimalProgram) {
  ParseResult r = parse("func @h(%a: !lwe, %b: !lwe) -> !lwe { %0 = scifr_bool.and %a, %b : !lwe return %0 : !lwe }");
  ASSERT_TRUE(r.ok());
  const CircuitGraph& g = r.graph();
  EXPECT_EQ(g.name, "h");
  ASSERT_EQ(g.operators.size(), 1U);
  EXPECT_EQ(g.operators[0].kind.tag, OpTag::And);
  EXPECT_EQ(g.arguments.size(), 2U);
  EXPECT_EQ(g.returns, g.operators[0].results);
}

TEST(Parse, HalfAdderMatchesFixture) {
  ParseResult r = parse(R"(func @half_adder(%a: !lwe, %b: !lwe) -> !lwe, !lwe {
  %s = scifr_bool.xor %a, %b : !lwe
  %c = scifr_bool.and %a, %b : !lwe
  return %s, %c : !lwe, !lwe
}
)");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.graph().operators.size(), 2U);
  EXPECT_TRUE(isomorphic(r.graph(), fixtures::half_adder()));
}

TEST(Parse, LutMaskDiagnosticPointsAtAttribute) {
  const std::string line = "  %0 = scifr_bool.lut2 %a, %b {lut = 16} : !lwe";
  ParseResult r = parse("func @h(%a: !lwe, %b: !lwe) -> !lwe {\n" + line + "\n  return %0 : !lwe\n}\n");
  ASSERT_FALSE(r.ok());
  ASSERT_EQ(r.diagnostics().size(), 1U);
  const Diagnostic& d = r.diagnostics()[0];
  EXPECT_EQ(d.message, "LUT mask out of range");
  EXPECT_EQ(d.span.line, 2U);
  EXPECT_EQ(d.span.column, line.find("16") + 1);
  EXPECT_EQ(format_diagnostic("m.scifr", d), "m.scifr:2:38: error: LUT mask out of range");
}

TEST(Parse, CkksOpsAndAttributes) {
  ParseResult r = parse(R"(func @k(%x: !ct, %w: !pt) -> !ct {
  %0 = scifr_ckks.mul_plain %x, %w : !ct
  %1 = scifr_ckks.rotate %0 {offset = -2} : !ct
  %2 = scifr_ckks.extract %1 {index = 3} : !ct
  return %2 : !ct
}
)");
  ASSERT_TRUE(r.ok()) << messages(r).front();
  const CircuitGraph& g = r.graph();
  EXPECT_EQ(g.operators[1].kind.offset, -2);
  EXPECT_EQ(g.operators[2].kind.index, 3U);
  EXPECT_EQ(g.type_of(g.arguments[1]), ValueType::CkksPlaintext);
}

TEST(Parse, MultiResultLinComb) {
  ParseResult r = parse(R"(func @m(%a: !lwe, %b: !lwe) -> !lwe, !lwe {
  %0, %1 = scifr_bool.multi_lut_lincomb %a, %b {coeffs = [1, 2], luts = [6, 8]} : !lwe
  return %1, %0 : !lwe, !lwe
}
)");
  ASSERT_TRUE(r.ok()) << messages(r).front();
  const Operator& op = r.graph().operators[0];
  EXPECT_EQ(op.results.size(), 2U);
  EXPECT_EQ(op.kind.luts, (std::vector<std::uint64_t>{6, 8}));
  EXPECT_EQ(op.kind.coeffs, (std::vector<std::int64_t>{1, 2}));
}

TEST(Parse, ForwardReferencesResolve) {
  ParseResult r = parse(R"(func @f(%a: !lwe) -> !lwe {
  %0 = scifr_bool.and %a, %1 : !lwe
  %1 = scifr_bool.not %a : !lwe
  return %0 : !lwe
}
)");
  ASSERT_TRUE(r.ok()) << messages(r).front();
  EXPECT_EQ(evaluate_bits(r.graph(), 0), 0U);
  EXPECT_EQ(evaluate_bits(r.graph(), 1), 0U);
}

struct BadInput {
  const char* body;
  const char* message_fragment;
};

class ParseErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(ParseErrors, ReportsDiagnostic) {
  const std::string text = std::string("func @f(%a: !lwe, %b: !lwe) -> !lwe {\n") + GetParam().body + "\n}\n";
  ParseResult r = parse(text);
  ASSERT_FALSE(r.ok()) << text;
  bool found = false;
  for (const Diagnostic& d : r.diagnostics()) {
    found |= d.message.find(GetParam().message_fragment) != std::string::npos;
    EXPECT_GE(d.span.line, 1U);
    EXPECT_GE(d.span.column, 1U);
  }
  EXPECT_TRUE(found) << "wanted '" << GetParam().message_fragment << "' got '" << messages(r).front() << "'";
}

INSTANTIATE_TEST_SUITE_P(
    Diagnostics, ParseErrors,
    ::testing::Values(BadInput{"  %0 = scifr_bool.and %a, %c : !lwe\n  return %0 : !lwe", "use-before-def %c"},
                      BadInput{"  %0 = scifr_bool.and %a, %b : !lwe\n  %0 = scifr_bool.or %a, %b : !lwe\n  return %0 : !lwe",
                               "double-def %0"},
                      BadInput{"  %0 = scifr_bool.frob %a, %b : !lwe\n  return %0 : !lwe", "frob"},
                      BadInput{"  %0 = scifr_bool.lut2 %a, %b {lut = 1, lut = 2} : !lwe\n  return %0 : !lwe", "lut"},
                      BadInput{"  %0 = scifr_bool.lut2 %a, %b : !lwe\n  return %0 : !lwe", "lut"},
                      BadInput{"  %0 = scifr_bool.and %a, %b {lut = 3} : !lwe\n  return %0 : !lwe", "lut"},
                      BadInput{"  %0 = scifr_bool.and %a : !lwe\n  return %0 : !lwe", ""},
                      BadInput{"  %0 = scifr_bool.and %a, %b : !ct\n  return %0 : !lwe", ""},
                      BadInput{"  %0 = scifr_bool.and %a %b : !lwe\n  return %0 : !lwe", ""},
                      BadInput{"  %0 = scifr_bool.and %a, %b : !lwe\n  return %0 : !ct", ""},
                      BadInput{"  %0 = scifr_bool.and %a, %b : !lwe", ""},
                      BadInput{"  %0 = scifr_bool.and %a, %b : !lwe $\n  return %0 : !lwe", ""}));

TEST(Parse, DiagnosticsAreCapped) {
  std::string text = "func @f(%a: !lwe) -> () {\n";
  for (int i = 0; i < 50; ++i) text += "  %v" + std::to_string(i) + " = scifr_bool.and %a, %missing : !lwe\n";
  text += "  return :\n}\n";
  ParseResult r = parse(text);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.diagnostics().size(), kMaxDiagnostics);
}

TEST(Parse, Deterministic) {
  const std::string bad = "func @f(%a: !lwe) -> !lwe {\n  %0 = scifr_bool.lut3 %a, %a, %q {lut = 999} : !lwe\n  return %0 : !lwe\n}\n";
  ParseResult a = parse(bad), b = parse(bad);
  ASSERT_FALSE(a.ok());
  ASSERT_EQ(a.diagnostics().size(), b.diagnostics().size());
  for (std::size_t i = 0; i < a.diagnostics().size(); ++i) {
    EXPECT_EQ(a.diagnostics()[i].message, b.diagnostics()[i].message);
    EXPECT_EQ(a.diagnostics()[i].span.column, b.diagnostics()[i].span.column);
  }
}

TEST(Print, HalfAdderCanonicalText) {
  EXPECT_EQ(print(fixtures::half_adder()),
            "func @half_adder(%a: !lwe, %b: !lwe) -> !lwe, !lwe {\n"
            "  %sum = scifr_bool.xor %a, %b : !lwe\n"
            "  %carry = scifr_bool.and %a, %b : !lwe\n"
            "  return %sum, %carry : !lwe, !lwe\n"
            "}\n");
}

TEST(Print, ZeroReturnFunction) {
  GraphBuilder b("f");
  const std::string text = print(b.graph());
  EXPECT_EQ(text, "func @f() -> () {\n  return :\n}\n");
  ParseResult r = parse(text);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.graph().operators.empty());
  EXPECT_TRUE(r.graph().returns.empty());
}

TEST(Print, SectionAttributeEmitted) {
  const auto [g, plan] = sectionize(fixtures::half_adder(), 2048, paper_default_profile().costs);
  const std::string text = print(g);
  EXPECT_NE(text.find("{section = 0}"), std::string::npos);
  ParseResult r = parse(text);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.graph().operators[0].section, std::optional<std::uint32_t>(0));
}

TEST(Print, AttributesSortedAlphabetically) {
  GraphBuilder b("f");
  const ValueId a = b.add_argument(ValueType::LweCiphertext, "a");
  b.set_returns({b.add_op(make_lincomb({1}, 2), {a})});
  CircuitGraph g = b.take();
  g.operators[0].section = 3;
  EXPECT_NE(print(g).find("{coeffs = [1], lut = 2, section = 3}"), std::string::npos);
}

TEST(Print, IdempotentOnFixtures) {
  for (std::string_view name : fixtures::names()) {
    const std::string once = print(fixtures::generate(name));
    ParseResult r = parse(once);
    ASSERT_TRUE(r.ok()) << name;
    EXPECT_EQ(print(r.graph()), once) << name;
  }
}

TEST(RoundTrip, FixturesAreIsomorphic) {
  for (std::string_view name : fixtures::names()) {
    const CircuitGraph g = fixtures::generate(name);
    ParseResult r = parse(print(g));
    ASSERT_TRUE(r.ok()) << name;
    EXPECT_TRUE(isomorphic(r.graph(), g)) << name;
  }
}

TEST(RoundTrip, RandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const CircuitGraph g = testing::random_boolean_graph(rng, {.max_args = 5, .max_ops = 20});
    ParseResult r = parse(print(g));
    ASSERT_TRUE(r.ok()) << print(g);
    EXPECT_TRUE(isomorphic(r.graph(), g)) << print(g);
  }
}

TEST(RoundTrip, IsomorphismDetectsDifferences) {
  const CircuitGraph g = fixtures::half_adder();
  CircuitGraph h = g;
  h.operators[0].kind = make_kind(OpTag::XNor);
  EXPECT_FALSE(isomorphic(g, h));
  h = g;
  std::swap(h.returns[0], h.returns[1]);
  EXPECT_FALSE(isomorphic(g, h));
  h = g;
  h.values[h.operators[0].results[0].index].name = "renamed";
  EXPECT_TRUE(isomorphic(g, h));
}

TEST(ParseFile, MissingFileIsDiagnostic) {
  ParseResult r = parse_file("/nonexistent/path.scifr");
  EXPECT_FALSE(r.ok());
}

TEST(ParseFile, ShippedSamplesParse) {
  for (const char* name : {"half_adder.scifr", "lut_canonicalize.scifr", "dot_product.scifr"}) {
    ParseResult r = parse_file(std::string(FABRIC_TEST_DATA_DIR) + "/" + name);
    EXPECT_TRUE(r.ok()) << name << ": " << (r.ok() ? "" : r.diagnostics().front().message);
  }
}

}  // namespace
}  // namespace fabric
