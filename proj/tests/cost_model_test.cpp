#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fabric/cost_model.hpp"
#include "fabric/fixtures.hpp"
#include "support/graphs.hpp"

namespace fabric {
namespace {

std::string full_costs_json(std::uint64_t fcs, const std::string& skip = "") {
  std::string out;
  for (OpTag tag : all_op_tags()) {
    if (mnemonic(tag) == skip) continue;
    if (!out.empty()) out += ", ";
    out += "\"" + std::string(mnemonic(tag)) + "\": {\"fcs\": " + std::to_string(fcs) + "}";
  }
  return "{" + out + "}";
}

TEST(Profile, DefaultProfileCosts) {
  const Profile p = paper_default_profile();
  EXPECT_EQ(p.costs[OpTag::And].fcs, 256U);
  EXPECT_EQ(p.costs[OpTag::Lut3].fcs, 256U);
  EXPECT_EQ(p.costs[OpTag::Not].fcs, 16U);
  EXPECT_EQ(p.costs[OpTag::Rotate].fcs, 512U);
  EXPECT_EQ(p.fabric.fcs_per_chip, 4096U);
  EXPECT_EQ(p.fabric.usable_fcs_per_chip(), 2048U);
  EXPECT_EQ(p.fabric.chips_per_board, 4U);
  EXPECT_EQ(load_profile("paper-default").costs, p.costs);
}

TEST(Profile, LoadsFullConfig) {
  const Profile p = load_config_text(R"({"fabric": {"fcs_per_chip": 1000, "occupancy": 1.0, "chips_per_board": 2},
                                         "costs": )" + full_costs_json(10) + "}");
  EXPECT_EQ(p.fabric.usable_fcs_per_chip(), 1000U);
  EXPECT_EQ(p.costs[OpTag::Xor].fcs, 10U);
  EXPECT_EQ(p.fabric.slots, 8U);
}

TEST(Profile, MissingTagIsAnError) {
  try {
    load_config_text("{\"costs\": " + full_costs_json(1, "xor") + "}");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "missing cost for op 'xor'");
  }
}

TEST(Profile, RejectsBadValues) {
  const std::string costs = full_costs_json(1);
  EXPECT_THROW(load_config_text("{\"fabric\": {\"occupancy\": 0}, \"costs\": " + costs + "}"), Error);
  EXPECT_THROW(load_config_text("{\"fabric\": {\"occupancy\": 1.5}, \"costs\": " + costs + "}"), Error);
  EXPECT_THROW(load_config_text("{\"fabric\": {\"fcs_per_chip\": 0}, \"costs\": " + costs + "}"), Error);
  EXPECT_THROW(load_config_text("{\"fabric\": {\"chips_per_board\": -1}, \"costs\": " + costs + "}"), Error);
  EXPECT_THROW(load_config_text("{\"fabric\": {\"slots\": 6}, \"costs\": " + costs + "}"), Error);
  EXPECT_THROW(load_config_text("{\"fabric\": {\"color\": 1}, \"costs\": " + costs + "}"), Error);
  EXPECT_THROW(load_config_text("{\"costs\": {\"and\": {\"fcs\": -4}}}"), Error);
  EXPECT_THROW(load_config_text("{\"costs\": {\"frob\": {\"fcs\": 1}}}"), Error);
  EXPECT_THROW(load_config_text("{not json"), Error);
  EXPECT_THROW(load_profile("/nonexistent/config.json"), Error);
  try {
    load_config_text("{\"fabric\": {\"occupancy\": 0}, \"costs\": " + costs + "}");
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "occupancy must be in (0,1]");
  }
}

TEST(Estimate, HalfAdder) {
  const Profile p = paper_default_profile();
  const ResourceReport r = estimate(fixtures::half_adder(), p.fabric, p.costs);
  EXPECT_EQ(r.total_fcs, 512U);
  EXPECT_EQ(r.fcs(OpTag::Xor), 256U);
  EXPECT_EQ(r.fcs(OpTag::And), 256U);
  EXPECT_EQ(r.chips, 1U);
  EXPECT_EQ(r.boards, 1U);
  EXPECT_EQ(r.op_count, 2U);
  EXPECT_EQ(r.function_name, "half_adder");
}

TEST(Estimate, Table3Mult8) {
  const Profile p = paper_default_profile();
  const ResourceReport r = estimate(fixtures::table3_mult8(), p.fabric, p.costs);
  EXPECT_EQ(r.fcs(OpTag::And), 11264U);
  EXPECT_EQ(r.fcs(OpTag::Nand), 11264U);
  EXPECT_EQ(r.fcs(OpTag::XNor), 4608U);
  EXPECT_EQ(r.fcs(OpTag::Xor), 8960U);
  EXPECT_EQ(r.total_fcs, 36096U);
  EXPECT_EQ(r.chips, 18U);
  EXPECT_EQ(r.boards, 5U);
  EXPECT_EQ(r.op_count, 141U);
}

TEST(Estimate, EmptyGraphStillNeedsOneChip) {
  const Profile p = paper_default_profile();
  const ResourceReport r = estimate(GraphBuilder("empty").take(), p.fabric, p.costs);
  EXPECT_EQ(r.total_fcs, 0U);
  EXPECT_EQ(r.chips, 1U);
  EXPECT_EQ(r.boards, 1U);
}

TEST(Estimate, ChipAndBoardBoundaries) {
  const FabricConfig f;
  EXPECT_EQ(chips_for(0, f), 1U);
  EXPECT_EQ(chips_for(2048, f), 1U);
  EXPECT_EQ(chips_for(2049, f), 2U);
  EXPECT_EQ(chips_for(36096, f), 18U);
  EXPECT_EQ(boards_for(1, f), 1U);
  EXPECT_EQ(boards_for(4, f), 1U);
  EXPECT_EQ(boards_for(5, f), 2U);
  EXPECT_EQ(boards_for(18, f), 5U);
}

TEST(Estimate, SecondaryResourcesSum) {
  Profile p = paper_default_profile();
  p.costs[OpTag::And] = ResourceCost{.fcs = 1, .hbm_bytes = 100, .ddr_bytes = 7, .tiles = 2};
  const ResourceReport r = estimate(fixtures::and_gate(), p.fabric, p.costs);
  EXPECT_EQ(r.total_fcs, 4U);
  EXPECT_EQ(r.total_hbm_bytes, 400U);
  EXPECT_EQ(r.total_ddr_bytes, 28U);
  EXPECT_EQ(r.total_tiles, 8U);
}

// Oracle: count ops by tag and multiply independently.
TEST(EstimateProperty, MatchesBruteForceCount) {
  std::mt19937_64 rng(3);
  const Profile p = paper_default_profile();
  for (int i = 0; i < 300; ++i) {
    const CircuitGraph g = testing::random_boolean_graph(rng, {.max_args = 4, .max_ops = 40});
    std::uint64_t expect = 0;
    for (const Operator& op : g.operators) expect += op.kind.tag == OpTag::Not ? 16 : 256;
    const ResourceReport r = estimate(g, p.fabric, p.costs);
    ASSERT_EQ(r.total_fcs, expect);
    std::uint64_t chips = (expect + 2047) / 2048;
    chips = std::max<std::uint64_t>(chips, 1);
    EXPECT_EQ(r.chips, chips);
    EXPECT_EQ(r.boards, std::max<std::uint64_t>((chips + 3) / 4, 1));
  }
}

TEST(EstimateProperty, PermutationInvariantAndMonotone) {
  std::mt19937_64 rng(5);
  const Profile p = paper_default_profile();
  for (int i = 0; i < 200; ++i) {
    CircuitGraph g = testing::random_boolean_graph(rng, {.max_args = 3, .max_ops = 30});
    const ResourceReport base = estimate(g, p.fabric, p.costs);

    CircuitGraph shuffled = g;
    std::shuffle(shuffled.operators.begin(), shuffled.operators.end(), rng);
    const ResourceReport s = estimate(shuffled, p.fabric, p.costs);
    EXPECT_EQ(s.per_kind_fcs, base.per_kind_fcs);
    EXPECT_EQ(s.chips, base.chips);

    CircuitGraph bigger = g;
    const ValueId extra{static_cast<std::uint32_t>(bigger.values.size())};
    bigger.values.push_back({"extra", ValueType::LweCiphertext});
    bigger.operators.push_back(Operator{make_kind(OpTag::Or), {g.arguments[0], g.arguments[0]}, {extra}, {}});
    const ResourceReport more = estimate(bigger, p.fabric, p.costs);
    EXPECT_EQ(more.total_fcs, base.total_fcs + 256);
    EXPECT_GE(more.chips, base.chips);
    EXPECT_GE(more.boards, base.boards);
  }
}

TEST(EstimateProperty, LinearInCostScale) {
  std::mt19937_64 rng(9);
  const Profile p = paper_default_profile();
  for (int i = 0; i < 100; ++i) {
    const CircuitGraph g = testing::random_boolean_graph(rng);
    const std::uint64_t k = 1 + rng() % 7;
    CostTable scaled = p.costs;
    for (OpTag t : all_op_tags()) scaled[t].fcs *= k;
    EXPECT_EQ(estimate(g, p.fabric, scaled).total_fcs, k * estimate(g, p.fabric, p.costs).total_fcs);
  }
}

}  // namespace
}  // namespace fabric
