#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "qpnet/network.hpp"
#include "qpnet/oracle.hpp"

namespace qpnet {
namespace {

// Every joint assignment of the CPT's nodes, as oracle literals and as a
// chain-rule query.
void expect_joint_agreement(const CptNetwork& cpt, double tol) {
  Converted conv = from_cpt(cpt);
  ASSERT_TRUE(validate(conv.network.nodes()).empty());
  const std::size_t n = cpt.nodes.size();
  double total = 0;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    std::vector<Literal> lits;
    std::map<std::string, bool> values;
    for (std::size_t i = 0; i < n; ++i) {
      bool b = bits >> i & 1;
      lits.push_back({cpt.nodes[i].id, b});
      values[cpt.nodes[i].id] = b;
    }
    double oracle = enumerate_probability(conv.network, lits, conv.symbols);
    double chain = cpt_joint_probability(cpt, values);
    ASSERT_NEAR(oracle, chain, tol) << "assignment " << bits;
    total += oracle;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Cpt, TwoParentNetwork) {
  CptNetwork cpt = read_cpt(testing::read_text(testing::data_path("two_parent.cpt.json")));
  expect_joint_agreement(cpt, 1e-12);
  // P(Wet) = sum over parents of prior * table entry.
  double wet = 0.8 * 0.6 * 0.05 + 0.8 * 0.4 * 0.8 + 0.2 * 0.6 * 0.9 + 0.2 * 0.4 * 0.99;
  EXPECT_NEAR(cpt_joint_probability(cpt, {{"Wet", true}}), wet, 1e-15);
  Converted conv = from_cpt(cpt);
  EXPECT_NEAR(enumerate_probability(conv.network, {{"Wet", true}}, conv.symbols),
              wet, 1e-12);
}

TEST(Cpt, DeterministicOrNeedsNoSymbols) {
  CptNetwork cpt =
      read_cpt(testing::read_text(testing::data_path("deterministic_or.cpt.json")));
  Converted conv = from_cpt(cpt);
  EXPECT_TRUE(conv.symbol_order.empty());
  expect_joint_agreement(cpt, 1e-12);
  EXPECT_EQ(enumerate_probability(conv.network, {{"Z", true}}, conv.symbols), 1.0);
}

TEST(Cpt, SymbolNames) {
  CptNetwork cpt{{{"A", {}, {0.3}}, {"B", {"A"}, {0.25, 1.0}}}};
  Converted conv = from_cpt(cpt);
  EXPECT_EQ(conv.symbol_order, (std::vector<std::string>{"θ_A", "θ_B_0"}));
  EXPECT_DOUBLE_EQ(conv.symbols.at(Atom("θ_A")), 0.3);
  EXPECT_DOUBLE_EQ(conv.symbols.at(Atom("θ_B_0")), 0.25);
}

TEST(Cpt, ZeroPriorAndAllZeroRows) {
  CptNetwork cpt{{{"A", {}, {0.0}}, {"B", {"A"}, {0.0, 0.0}}, {"C", {"B"}, {0.7, 0.1}}}};
  expect_joint_agreement(cpt, 1e-12);
}

TEST(Cpt, RandomNetworksMatchChainRule) {
  testing::Rng rng(8);
  for (int i = 0; i < 100; ++i) expect_joint_agreement(testing::random_cpt(rng, 4, 3), 1e-12);
}

TEST(Cpt, ValidateRejectsBadTables) {
  CptNetwork bad =
      read_cpt(testing::read_text(testing::data_path("bad_table.cpt.json")));
  EXPECT_FALSE(validate(bad).empty());
  EXPECT_THROW(from_cpt(bad), ValidationError);
  EXPECT_FALSE(validate(CptNetwork{{{"A", {}, {1.5}}}}).empty());
  EXPECT_FALSE(validate(CptNetwork{{{"$A", {}, {0.5}}}}).empty());
  EXPECT_FALSE(validate(CptNetwork{{{"A", {"B"}, {0.5, 0.5}},
                                    {"B", {"A"}, {0.5, 0.5}}}})
                   .empty());
  EXPECT_FALSE(validate(CptNetwork{{{"A", {"Z"}, {0.5, 0.5}}}}).empty());
}

}  // namespace
}  // namespace qpnet
