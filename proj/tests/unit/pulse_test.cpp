#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "generators.hpp"
#include "qpnet/oracle.hpp"
#include "qpnet/pulse.hpp"

namespace qpnet {
namespace {

PulseConfig small(std::uint64_t seed = 1) { return {64, 500, seed}; }

TEST(Pulse, OnePulseOfRoundedWidthPerPeriod) {
  PulseConfig cfg = small();
  for (double p : {0.0, 0.1, 0.25, 0.5, 0.77, 1.0}) {
    PulseTrain t = make_train(p, cfg, 7);
    auto w = static_cast<std::size_t>(std::llround(p * 64));
    EXPECT_EQ(t.count(), w * cfg.periods) << p;
    for (std::size_t k = 0; k < 20; ++k) {
      std::size_t in_period = 0, rises = 0;
      for (std::size_t j = 0; j < 64; ++j) {
        bool cur = t.bit(k * 64 + j), prev = t.bit(k * 64 + (j + 63) % 64);
        in_period += cur;
        rises += cur && !prev;
      }
      EXPECT_EQ(in_period, w);
      EXPECT_EQ(rises, (w == 0 || w == 64) ? 0u : 1u);
    }
  }
}

TEST(Pulse, ProductLaws) {
  PulseConfig cfg = small();
  PulseTrain t = make_train(0.3, cfg, 1), s = make_train(0.6, cfg, 2);
  EXPECT_EQ(pt_product(t, t), t);
  EXPECT_EQ(pt_product(t, pt_complement(t)).count(), 0u);
  EXPECT_EQ(pt_complement(pt_complement(t)), t);
  EXPECT_EQ(pt_product(t, s), pt_product(s, t));
  EXPECT_EQ(t.count() + pt_complement(t).count(), t.length());
}

TEST(Pulse, TailStaysClear) {
  PulseConfig cfg{3, 7, 1};  // 21 slots, one partial word
  PulseTrain t = pt_complement(PulseTrain(cfg, false));
  EXPECT_EQ(t.count(), 21u);
  EXPECT_EQ(t.words().back() >> 21, 0u);
}

TEST(Pulse, Deterministic) {
  EXPECT_EQ(make_train(0.4, small(9), 3), make_train(0.4, small(9), 3));
  EXPECT_NE(make_train(0.4, small(9), 3), make_train(0.4, small(10), 3));
  EXPECT_NE(make_train(0.4, small(9), 3), make_train(0.4, small(9), 4));
  // A longer train extends a shorter one with the same seed.
  PulseTrain a = make_train(0.4, {64, 100, 5}, 3), b = make_train(0.4, {64, 200, 5}, 3);
  for (std::size_t i = 0; i < a.length(); ++i) ASSERT_EQ(a.bit(i), b.bit(i));
}

TEST(Pulse, IndependentProductArea) {
  // Independent offsets make the product area approach p*q.
  PulseConfig cfg{64, 20000, 3};
  double p = 0.5, q = 0.25;
  double area = pt_product(make_train(p, cfg, 11), make_train(q, cfg, 12)).area();
  EXPECT_NEAR(area, p * q, 0.01);
}

TEST(Pulse, Errors) {
  EXPECT_THROW(make_train(1.5, small(), 1), InvalidValuation);
  EXPECT_THROW(pt_product(make_train(0.5, small(1), 1), make_train(0.5, small(2), 1)),
               ConfigMismatch);
  EXPECT_THROW(PulseTrain(PulseConfig{1, 10, 1}, false), std::invalid_argument);
  EXPECT_THROW(PulseTrain(PulseConfig{64, 0, 1}, false), std::invalid_argument);
}

TEST(PulseSweep, TwoPathsEstimate) {
  Network net = testing::two_paths_network();
  Valuation half = testing::uniform_pqrstu(0.5);
  double est = estimate_event(net, {{"F", true}}, half, PulseConfig{});
  EXPECT_NEAR(est, 11.0 / 64.0, 0.02);
  double cond = estimate_conditional(net, parse_query("B | F"), half, PulseConfig{});
  EXPECT_NEAR(cond, 7.0 / 11.0, 0.05);
}

TEST(PulseSweep, SelfConditioningAndZeroEvidence) {
  Network net = testing::two_paths_network();
  Valuation half = testing::uniform_pqrstu(0.5);
  EXPECT_EQ(estimate_conditional(net, parse_query("F | F"), half, small()), 1.0);
  Valuation zero = half;
  zero.set("s", 0);
  zero.set("u", 0);
  EXPECT_THROW(estimate_conditional(net, parse_query("B | F"), zero, small()),
               ZeroEvidenceArea);
}

TEST(PulseSweep, DeterministicValuesAreExact) {
  // With every label 0 or 1 the network is deterministic and the trains
  // are constant.
  testing::Rng rng(60);
  for (int i = 0; i < 50; ++i) {
    Network net = testing::random_network(rng);
    Valuation v;
    for (const std::string& l : net.labels()) v.set(l, rng() % 2 ? 1.0 : 0.0);
    auto lits = testing::random_literals(rng, net);
    EXPECT_EQ(estimate_event(net, lits, v, small()), enumerate_probability(net, lits, v));
  }
}

}  // namespace
}  // namespace qpnet
