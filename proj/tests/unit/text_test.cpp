#include <gtest/gtest.h>

#include "generators.hpp"
#include "qpnet/error.hpp"
#include "qpnet/expand.hpp"
#include "qpnet/text.hpp"

namespace qpnet {
namespace {

TEST(Text, RawAndCompactStyles) {
  Qp e = parse_qp("1-(1-p*q*r*s)*(1-q*t*u)");
  EXPECT_EQ(to_string(e, TextStyle::Raw), "1-(1-p*q*r*s)*(1-q*t*u)");
  EXPECT_EQ(to_string(e), "1-(1-pqrs)*(1-qtu)");
}

TEST(Text, BracketsCycleWithDepth) {
  Qp e = parse_qp("q[1-(1-prs)(1-tu)]");
  EXPECT_EQ(to_string(e), "q[1-(1-prs)(1-tu)]");
  EXPECT_EQ(to_string(e, TextStyle::Raw), "q(1-(1-p*r*s)(1-t*u))");
  Qp deeper = parse_qp("p{1-q[1-(1-r)(1-s)]}");
  EXPECT_EQ(to_string(deeper), "p{1-q[1-(1-r)(1-s)]}");
}

TEST(Text, JuxtapositionBindsTighterThanWeakProduct) {
  Qp e = parse_qp("pq*(1-q)");
  EXPECT_TRUE(e.is_zero());
  Qp f = parse_qp("p(1-q)*r");
  EXPECT_TRUE(equivalent(f, parse_qp("pr-pqr")));
}

TEST(Text, CoefficientsAndSigns) {
  Qp e = parse_qp("-2pq+3");
  EXPECT_EQ(e.kind(), QpKind::Sum);
  EXPECT_EQ(to_string(e), "3-2pq");
  EXPECT_TRUE(equivalent(parse_qp("2p-p"), parse_qp("p")));
}

TEST(Text, UnicodeOperators) {
  EXPECT_TRUE(equivalent(parse_qp("1 − p ∗ q"), parse_qp("1-pq")));
}

TEST(Text, QuotedAtoms) {
  Qp e = parse_qp("`rain`(1-`wet_1`)");
  EXPECT_EQ(e.support(), AtomSet::of({"rain", "wet_1"}));
  EXPECT_EQ(to_string(e), "`rain`(1-`wet_1`)");
}

TEST(Text, Errors) {
  EXPECT_THROW(parse_qp("pp"), ParseError);       // juxtaposed shared atom
  EXPECT_THROW(parse_qp("(1-p"), ParseError);
  EXPECT_THROW(parse_qp("p+"), ParseError);
  EXPECT_THROW(parse_qp("2(p"), ParseError);
  EXPECT_THROW(parse_qp("p$q"), ParseError);
  try {
    parse_qp("p + )");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5);
  }
}

TEST(Text, RoundTripPreservesMeaning) {
  testing::Rng rng(7);
  auto pool = testing::atom_pool(6);
  for (int i = 0; i < 300; ++i) {
    Qp e = testing::random_qp(rng, pool, 4);
    for (TextStyle style : {TextStyle::Raw, TextStyle::Compact}) {
      std::string s = to_string(e, style);
      Qp back = parse_qp(s);
      ASSERT_TRUE(equivalent(e, back)) << s;
    }
  }
}

}  // namespace
}  // namespace qpnet
