#include <gtest/gtest.h>

#include "generators.hpp"
#include "qpnet/expand.hpp"
#include "qpnet/rewrite.hpp"
#include "qpnet/text.hpp"

namespace qpnet {
namespace {

Qp q(const char* text) { return parse_qp(text); }

TEST(Eliminate, TwoPathMarginal) {
  Qp r = eliminate_star(q("1-(1-pqrs)*(1-qtu)"));
  EXPECT_EQ(to_string(r), "q[1-(1-prs)(1-tu)]");
}

TEST(Eliminate, SplittingExample) {
  EXPECT_EQ(eliminate_star(q("(1-p)*(1-pq)")), q("1-p"));
}

TEST(Eliminate, SixClauseChain) {
  Qp e = q("[1-p(1-q)(1-r)] * p * [1-qs(1-t)] * (1-t) * [1-r(1-t)u] * [1-r(1-u)]");
  Qp r = eliminate_star(e);
  EXPECT_TRUE(is_decomposed(r));
  EXPECT_EQ(expand(r), expand(e));
  EXPECT_EQ(expand(r), expand(q("pq(1-t)(1-r)(1-s)")));
}

TEST(Eliminate, ComplementaryFactorsVanish) {
  EXPECT_TRUE(eliminate_star(q("pq(1-t)(1-r)s * (1-s)")).is_zero());
}

TEST(Eliminate, DecomposedInputIsUnchangedInValue) {
  Qp e = q("q[1-(1-prs)(1-tu)]");
  EXPECT_EQ(expand(eliminate_star(e)), expand(e));
}

TEST(Eliminate, RandomExpressionsDecomposeEquivalently) {
  testing::Rng rng(5);
  auto pool = testing::atom_pool(8);
  for (int i = 0; i < 500; ++i) {
    Qp e = testing::random_qp(rng, pool, 5);
    Qp r = eliminate_star(e);
    ASSERT_TRUE(is_decomposed(r)) << to_string(e) << " -> " << to_string(r);
    ASSERT_EQ(to_string(expand(r)), to_string(expand(e)))
        << to_string(e) << " -> " << to_string(r);
  }
}

TEST(Eliminate, RandomBooleanExpressions) {
  testing::Rng rng(6);
  auto pool = testing::atom_pool(10);
  for (int i = 0; i < 300; ++i) {
    Qp e = testing::random_boolean_qp(rng, pool, 6);
    Qp r = eliminate_star(e);
    ASSERT_TRUE(is_decomposed(r)) << to_string(e);
    ASSERT_EQ(expand(r), expand(e)) << to_string(e);
  }
}

TEST(Eliminate, TinyBudgetReportsResidual) {
  // A chain of overlapping pairs forces distribution and then expansion.
  std::vector<Qp> fs;
  for (int i = 0; i < 12; ++i) {
    std::string a = "x" + std::to_string(i), b = "x" + std::to_string(i + 1),
                c = "y" + std::to_string(i);
    fs.push_back(one_minus(add(Qp::monomial(AtomSet::of({a, c})),
                               Qp::monomial(AtomSet::of({b})))));
  }
  Qp e = weak_product(fs);
  ElimBudget tiny{8, 0};
  try {
    eliminate_star(e, tiny);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& ex) {
    EXPECT_FALSE(ex.residual_atoms().empty());
    EXPECT_EQ(expand(ex.partial()), expand(e));
  }
  // The default budget handles it.
  Qp r = eliminate_star(e);
  EXPECT_TRUE(is_decomposed(r));
  EXPECT_EQ(expand(r), expand(e));
}

}  // namespace
}  // namespace qpnet
