#pragma once

#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qpnet/network.hpp"
#include "qpnet/qp.hpp"
#include "qpnet/query.hpp"
#include "qpnet/rewrite.hpp"
#include "qpnet/valuation.hpp"

namespace qpnet {

/// Builds quasi-probabilities of truth P*(node) for one network.
///
///   root  1
///   AND   p * P*(A1) * ... * P*(An)
///   OR    1 - (1 - p1*P*(A1)) * ... * (1 - pn*P*(An))
///   NOT   p * (1 - P*(A))
///
/// with `*` the weak product, p the label (1 when unlabelled) and P*(A)
/// replaced by 1 - P*(A) across an inhibitory link. With `share` set each
/// node's expression is built once and reused wherever the node recurs.
class QpBuilder {
 public:
  explicit QpBuilder(const Network& net, bool share = true);

  /// Throws QueryError for an unknown node.
  Qp marginal(std::string_view node);
  Qp literal(const Literal& lit);

 private:
  Qp build(std::size_t index);

  const Network& net_;
  bool share_;
  std::unordered_map<std::size_t, Qp> memo_;
};

Qp marginal_qp(const Network& net, std::string_view node, bool share = true);

/// Weak product of P*(A) over positive literals and 1 - P*(A) over negative
/// ones. Throws QueryError when the list is empty or repeats a node.
Qp event_qp(const Network& net, const std::vector<Literal>& lits);

/// Numerator and denominator of a conditional probability, both decomposed.
///
/// Evidence factors that share no atom with any target or other evidence
/// factor appear in both and are divided out before elimination; after it,
/// common factors of the two ordinary products are divided out too. The
/// divided-out factors are kept in `cancelled` because the evidence has
/// probability 0 when any of them evaluates to 0.
struct ConditionalQp {
  Qp numerator;
  Qp denominator;
  std::vector<Qp> cancelled;
};

/// A node may occur among both targets and evidence; P(R | R) is 1.
/// Throws QueryError, BudgetExceeded.
ConditionalQp conditional_qp(const Network& net, const Query& q,
                             const ElimBudget& budget = {});

/// Throws ZeroEvidence when the evidence evaluates to 0 under `v`.
double conditional_probability(const ConditionalQp& c, const Valuation& v);
Rational conditional_probability_exact(const ConditionalQp& c,
                                       const Valuation& v);

double conditional_probability(const Network& net, const Query& q,
                               const Valuation& v,
                               const ElimBudget& budget = {});

/// Numerator c1 + c2*p and denominator c3 + c4*p as functions of the
/// boosted symbol p.
struct BoostCoefficients {
  double c1 = 0;
  double c2 = 0;
  double c3 = 0;
  double c4 = 0;
};

struct BoostResult {
  double value;
  BoostCoefficients coefficients;
};

/// Evaluates numerator and denominator with `boosted` set to each probe
/// value, solves for their linear coefficients and returns the ratio at the
/// true value v(boosted). Throws DegenerateDenominator when the interpolated
/// denominator is 0 there, std::invalid_argument for equal probes.
BoostResult boosted_conditional(const ConditionalQp& c, const Valuation& v,
                                Atom boosted,
                                std::pair<double, double> probes = {0.5, 1.0});

BoostResult boosted_conditional(const Network& net, const Query& q,
                                const Valuation& v, Atom boosted,
                                std::pair<double, double> probes = {0.5, 1.0},
                                const ElimBudget& budget = {});

}  // namespace qpnet
