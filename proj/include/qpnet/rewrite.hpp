#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qpnet/error.hpp"
#include "qpnet/multilinear.hpp"
#include "qpnet/qp.hpp"

namespace qpnet {

// *-elimination rules. Every rule returns an expression whose expansion
// equals that of its input.

/// Rewrites each weak product into an ordinary product of its
/// atom-connected groups of factors.
Qp rule_bookkeeping(const Qp& e);

/// Finds the first weak product in `e` (pre-order) having `pivot` or
/// `1-pivot` as a factor, or a monomial factor containing a monomial pivot,
/// and rewrites the remaining factors under that factor: occurrences of the
/// pivot become 1 (resp. 0). The rewritten product is book-kept.
/// Throws RewriteError(PivotNotFound) if there is no such product, and
/// RewriteError(ShapeMismatch) if the pivot is not 0/1-valued.
Qp rule_resolution(const Qp& e, const Qp& pivot);

/// (1-rho*r1) * ... * (1-rho*rn)  ->  1 - rho*[1 - (1-r1)*...*(1-rn)].
/// A factor (1-rho) counts as r = 1. Throws RewriteError(ShapeMismatch) if
/// a factor does not have that shape.
Qp rule_decoupling(const std::vector<Qp>& factors, const Qp& rho);

/// `tau` rewritten under the assumption that `fact` equals 1. `fact` must
/// be 0/1-valued; the caller checks. The result is unchanged in expansion
/// once weak-multiplied by `fact`.
Qp resolve_against(const Qp& tau, const Qp& fact);

struct ElimBudget {
  /// Cap on any expansion done while eliminating.
  std::size_t max_terms = kDefaultExpansionCap;
  /// Distributions of a product over a sum before a component falls back
  /// to full expansion.
  std::size_t max_distributions = std::size_t{1} << 14;
};

/// *-elimination could not finish within the budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(Qp partial, std::vector<std::string> residual_atoms);

  /// Equivalent to the input, decomposed except around `residual_atoms`.
  const Qp& partial() const { return partial_; }
  const std::vector<std::string>& residual_atoms() const { return residual_; }

 private:
  Qp partial_;
  std::vector<std::string> residual_;
};

/// Rewrites `e` into an equivalent decomposed expression.
///
/// Each weak product is processed as follows: resolution with every factor
/// as pivot until nothing changes; the factors then split into unrelated
/// groups (book-keeping). Each group that still shares atoms is decoupled
/// on the atom common to the most factors of the form (1 - m*r), taking the
/// largest monomial common to those factors; failing that, the product is
/// distributed over the factor with the fewest expanded terms. A group that
/// exhausts the distribution budget is replaced by its expansion.
/// Throws BudgetExceeded when that expansion would exceed max_terms.
Qp eliminate_star(const Qp& e, const ElimBudget& budget = {});

}  // namespace qpnet
