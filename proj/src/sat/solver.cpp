#include <stdexcept>

#include "qpnet/error.hpp"
#include "qpnet/expand.hpp"
#include "qpnet/sat.hpp"

namespace qpnet {
namespace {

// Probability that the formula holds when every variable is a fair coin.
Rational half_value(const Qp& decomposed, const CnfFormula& f) {
  Valuation half;
  for (const std::string& v : f.variables()) half.set(v, 0.5);
  return evaluate_exact(decomposed, half);
}

// Reads the assignment off a product of atoms and complemented atoms.
bool read_direct(const Qp& r, std::map<std::string, bool>& model) {
  for (const Qp& f : factors_of(r)) {
    if (f.kind() == QpKind::Monomial) {
      for (Atom a : f.atoms()) model[a.name()] = true;
    } else if (f.kind() == QpKind::OneMinus &&
               f.child().kind() == QpKind::Monomial &&
               f.child().atoms().size() == 1) {
      model[f.child().atoms().begin()->name()] = false;
    } else if (!f.is_one()) {
      return false;
    }
  }
  return true;
}

// Fixes variables one at a time, keeping the satisfying fraction positive.
// The fraction of a positive decomposed expression stays positive for at
// least one of the two values, so no backtracking is needed.
void read_greedy(Qp r, const CnfFormula& f, std::map<std::string, bool>& model) {
  for (const std::string& name : f.variables()) {
    Atom a(name);
    if (!r.support().contains(a)) continue;
    Valuation one;
    one.set(a, 1.0);
    Qp with_true = assign(r, one);
    if (half_value(with_true, f) > 0) {
      model[name] = true;
      r = with_true;
      continue;
    }
    Valuation zero;
    zero.set(a, 0.0);
    r = assign(r, zero);
    model[name] = false;
  }
}

}  // namespace

SatResult decide_sat(const CnfFormula& f, const ElimBudget& budget) {
  SatResult out;
  if (f.has_empty_clause()) {
    out.status = SatStatus::Unsatisfiable;
    return out;
  }
  try {
    out.residual = eliminate_star(cnf_to_qp(f), budget);
  } catch (const BudgetExceeded& e) {
    out.status = SatStatus::Unknown;
    out.residual = e.partial();
    return out;
  }
  if (out.residual.is_zero() || half_value(out.residual, f) == 0) {
    out.status = SatStatus::Unsatisfiable;
    return out;
  }

  out.status = SatStatus::Satisfiable;
  const AtomSet& used = out.residual.support();
  for (const std::string& v : f.variables()) {
    if (!used.contains(Atom(v))) {
      out.free.push_back(v);
      out.model[v] = false;
    }
  }
  std::map<std::string, bool> fixed;
  if (!read_direct(out.residual, fixed)) {
    fixed.clear();
    read_greedy(out.residual, f, fixed);
  }
  for (const auto& [v, value] : fixed) out.model[v] = value;
  if (!f.satisfied_by(out.model))
    throw std::logic_error("extracted assignment does not satisfy the formula");
  return out;
}

Coefficient count_models(const CnfFormula& f, std::size_t max_variables,
                         std::size_t cap) {
  const std::size_t n = f.variables().size();
  if (n > max_variables)
    throw TooManyVariables("model counting is limited to " +
                           std::to_string(max_variables) + " variables");
  if (f.has_empty_clause()) return 0;
  Qp e = cnf_to_qp(f);
  Rational fraction;
  try {
    ElimBudget budget;
    budget.max_terms = cap;
    fraction = half_value(eliminate_star(e, budget), f);
  } catch (const BudgetExceeded&) {
    Valuation half;
    for (const std::string& v : f.variables()) half.set(v, 0.5);
    fraction = expand(e, cap).evaluate_exact(half);
  }
  Rational count = fraction * Rational(Coefficient(1) << n);
  if (denominator(count) != 1)
    throw std::logic_error("model count is not an integer");
  return numerator(count);
}

}  // namespace qpnet
