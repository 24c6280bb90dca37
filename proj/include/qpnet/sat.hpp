#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpnet/multilinear.hpp"
#include "qpnet/qp.hpp"
#include "qpnet/rewrite.hpp"

namespace qpnet {

struct SatLiteral {
  std::string var;
  bool positive = true;

  friend bool operator==(const SatLiteral&, const SatLiteral&) = default;
};

/// Disjunction of literals over distinct variables. Building a clause from
/// a list merges repeated literals and flags complementary pairs.
class Clause {
 public:
  Clause() = default;
  explicit Clause(const std::vector<SatLiteral>& literals);

  const std::vector<SatLiteral>& literals() const { return literals_; }
  bool empty() const { return literals_.empty() && !tautology_; }
  bool tautology() const { return tautology_; }
  std::size_t width() const { return literals_.size(); }

 private:
  std::vector<SatLiteral> literals_;
  bool tautology_ = false;
};

class CnfFormula {
 public:
  CnfFormula() = default;
  /// Variables default to those of the clauses in order of appearance.
  explicit CnfFormula(std::vector<Clause> clauses,
                      std::vector<std::string> variables = {});

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  bool has_empty_clause() const;

  /// Whether every clause holds; unassigned variables count as false.
  bool satisfied_by(const std::map<std::string, bool>& assignment) const;

 private:
  std::vector<std::string> variables_;
  std::vector<Clause> clauses_;
};

/// DIMACS CNF. Variables are named v1..vn. Throws ParseError carrying the
/// line, HeaderMismatch when the clause count or a variable index disagrees
/// with the header.
CnfFormula parse_dimacs(std::string_view text);

/// Weak product of the clause expressions 1 - c1*...*ck, where c is the
/// atom for a negative literal and 1-atom for a positive one. Clauses are
/// taken in ascending width; a unit clause v gives v and !v gives 1-v.
Qp cnf_to_qp(const CnfFormula& f);

enum class SatStatus { Satisfiable, Unsatisfiable, Unknown };

struct SatResult {
  SatStatus status = SatStatus::Unknown;
  /// Value of every variable, free ones set to false. Satisfiable only.
  std::map<std::string, bool> model;
  /// Variables the decomposed expression does not mention.
  std::vector<std::string> free;
  /// Decomposed expression of the formula (partial when Unknown).
  Qp residual;
};

SatResult decide_sat(const CnfFormula& f, const ElimBudget& budget = {});

constexpr std::size_t kDefaultCountVariables = 24;

/// Number of satisfying assignments over all variables of `f`.
/// Throws TooManyVariables, ExpansionLimit.
Coefficient count_models(const CnfFormula& f,
                         std::size_t max_variables = kDefaultCountVariables,
                         std::size_t cap = kDefaultExpansionCap);

}  // namespace qpnet
