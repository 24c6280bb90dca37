#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "qpnet/error.hpp"
#include "qpnet/sat.hpp"

namespace qpnet {

Clause::Clause(const std::vector<SatLiteral>& literals) {
  for (const SatLiteral& l : literals) {
    auto same_var = std::find_if(literals_.begin(), literals_.end(),
                                 [&](const SatLiteral& x) { return x.var == l.var; });
    if (same_var == literals_.end())
      literals_.push_back(l);
    else if (same_var->positive != l.positive)
      tautology_ = true;
  }
}

CnfFormula::CnfFormula(std::vector<Clause> clauses,
                       std::vector<std::string> variables)
    : variables_(std::move(variables)), clauses_(std::move(clauses)) {
  std::set<std::string> known(variables_.begin(), variables_.end());
  for (const Clause& c : clauses_)
    for (const SatLiteral& l : c.literals())
      if (known.insert(l.var).second) variables_.push_back(l.var);
}

bool CnfFormula::has_empty_clause() const {
  return std::any_of(clauses_.begin(), clauses_.end(),
                     [](const Clause& c) { return c.empty(); });
}

bool CnfFormula::satisfied_by(const std::map<std::string, bool>& assignment) const {
  for (const Clause& c : clauses_) {
    if (c.tautology()) continue;
    bool sat = false;
    for (const SatLiteral& l : c.literals()) {
      auto it = assignment.find(l.var);
      bool value = it != assignment.end() && it->second;
      sat = sat || value == l.positive;
    }
    if (!sat) return false;
  }
  return true;
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  long n = -1, m = -1;
  std::vector<Clause> clauses;
  std::vector<SatLiteral> pending;
  int pending_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "%") break;  // end marker used by some benchmark sets
    if (tok == "p") {
      std::string format;
      if (n >= 0) throw ParseError("second problem line", line_no);
      if (!(tokens >> format >> n >> m) || format != "cnf" || n < 0 || m < 0)
        throw ParseError("expected 'p cnf <variables> <clauses>'", line_no);
      if (tokens >> tok) throw ParseError("trailing text after problem line", line_no);
      continue;
    }
    if (n < 0) throw ParseError("clause before the problem line", line_no);
    do {
      long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("'" + tok + "' is not an integer", line_no);
      if (value == 0) {
        clauses.emplace_back(pending);
        pending.clear();
        continue;
      }
      long index = value < 0 ? -value : value;
      if (index > n)
        throw HeaderMismatch("variable " + std::to_string(index) +
                                 " exceeds the declared " + std::to_string(n),
                             line_no);
      if (pending.empty()) pending_line = line_no;
      pending.push_back({"v" + std::to_string(index), value > 0});
    } while (tokens >> tok);
  }
  if (n < 0) throw ParseError("missing problem line 'p cnf <variables> <clauses>'");
  if (!pending.empty())
    throw ParseError("clause is not terminated by 0", pending_line);
  if (static_cast<long>(clauses.size()) != m)
    throw HeaderMismatch("header declares " + std::to_string(m) +
                         " clauses, found " + std::to_string(clauses.size()));

  std::vector<std::string> vars;
  for (long i = 1; i <= n; ++i) vars.push_back("v" + std::to_string(i));
  return CnfFormula(std::move(clauses), std::move(vars));
}

Qp cnf_to_qp(const CnfFormula& f) {
  std::vector<const Clause*> order;
  for (const Clause& c : f.clauses()) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(), [](const Clause* a, const Clause* b) {
    return a->width() < b->width();
  });
  std::vector<Qp> factors;
  for (const Clause* c : order) {
    if (c->tautology()) continue;
    if (c->empty()) return Qp::zero();
    // The clause fails exactly when every literal is false.
    std::vector<Qp> falsity;
    for (const SatLiteral& l : c->literals()) {
      Qp v = Qp::atom(l.var);
      falsity.push_back(l.positive ? one_minus(v) : v);
    }
    factors.push_back(one_minus(strong_product(std::move(falsity))));
  }
  return weak_product(std::move(factors));
}

}  // namespace qpnet
