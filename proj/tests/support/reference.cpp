#include "reference.hpp"

#include <stdexcept>

namespace qpnet::testing {

std::int64_t cube_value(const Qp& e, const std::vector<Atom>& atoms,
                        std::uint64_t point) {
  auto bit = [&](Atom a) -> std::int64_t {
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (atoms[i] == a) return (point >> i) & 1;
    throw std::logic_error("atom outside the cube");
  };
  switch (e.kind()) {
    case QpKind::Const:
      return e.constant_value();
    case QpKind::Monomial: {
      std::int64_t v = 1;
      for (Atom a : e.atoms()) v *= bit(a);
      return v;
    }
    case QpKind::OneMinus:
      return 1 - cube_value(e.child(), atoms, point);
    case QpKind::WeakProd:
    case QpKind::StrongProd: {
      std::int64_t v = 1;
      for (const Qp& f : e.operands()) v *= cube_value(f, atoms, point);
      return v;
    }
    case QpKind::Sum: {
      std::int64_t v = 0;
      for (std::size_t i = 0; i < e.operands().size(); ++i)
        v += e.coefficients()[i] * cube_value(e.operands()[i], atoms, point);
      return v;
    }
  }
  throw std::logic_error("unknown kind");
}

MultilinearForm reference_expansion(const Qp& e) {
  std::vector<Atom> atoms(e.support().begin(), e.support().end());
  if (atoms.size() > 16) throw std::invalid_argument("too many atoms for the cube");
  const std::uint64_t size = std::uint64_t{1} << atoms.size();
  std::vector<std::int64_t> g(size);
  for (std::uint64_t x = 0; x < size; ++x) g[x] = cube_value(e, atoms, x);
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::uint64_t x = 0; x < size; ++x)
      if (x >> i & 1) g[x] -= g[x ^ (std::uint64_t{1} << i)];
  MultilinearForm f;
  for (std::uint64_t x = 0; x < size; ++x) {
    if (g[x] == 0) continue;
    std::vector<Atom> m;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (x >> i & 1) m.push_back(atoms[i]);
    f.add_term(AtomSet(m), g[x]);
  }
  return f;
}

namespace {

template <typename F>
void for_each_assignment(const CnfFormula& f, F visit) {
  const auto& vars = f.variables();
  if (vars.size() > 24) throw std::invalid_argument("too many variables");
  std::map<std::string, bool> a;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << vars.size()); ++x) {
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = (x >> i) & 1;
    visit(a);
  }
}

bool holds(const CnfFormula& f, const std::map<std::string, bool>& a) {
  for (const Clause& c : f.clauses()) {
    if (c.tautology()) continue;
    bool ok = false;
    for (const SatLiteral& l : c.literals()) ok = ok || a.at(l.var) == l.positive;
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::uint64_t brute_force_models(const CnfFormula& f) {
  std::uint64_t n = 0;
  for_each_assignment(f, [&](const auto& a) { n += holds(f, a) ? 1 : 0; });
  return n;
}

double brute_force_satisfaction(const CnfFormula& f,
                                const std::map<std::string, double>& p) {
  double total = 0;
  for_each_assignment(f, [&](const auto& a) {
    if (!holds(f, a)) return;
    double w = 1;
    for (const auto& [v, value] : a) w *= value ? p.at(v) : 1 - p.at(v);
    total += w;
  });
  return total;
}

}  // namespace qpnet::testing
