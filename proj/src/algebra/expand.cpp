#include "qpnet/expand.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "qpnet/error.hpp"

namespace qpnet {

MultilinearForm expand(const Qp& e, std::size_t cap) {
  // Subtrees are shared, so expansions are memoized per node.
  std::unordered_map<const void*, MultilinearForm> memo;
  auto rec = [&](auto&& self, const Qp& x) -> const MultilinearForm& {
    if (auto it = memo.find(x.identity()); it != memo.end()) return it->second;
    MultilinearForm f;
    switch (x.kind()) {
      case QpKind::Const:
        f = MultilinearForm::constant(x.constant_value());
        break;
      case QpKind::Monomial:
        f = MultilinearForm::monomial(x.atoms());
        break;
      case QpKind::OneMinus:
        f = self(self, x.child()).complement();
        break;
      case QpKind::WeakProd:
      case QpKind::StrongProd: {
        f = MultilinearForm::constant(1);
        for (const Qp& factor : x.operands()) {
          f = f.multiply(self(self, factor), cap);
          if (f.is_zero()) break;
        }
        break;
      }
      case QpKind::Sum: {
        const auto& coeffs = x.coefficients();
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
          const MultilinearForm& t = self(self, x.operands()[i]);
          for (const auto& [atoms, c] : t.terms())
            f.add_term(atoms, c * coeffs[i]);
        }
        break;
      }
    }
    if (f.size() > cap) throw ExpansionLimit(cap);
    return memo.emplace(x.identity(), std::move(f)).first->second;
  };
  return rec(rec, e);
}

bool equivalent(const Qp& a, const Qp& b, std::size_t cap) {
  if (a == b) return true;
  return expand(a, cap) == expand(b, cap);
}

bool is_identically_zero(const Qp& e, std::size_t cap) {
  return e.is_zero() || expand(e, cap).is_zero();
}

Qp to_qp(const MultilinearForm& form) {
  std::vector<SumTerm> terms;
  for (const auto& [atoms, coeff] : form.sorted_terms()) {
    if (coeff > std::numeric_limits<std::int64_t>::max() ||
        coeff < std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("coefficient does not fit a sum term");
    terms.push_back({coeff.convert_to<std::int64_t>(), Qp::monomial(atoms)});
  }
  return sum(std::move(terms));
}

}  // namespace qpnet
