#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "qpnet/expand.hpp"
#include "qpnet/rewrite.hpp"
#include "rewrite_internal.hpp"

namespace qpnet {
namespace detail {

AtomSet monomial_part(const Qp& x) {
  if (x.kind() == QpKind::Monomial) return x.atoms();
  if (x.kind() == QpKind::WeakProd || x.kind() == QpKind::StrongProd) {
    for (const Qp& f : x.operands())
      if (f.kind() == QpKind::Monomial) return f.atoms();
  }
  return {};
}

std::optional<Qp> cofactor(const Qp& x, const Qp& rho) {
  if (x == rho) return Qp::one();
  std::vector<Qp> xs = factors_of(x);
  AtomSet need_mono;
  std::vector<Qp> need;
  for (const Qp& f : factors_of(rho)) {
    if (f.kind() == QpKind::Monomial)
      need_mono = need_mono | f.atoms();
    else
      need.push_back(f);
  }
  std::vector<Qp> rest;
  bool mono_done = need_mono.empty();
  for (const Qp& f : xs) {
    if (!mono_done && f.kind() == QpKind::Monomial &&
        f.atoms().includes(need_mono)) {
      rest.push_back(Qp::monomial(f.atoms() - need_mono));
      mono_done = true;
      continue;
    }
    auto it = std::find(need.begin(), need.end(), f);
    if (it != need.end()) {
      need.erase(it);
      continue;
    }
    rest.push_back(f);
  }
  if (!mono_done || !need.empty()) return std::nullopt;
  return x.kind() == QpKind::StrongProd ? strong_product(std::move(rest))
                                        : weak_product(std::move(rest));
}

std::vector<std::vector<std::size_t>> atom_components(
    const std::vector<Qp>& factors) {
  std::vector<std::size_t> parent(factors.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::unordered_map<Atom, std::size_t, AtomHash> owner;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (Atom a : factors[i].support()) {
      auto [it, inserted] = owner.try_emplace(a, i);
      if (!inserted) parent[find(i)] = find(it->second);
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto [it, inserted] = slot.try_emplace(find(i), groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  return groups;
}

bool usable_as_pivot(const Qp& x) {
  if (x.boolean_valued()) return true;
  try {
    MultilinearForm f = expand(x);
    return f.multiply(f) == f;
  } catch (const ExpansionLimit&) {
    return false;
  }
}

}  // namespace detail

namespace {

/// Replace structural occurrences of `target` by `value`.
Qp replace(const Qp& e, const Qp& target, const Qp& value) {
  std::unordered_map<const void*, Qp> memo;
  auto rec = [&](auto&& self, const Qp& x) -> Qp {
    if (!x.support().includes(target.support())) return x;
    if (x == target) return value;
    if (auto it = memo.find(x.identity()); it != memo.end()) return it->second;
    Qp r = x;
    switch (x.kind()) {
      case QpKind::Const:
      case QpKind::Monomial:
        break;
      case QpKind::OneMinus:
        r = one_minus(self(self, x.child()));
        break;
      case QpKind::WeakProd:
      case QpKind::StrongProd: {
        std::vector<Qp> fs;
        for (const Qp& f : x.operands()) fs.push_back(self(self, f));
        r = x.kind() == QpKind::WeakProd ? weak_product(std::move(fs))
                                         : strong_product(std::move(fs));
        break;
      }
      case QpKind::Sum: {
        std::vector<SumTerm> ts;
        for (std::size_t i = 0; i < x.operands().size(); ++i)
          ts.push_back({x.coefficients()[i], self(self, x.operands()[i])});
        r = sum(std::move(ts));
        break;
      }
    }
    memo.emplace(x.identity(), r);
    return r;
  };
  return rec(rec, e);
}

/// Monomials containing all of `m` become 0.
Qp kill_supersets(const Qp& e, const AtomSet& m) {
  std::unordered_map<const void*, Qp> memo;
  auto rec = [&](auto&& self, const Qp& x) -> Qp {
    if (!x.support().includes(m)) return x;
    if (auto it = memo.find(x.identity()); it != memo.end()) return it->second;
    Qp r = x;
    switch (x.kind()) {
      case QpKind::Const:
        break;
      case QpKind::Monomial:
        r = Qp::zero();
        break;
      case QpKind::OneMinus:
        r = one_minus(self(self, x.child()));
        break;
      case QpKind::WeakProd:
      case QpKind::StrongProd: {
        std::vector<Qp> fs;
        for (const Qp& f : x.operands()) fs.push_back(self(self, f));
        r = x.kind() == QpKind::WeakProd ? weak_product(std::move(fs))
                                         : strong_product(std::move(fs));
        break;
      }
      case QpKind::Sum: {
        std::vector<SumTerm> ts;
        for (std::size_t i = 0; i < x.operands().size(); ++i)
          ts.push_back({x.coefficients()[i], self(self, x.operands()[i])});
        r = sum(std::move(ts));
        break;
      }
    }
    memo.emplace(x.identity(), r);
    return r;
  };
  return rec(rec, e);
}

Qp bookkeep_product(const std::vector<Qp>& factors) {
  auto groups = detail::atom_components(factors);
  std::vector<Qp> parts;
  for (const auto& g : groups) {
    std::vector<Qp> members;
    for (std::size_t i : g) members.push_back(factors[i]);
    parts.push_back(weak_product(std::move(members)));
  }
  return strong_product(std::move(parts));
}

}  // namespace

Qp resolve_against(const Qp& tau, const Qp& fact) {
  if (!tau.support().intersects(fact.support())) return tau;
  switch (fact.kind()) {
    case QpKind::Const:
      return tau;
    case QpKind::Monomial: {
      Valuation ones;
      for (Atom a : fact.atoms()) ones.set(a, 1.0);
      return assign(tau, ones);
    }
    case QpKind::WeakProd:
    case QpKind::StrongProd: {
      // A 0/1-valued product is 1 only where every factor is 1.
      Qp r = tau;
      for (const Qp& f : fact.operands()) r = resolve_against(r, f);
      return r;
    }
    case QpKind::OneMinus: {
      const Qp& g = fact.child();
      Qp r = replace(tau, g, Qp::zero());
      if (g.kind() == QpKind::Monomial) r = kill_supersets(r, g.atoms());
      return r;
    }
    case QpKind::Sum:
      return replace(tau, fact, Qp::one());
  }
  return tau;
}

Qp rule_bookkeeping(const Qp& e) {
  std::unordered_map<const void*, Qp> memo;
  auto rec = [&](auto&& self, const Qp& x) -> Qp {
    if (auto it = memo.find(x.identity()); it != memo.end()) return it->second;
    Qp r = x;
    switch (x.kind()) {
      case QpKind::Const:
      case QpKind::Monomial:
        break;
      case QpKind::OneMinus:
        r = one_minus(self(self, x.child()));
        break;
      case QpKind::StrongProd:
      case QpKind::WeakProd: {
        std::vector<Qp> fs;
        for (const Qp& f : x.operands()) fs.push_back(self(self, f));
        r = x.kind() == QpKind::WeakProd ? bookkeep_product(fs)
                                         : strong_product(std::move(fs));
        break;
      }
      case QpKind::Sum: {
        std::vector<SumTerm> ts;
        for (std::size_t i = 0; i < x.operands().size(); ++i)
          ts.push_back({x.coefficients()[i], self(self, x.operands()[i])});
        r = sum(std::move(ts));
        break;
      }
    }
    memo.emplace(x.identity(), r);
    return r;
  };
  return rec(rec, e);
}

Qp rule_resolution(const Qp& e, const Qp& pivot) {
  if (!detail::usable_as_pivot(pivot))
    throw RewriteError(RewriteError::Kind::ShapeMismatch,
                       "resolution pivot is not 0/1-valued");
  const Qp neg = complement(pivot);

  // Index of the factor that fixes the pivot, if any.
  auto pivot_factor = [&](const Qp& prod) -> std::optional<std::size_t> {
    const auto& fs = prod.operands();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i] == pivot || fs[i] == neg) return i;
      if (pivot.kind() == QpKind::Monomial && fs[i].kind() == QpKind::Monomial &&
          fs[i].atoms().includes(pivot.atoms()))
        return i;
    }
    return std::nullopt;
  };

  std::optional<Qp> target;
  auto find = [&](auto&& self, const Qp& x) -> void {
    if (target) return;
    if (x.kind() == QpKind::WeakProd && pivot_factor(x)) {
      target = x;
      return;
    }
    for (const Qp& op : x.operands()) self(self, op);
  };
  find(find, e);
  if (!target)
    throw RewriteError(RewriteError::Kind::PivotNotFound,
                       "no weak product has the pivot as a factor");

  const auto& fs = target->operands();
  std::size_t k = *pivot_factor(*target);
  // A monomial factor containing the pivot fixes the pivot to 1 as well.
  const Qp fact = (fs[k] == neg) ? neg : pivot;
  std::vector<Qp> rewritten;
  for (std::size_t i = 0; i < fs.size(); ++i)
    rewritten.push_back(i == k ? fs[i] : resolve_against(fs[i], fact));
  Qp product = weak_product(std::move(rewritten));
  Qp local = product.kind() == QpKind::WeakProd
                 ? bookkeep_product(product.operands())
                 : product;
  return replace(e, *target, local);
}

Qp rule_decoupling(const std::vector<Qp>& factors, const Qp& rho) {
  if (factors.empty())
    throw RewriteError(RewriteError::Kind::ShapeMismatch,
                       "decoupling needs at least one factor");
  if (!detail::usable_as_pivot(rho))
    throw RewriteError(RewriteError::Kind::ShapeMismatch,
                       "decoupling requires a 0/1-valued common factor");
  std::vector<Qp> complements;
  for (const Qp& f : factors) {
    std::optional<Qp> r;
    if (f.kind() == QpKind::OneMinus) r = detail::cofactor(f.child(), rho);
    if (!r)
      throw RewriteError(RewriteError::Kind::ShapeMismatch,
                         "factor is not of the form 1 - rho*r");
    complements.push_back(one_minus(*r));
  }
  if (factors.size() == 1) return factors.front();
  return one_minus(
      weak_mul(rho, one_minus(weak_product(std::move(complements)))));
}

BudgetExceeded::BudgetExceeded(Qp partial, std::vector<std::string> residual)
    : Error("*-elimination budget exceeded"),
      partial_(std::move(partial)),
      residual_(std::move(residual)) {}

}  // namespace qpnet
