#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

#include "qpnet/expand.hpp"
#include "qpnet/rewrite.hpp"
#include "rewrite_internal.hpp"

namespace qpnet {
namespace {

constexpr std::size_t kProbeCap = 4096;

class Eliminator {
 public:
  explicit Eliminator(const ElimBudget& budget) : budget_(budget) {}

  Qp run(const Qp& e) {
    Qp out = elim(e);
    if (!residual_.empty()) {
      std::vector<std::string> names;
      for (Atom a : residual_.sorted_by_name()) names.push_back(a.name());
      throw BudgetExceeded(out, std::move(names));
    }
    return out;
  }

 private:
  Qp elim(const Qp& x) {
    if (auto it = memo_.find(x.identity()); it != memo_.end())
      return it->second;
    Qp r = x;
    switch (x.kind()) {
      case QpKind::Const:
      case QpKind::Monomial:
        break;
      case QpKind::OneMinus:
        r = one_minus(elim(x.child()));
        break;
      case QpKind::StrongProd: {
        std::vector<Qp> fs;
        for (const Qp& f : x.operands()) fs.push_back(elim(f));
        r = strong_product(std::move(fs));
        break;
      }
      case QpKind::WeakProd: {
        std::vector<Qp> fs;
        for (const Qp& f : x.operands()) fs.push_back(elim(f));
        r = product(std::move(fs));
        break;
      }
      case QpKind::Sum: {
        std::vector<SumTerm> ts;
        for (std::size_t i = 0; i < x.operands().size(); ++i)
          ts.push_back({x.coefficients()[i], elim(x.operands()[i])});
        r = sum(std::move(ts));
        break;
      }
    }
    memo_.emplace(x.identity(), r);
    keep_.push_back(x);
    return r;
  }

  static void append_factors(std::vector<Qp>& out, const Qp& x) {
    for (Qp& f : factors_of(x)) out.push_back(std::move(f));
  }

  // Weak product of already decomposed factors, decomposed.
  Qp product(std::vector<Qp> input) {
    std::vector<Qp> fs;
    for (const Qp& f : input) append_factors(fs, f);
    Qp key = weak_product(fs);
    if (key.kind() != QpKind::WeakProd) return key;
    if (auto it = product_memo_.find(key); it != product_memo_.end())
      return it->second;

    Qp result = reduce(key.operands());
    product_memo_.emplace(key, result);
    return result;
  }

  Qp reduce(std::vector<Qp> fs) {
    if (!resolve_all(fs)) return Qp::zero();
    auto groups = detail::atom_components(fs);
    std::vector<Qp> parts;
    for (const auto& g : groups) {
      std::vector<Qp> members;
      for (std::size_t i : g) members.push_back(fs[i]);
      parts.push_back(members.size() == 1 ? members.front()
                                          : reduce_component(members));
      if (parts.back().is_zero()) return Qp::zero();
    }
    return strong_product(std::move(parts));
  }

  // Resolution with each 0/1-valued factor as pivot against the others,
  // until nothing changes. False when the product collapses to 0.
  bool resolve_all(std::vector<Qp>& fs) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < fs.size() && !changed; ++i) {
        if (!fs[i].boolean_valued()) continue;
        for (std::size_t j = 0; j < fs.size(); ++j) {
          if (i == j || !fs[i].support().intersects(fs[j].support())) continue;
          Qp g = resolve_against(fs[j], fs[i]);
          if (g == fs[j]) continue;
          if (g.is_zero()) return false;
          std::vector<Qp> next;
          for (std::size_t k = 0; k < fs.size(); ++k)
            if (k != j) next.push_back(fs[k]);
          append_factors(next, g);
          Qp merged = weak_product(next);
          if (merged.is_zero()) return false;
          fs = merged.kind() == QpKind::WeakProd ? merged.operands()
                                                 : factors_of(merged);
          changed = true;
          break;
        }
      }
    }
    return true;
  }

  Qp reduce_component(const std::vector<Qp>& fs) {
    if (auto d = try_decoupling(fs)) return *d;
    if (distributions_ < budget_.max_distributions) return distribute(fs);
    return expand_fallback(fs);
  }

  std::optional<Qp> try_decoupling(const std::vector<Qp>& fs) {
    std::map<std::string, std::size_t> counts;
    for (const Qp& f : fs) {
      if (f.kind() != QpKind::OneMinus) continue;
      for (Atom a : detail::monomial_part(f.child())) ++counts[a.name()];
    }
    const std::string* best = nullptr;
    std::size_t best_count = 1;
    for (const auto& [name, n] : counts) {
      if (n > best_count) {
        best = &name;
        best_count = n;
      }
    }
    if (!best) return std::nullopt;

    Atom pivot(*best);
    std::vector<Qp> group, rest;
    std::optional<AtomSet> common;
    for (const Qp& f : fs) {
      AtomSet m = f.kind() == QpKind::OneMinus
                      ? detail::monomial_part(f.child())
                      : AtomSet{};
      if (m.contains(pivot)) {
        group.push_back(f);
        common = common ? (*common & m) : m;
      } else {
        rest.push_back(f);
      }
    }
    Qp rho = Qp::monomial(*common);
    std::vector<Qp> complements;
    for (const Qp& f : group)
      complements.push_back(one_minus(*detail::cofactor(f.child(), rho)));
    Qp inner = product(std::move(complements));
    Qp decoupled = one_minus(product({rho, one_minus(inner)}));
    rest.push_back(decoupled);
    return product(std::move(rest));
  }

  static std::size_t probe_size(const Qp& x) {
    try {
      return expand(x, kProbeCap).size();
    } catch (const ExpansionLimit&) {
      return std::numeric_limits<std::size_t>::max();
    }
  }

  Qp distribute(const std::vector<Qp>& fs) {
    ++distributions_;
    std::size_t pick = fs.size();
    std::size_t pick_size = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i].kind() != QpKind::OneMinus && fs[i].kind() != QpKind::Sum)
        continue;
      std::size_t n = probe_size(fs[i]);
      if (pick == fs.size() || n < pick_size) {
        pick = i;
        pick_size = n;
      }
    }
    if (pick == fs.size()) return expand_fallback(fs);

    std::vector<Qp> rest;
    for (std::size_t i = 0; i < fs.size(); ++i)
      if (i != pick) rest.push_back(fs[i]);
    const Qp& f = fs[pick];
    std::vector<SumTerm> terms;
    auto with = [&](const Qp& g) {
      std::vector<Qp> v = rest;
      append_factors(v, g);
      return product(std::move(v));
    };
    if (f.kind() == QpKind::OneMinus) {
      terms.push_back({1, product(rest)});
      terms.push_back({-1, with(f.child())});
    } else {
      for (std::size_t i = 0; i < f.operands().size(); ++i)
        terms.push_back({f.coefficients()[i], with(f.operands()[i])});
    }
    return sum(std::move(terms));
  }

  Qp expand_fallback(const std::vector<Qp>& fs) {
    Qp whole = weak_product(fs);
    try {
      return to_qp(expand(whole, budget_.max_terms));
    } catch (const ExpansionLimit&) {
      residual_ = residual_ | whole.support();
      return whole;
    }
  }

  ElimBudget budget_;
  std::size_t distributions_ = 0;
  AtomSet residual_;
  std::unordered_map<const void*, Qp> memo_;
  std::vector<Qp> keep_;  // pins memo keys
  std::unordered_map<Qp, Qp, QpHash> product_memo_;
};

}  // namespace

Qp eliminate_star(const Qp& e, const ElimBudget& budget) {
  return Eliminator(budget).run(e);
}

}  // namespace qpnet
