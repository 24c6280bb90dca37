#include "qpnet/inference.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "../algebra/rewrite_internal.hpp"
#include "qpnet/expand.hpp"

namespace qpnet {

QpBuilder::QpBuilder(const Network& net, bool share) : net_(net), share_(share) {}

Qp QpBuilder::marginal(std::string_view node) {
  return build(net_.index_of(node));
}

Qp QpBuilder::literal(const Literal& lit) {
  Qp m = marginal(lit.node);
  return lit.positive ? m : one_minus(m);
}

Qp QpBuilder::build(std::size_t index) {
  if (share_) {
    if (auto it = memo_.find(index); it != memo_.end()) return it->second;
  }
  const NodeSpec& n = net_.nodes()[index];
  auto label_qp = [](const std::optional<std::string>& l) {
    return l ? Qp::atom(*l) : Qp::one();
  };
  auto parent_qp = [&](const Link& l) {
    Qp p = build(net_.index_of(l.from));
    return l.inhibitory ? one_minus(p) : p;
  };

  Qp out;
  switch (n.kind) {
    case NodeKind::Root:
      out = Qp::one();
      break;
    case NodeKind::And: {
      std::vector<Qp> fs{label_qp(n.joint_label)};
      for (const Link& l : n.links) fs.push_back(parent_qp(l));
      out = weak_product(std::move(fs));
      break;
    }
    case NodeKind::Or: {
      // Validation guarantees at least one link, so the product is never
      // the empty one.
      assert(!n.links.empty());
      std::vector<Qp> fs;
      for (const Link& l : n.links)
        fs.push_back(one_minus(weak_mul(label_qp(l.label), parent_qp(l))));
      out = one_minus(weak_product(std::move(fs)));
      break;
    }
    case NodeKind::Not:
      out = weak_mul(label_qp(net_.gate_label(n)), parent_qp(n.links.front()));
      break;
  }
  if (share_) memo_.emplace(index, out);
  return out;
}

Qp marginal_qp(const Network& net, std::string_view node, bool share) {
  return QpBuilder(net, share).marginal(node);
}

Qp event_qp(const Network& net, const std::vector<Literal>& lits) {
  if (lits.empty()) throw QueryError("an event needs at least one literal");
  std::set<std::string> seen;
  for (const Literal& l : lits)
    if (!seen.insert(l.node).second)
      throw QueryError("node '" + l.node + "' occurs twice in the event");
  QpBuilder b(net);
  std::vector<Qp> fs;
  for (const Literal& l : lits) fs.push_back(b.literal(l));
  return weak_product(std::move(fs));
}

namespace {

// Divides out factors common to two ordinary products: equal factors, and
// the atoms shared by their monomial factors.
void cancel_common(Qp& num, Qp& den, std::vector<Qp>& cancelled) {
  std::vector<Qp> ns = factors_of(num), ds = factors_of(den);
  auto split_monomial = [](std::vector<Qp>& fs) {
    AtomSet m;
    std::vector<Qp> rest;
    for (Qp& f : fs) {
      if (f.kind() == QpKind::Monomial)
        m = m | f.atoms();
      else if (!f.is_one())
        rest.push_back(std::move(f));
    }
    fs = std::move(rest);
    return m;
  };
  AtomSet nm = split_monomial(ns), dm = split_monomial(ds);
  AtomSet common = nm & dm;
  if (!common.empty()) cancelled.push_back(Qp::monomial(common));

  std::vector<Qp> nrest{Qp::monomial(nm - common)}, drest{Qp::monomial(dm - common)};
  std::vector<bool> used(ds.size(), false);
  for (const Qp& f : ns) {
    bool matched = false;
    for (std::size_t j = 0; j < ds.size() && !matched; ++j) {
      if (!used[j] && ds[j] == f) {
        used[j] = true;
        matched = true;
      }
    }
    if (matched)
      cancelled.push_back(f);
    else
      nrest.push_back(f);
  }
  for (std::size_t j = 0; j < ds.size(); ++j)
    if (!used[j]) drest.push_back(ds[j]);
  num = strong_product(std::move(nrest));
  den = strong_product(std::move(drest));
}

}  // namespace

ConditionalQp conditional_qp(const Network& net, const Query& q,
                             const ElimBudget& budget) {
  check_query(net, q);

  struct Item {
    Literal lit;
    bool target;
    Qp qp;
  };
  std::vector<Item> items;
  QpBuilder b(net);
  auto add = [&](const Literal& l, bool target) {
    for (Item& it : items) {
      if (it.lit == l) {
        it.target = it.target || target;
        return;
      }
    }
    items.push_back({l, target, b.literal(l)});
  };
  for (const Literal& l : q.targets) add(l, true);
  for (const Literal& l : q.evidence) add(l, false);

  // Evidence that shares no atom with the rest of the query appears in
  // numerator and denominator alike.
  std::vector<Qp> qps;
  for (const Item& it : items) qps.push_back(it.qp);
  std::vector<bool> cancel(items.size(), false);
  for (const auto& group : detail::atom_components(qps)) {
    bool has_target = std::any_of(group.begin(), group.end(),
                                  [&](std::size_t i) { return items[i].target; });
    if (!has_target)
      for (std::size_t i : group) cancel[i] = true;
  }

  ConditionalQp out;
  std::vector<Qp> num, den, dropped;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (cancel[i]) {
      dropped.push_back(items[i].qp);
      continue;
    }
    num.push_back(items[i].qp);
    if (std::find(q.evidence.begin(), q.evidence.end(), items[i].lit) !=
        q.evidence.end())
      den.push_back(items[i].qp);
  }
  if (!dropped.empty())
    out.cancelled.push_back(eliminate_star(weak_product(std::move(dropped)), budget));
  out.numerator = eliminate_star(weak_product(std::move(num)), budget);
  out.denominator = eliminate_star(weak_product(std::move(den)), budget);
  cancel_common(out.numerator, out.denominator, out.cancelled);
  return out;
}

namespace {

template <typename Number, typename Eval>
Number ratio(const ConditionalQp& c, Eval eval) {
  Number den = eval(c.denominator);
  Number scale = 1;
  for (const Qp& f : c.cancelled) scale *= eval(f);
  if (den == 0 || scale == 0) throw ZeroEvidence();
  return eval(c.numerator) / den;
}

}  // namespace

double conditional_probability(const ConditionalQp& c, const Valuation& v) {
  return ratio<double>(c, [&](const Qp& e) { return evaluate(e, v); });
}

Rational conditional_probability_exact(const ConditionalQp& c,
                                       const Valuation& v) {
  return ratio<Rational>(c, [&](const Qp& e) { return evaluate_exact(e, v); });
}

double conditional_probability(const Network& net, const Query& q,
                               const Valuation& v, const ElimBudget& budget) {
  return conditional_probability(conditional_qp(net, q, budget), v);
}

BoostResult boosted_conditional(const ConditionalQp& c, const Valuation& v,
                                Atom boosted, std::pair<double, double> probes) {
  auto [a, b] = probes;
  if (a == b) throw std::invalid_argument("boost probes must differ");
  const double p0 = v.at(boosted);
  for (const Qp& f : c.cancelled)
    if (evaluate(f, v) == 0.0) throw ZeroEvidence();

  Valuation probe = v;
  auto at = [&](const Qp& e, double p) {
    probe.set(boosted, p);
    return evaluate(e, probe);
  };
  BoostCoefficients k;
  double na = at(c.numerator, a), nb = at(c.numerator, b);
  double da = at(c.denominator, a), db = at(c.denominator, b);
  k.c2 = (nb - na) / (b - a);
  k.c1 = na - k.c2 * a;
  k.c4 = (db - da) / (b - a);
  k.c3 = da - k.c4 * a;
  double den = k.c3 + k.c4 * p0;
  if (den == 0.0)
    throw DegenerateDenominator("interpolated denominator vanishes at " +
                                boosted.name() + " = " + std::to_string(p0));
  return {(k.c1 + k.c2 * p0) / den, k};
}

BoostResult boosted_conditional(const Network& net, const Query& q,
                                const Valuation& v, Atom boosted,
                                std::pair<double, double> probes,
                                const ElimBudget& budget) {
  return boosted_conditional(conditional_qp(net, q, budget), v, boosted, probes);
}

}  // namespace qpnet
