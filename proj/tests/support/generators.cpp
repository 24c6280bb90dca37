#include "generators.hpp"

#include <algorithm>

namespace qpnet::testing {
namespace {

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<Atom> sample(Rng& rng, std::vector<Atom> pool, std::size_t k) {
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(std::min(k, pool.size())),
             pool.end());
  return pool;
}

Qp random_expr(Rng& rng, const std::vector<Atom>& pool, int depth, bool sums) {
  if (pool.empty()) return Qp::constant(coin(rng, 0.5));
  if (depth <= 0 || coin(rng, 0.25)) {
    if (coin(rng, 0.08)) return Qp::constant(coin(rng, 0.5));
    auto atoms = sample(rng, pool, uniform(rng, 1, std::min<std::size_t>(3, pool.size())));
    return Qp::monomial(AtomSet(atoms));
  }
  int kind = static_cast<int>(uniform(rng, 0, sums ? 3 : 2));
  switch (kind) {
    case 0:
      return one_minus(random_expr(rng, pool, depth - 1, sums));
    case 1: {
      std::vector<Qp> fs;
      for (std::size_t i = uniform(rng, 2, 3); i > 0; --i)
        fs.push_back(random_expr(rng, pool, depth - 1, sums));
      return weak_product(std::move(fs));
    }
    case 2: {
      std::vector<Atom> shuffled = pool;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      std::size_t cut = shuffled.size() / 2;
      std::vector<Atom> left(shuffled.begin(), shuffled.begin() + cut);
      std::vector<Atom> right(shuffled.begin() + cut, shuffled.end());
      return strong_mul(random_expr(rng, left, depth - 1, sums),
                        random_expr(rng, right, depth - 1, sums));
    }
    default: {
      std::vector<SumTerm> ts;
      static constexpr std::int64_t coeffs[] = {-2, -1, 1, 1, 2};
      for (std::size_t i = uniform(rng, 2, 3); i > 0; --i)
        ts.push_back({coeffs[uniform(rng, 0, 4)],
                      random_expr(rng, pool, depth - 1, sums)});
      return sum(std::move(ts));
    }
  }
}

}  // namespace

std::vector<Atom> atom_pool(std::size_t n, const std::string& prefix) {
  std::vector<Atom> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(prefix + std::to_string(i));
  return out;
}

Qp random_qp(Rng& rng, const std::vector<Atom>& pool, int depth) {
  return random_expr(rng, pool, depth, true);
}

Qp random_boolean_qp(Rng& rng, const std::vector<Atom>& pool, int depth) {
  return random_expr(rng, pool, depth, false);
}

Valuation random_valuation(Rng& rng, const AtomSet& atoms) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Valuation v;
  for (Atom a : atoms) v.set(a, u(rng));
  return v;
}

Valuation random_valuation(Rng& rng, const std::vector<std::string>& names) {
  std::vector<Atom> atoms;
  for (const std::string& n : names) atoms.emplace_back(n);
  return random_valuation(rng, AtomSet(atoms));
}

Network random_network(Rng& rng, const NetworkShape& shape) {
  const std::size_t n = uniform(rng, 2, std::max<std::size_t>(2, shape.max_nodes));
  std::size_t used = 0;
  auto fresh = [&]() -> std::optional<std::string> {
    if (used >= shape.max_atoms || coin(rng, shape.unlabelled)) return std::nullopt;
    return "x" + std::to_string(used++);
  };
  auto parents = [&](std::size_t i, std::size_t k) {
    std::vector<std::size_t> idx(i);
    for (std::size_t j = 0; j < i; ++j) idx[j] = j;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(k);
    return idx;
  };
  auto id = [](std::size_t i) { return "N" + std::to_string(i); };

  std::vector<NodeSpec> nodes;
  nodes.push_back({id(0), NodeKind::Root, {}, std::nullopt});
  for (std::size_t i = 1; i < n; ++i) {
    NodeSpec s{id(i), NodeKind::Or, {}, std::nullopt};
    double r = std::uniform_real_distribution<double>(0, 1)(rng);
    if (r < 0.08) {
      s.kind = NodeKind::Root;
    } else if (r < 0.35 && i >= 2) {
      s.kind = NodeKind::And;
      s.joint_label = fresh();
      for (std::size_t p : parents(i, uniform(rng, 2, std::min<std::size_t>(3, i))))
        s.links.push_back({id(p), std::nullopt, coin(rng, shape.inhibitory)});
    } else if (r < 0.5) {
      s.kind = NodeKind::Not;
      std::size_t p = parents(i, 1)[0];
      if (coin(rng, 0.5))
        s.links.push_back({id(p), fresh(), true});
      else {
        s.links.push_back({id(p), std::nullopt, true});
        s.joint_label = fresh();
      }
    } else {
      std::size_t k = uniform(rng, 1, std::min(shape.max_or_fanin, i));
      for (std::size_t p : parents(i, k))
        s.links.push_back({id(p), fresh(), coin(rng, shape.inhibitory)});
    }
    nodes.push_back(std::move(s));
  }
  return Network::create(std::move(nodes));
}

std::vector<Literal> random_literals(Rng& rng, const Network& net, std::size_t max) {
  std::vector<std::size_t> idx(net.nodes().size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::size_t k = uniform(rng, 1, std::min(max, idx.size()));
  std::vector<Literal> out;
  for (std::size_t i = 0; i < k; ++i)
    out.push_back({net.nodes()[idx[i]].id, coin(rng, 0.7)});
  return out;
}

CnfFormula random_3cnf(Rng& rng, std::size_t n, double ratio) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("v" + std::to_string(i));
  auto m = static_cast<std::size_t>(std::llround(ratio * static_cast<double>(n)));
  std::vector<Clause> clauses;
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<std::string> pick = vars;
    std::shuffle(pick.begin(), pick.end(), rng);
    std::vector<SatLiteral> lits;
    for (std::size_t j = 0; j < std::min<std::size_t>(3, n); ++j)
      lits.push_back({pick[j], coin(rng, 0.5)});
    clauses.emplace_back(lits);
  }
  return CnfFormula(std::move(clauses), vars);
}

CptNetwork random_cpt(Rng& rng, std::size_t max_nodes, std::size_t max_parents) {
  CptNetwork cpt;
  std::size_t n = uniform(rng, 1, max_nodes);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (std::size_t i = 0; i < n; ++i) {
    CptNode node{"C" + std::to_string(i), {}, {}};
    std::size_t k = uniform(rng, 0, std::min(max_parents, i));
    std::vector<std::size_t> idx(i);
    for (std::size_t j = 0; j < i; ++j) idx[j] = j;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t j = 0; j < k; ++j) node.parents.push_back("C" + std::to_string(idx[j]));
    for (std::size_t row = 0; row < (std::size_t{1} << k); ++row) {
      double r = std::uniform_real_distribution<double>(0, 1)(rng);
      node.table.push_back(r < 0.15 ? 0.0 : r < 0.3 ? 1.0 : u(rng));
    }
    cpt.nodes.push_back(std::move(node));
  }
  return cpt;
}

}  // namespace qpnet::testing
