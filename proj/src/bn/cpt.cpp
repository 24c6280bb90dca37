#include <cmath>
#include <set>

#include "qpnet/network.hpp"

namespace qpnet {
namespace {

constexpr std::size_t kMaxParents = 20;
constexpr std::size_t kMaxJointNodes = 24;

std::string row_bits(std::size_t row, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i)
    if (row >> (n - 1 - i) & 1) s[i] = '1';
  return s;
}

}  // namespace

std::vector<Violation> validate(const CptNetwork& cpt) {
  std::vector<Violation> out;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < cpt.nodes.size(); ++i) {
    const std::string& id = cpt.nodes[i].id;
    if (id.empty()) out.push_back({"", "node with empty id"});
    if (!id.empty() && id[0] == '$')
      out.push_back({id, "ids starting with '$' are reserved"});
    if (!index.try_emplace(id, i).second)
      out.push_back({id, "duplicate node id"});
  }
  std::vector<std::vector<std::size_t>> parents(cpt.nodes.size());
  for (std::size_t i = 0; i < cpt.nodes.size(); ++i) {
    const CptNode& n = cpt.nodes[i];
    std::set<std::string> seen;
    for (const std::string& p : n.parents) {
      auto it = index.find(p);
      if (it == index.end())
        out.push_back({n.id, "unknown parent '" + p + "'"});
      else if (!seen.insert(p).second)
        out.push_back({n.id, "parent '" + p + "' listed twice"});
      else
        parents[i].push_back(it->second);
    }
    if (n.parents.size() > kMaxParents) {
      out.push_back({n.id, "too many parents"});
      continue;
    }
    std::size_t want = std::size_t{1} << n.parents.size();
    if (n.table.size() != want)
      out.push_back({n.id, "table has " + std::to_string(n.table.size()) +
                               " entries, expected " + std::to_string(want)});
    for (double x : n.table)
      if (!(x >= 0.0 && x <= 1.0)) {
        out.push_back({n.id, "table entries must lie in [0,1]"});
        break;
      }
  }
  if (!out.empty()) return out;

  // Cycle check by repeated removal of nodes whose parents are all placed.
  std::vector<bool> placed(cpt.nodes.size(), false);
  std::size_t count = 0;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i = 0; i < cpt.nodes.size(); ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (std::size_t p : parents[i]) ready = ready && placed[p];
      if (ready) {
        placed[i] = true;
        ++count;
        progress = true;
      }
    }
  }
  if (count < cpt.nodes.size()) out.push_back({"", "the parent relation has a cycle"});
  return out;
}

Converted from_cpt(const CptNetwork& cpt) {
  if (auto vs = validate(cpt); !vs.empty()) throw ValidationError(std::move(vs));

  std::vector<NodeSpec> nodes;
  std::map<std::string, std::optional<std::string>> priors;
  Valuation symbols;
  std::vector<std::string> order;
  std::set<std::string> created;

  auto symbol_for = [&](double theta,
                        std::string name) -> std::optional<std::string> {
    if (theta == 1.0) return std::nullopt;
    symbols.set(name, theta);
    order.push_back(name);
    return name;
  };
  // C is false whatever its parents do: NOT of an always-true root.
  auto never_true = [&](const std::string& id) {
    if (created.insert("$true").second)
      nodes.push_back({"$true", NodeKind::Root, {}, std::nullopt});
    nodes.push_back({id, NodeKind::Not, {{"$true", std::nullopt, true}},
                     std::nullopt});
  };

  for (const CptNode& c : cpt.nodes) {
    const std::size_t n = c.parents.size();
    if (n == 0) {
      double theta = c.table[0];
      if (theta == 0.0) {
        never_true(c.id);
      } else {
        nodes.push_back({c.id, NodeKind::Root, {}, std::nullopt});
        if (theta != 1.0) priors[c.id] = symbol_for(theta, "θ_" + c.id);
      }
      continue;
    }

    NodeSpec target{c.id, NodeKind::Or, {}, std::nullopt};
    for (std::size_t row = 0; row < c.table.size(); ++row) {
      double theta = c.table[row];
      if (theta == 0.0) continue;
      std::string bits = row_bits(row, n);
      auto label = symbol_for(theta, "θ_" + c.id + "_" + bits);
      if (n == 1) {
        std::string from = c.parents[0];
        if (bits == "0") {
          from = "$not:" + c.parents[0];
          if (created.insert(from).second)
            nodes.push_back({from, NodeKind::Not,
                             {{c.parents[0], std::nullopt, true}},
                             std::nullopt});
        }
        target.links.push_back({from, label, false});
        continue;
      }
      NodeSpec gate{"$and:" + c.id + ":" + bits, NodeKind::And, {}, std::nullopt};
      for (std::size_t i = 0; i < n; ++i)
        gate.links.push_back({c.parents[i], std::nullopt, bits[i] == '0'});
      target.links.push_back({gate.id, label, false});
      nodes.push_back(std::move(gate));
    }
    if (target.links.empty())
      never_true(c.id);
    else
      nodes.push_back(std::move(target));
  }

  Network net = Network::create(std::move(nodes));
  if (!priors.empty()) net = normalize_roots(net, priors);
  return {std::move(net), std::move(symbols), std::move(order)};
}

double cpt_joint_probability(const CptNetwork& cpt,
                             const std::map<std::string, bool>& values) {
  if (auto vs = validate(cpt); !vs.empty()) throw ValidationError(std::move(vs));
  const std::size_t m = cpt.nodes.size();
  if (m > kMaxJointNodes)
    throw TooManyVariables("chain-rule enumeration is limited to " +
                           std::to_string(kMaxJointNodes) + " nodes");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index.emplace(cpt.nodes[i].id, i);
  for (const auto& [id, value] : values)
    if (!index.count(id)) throw QueryError("unknown node '" + id + "'");

  double total = 0.0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << m); ++a) {
    auto value_of = [&](std::size_t i) { return (a >> i & 1) != 0; };
    bool consistent = true;
    for (const auto& [id, value] : values)
      consistent = consistent && value_of(index.at(id)) == value;
    if (!consistent) continue;
    double prob = 1.0;
    for (std::size_t i = 0; i < m && prob != 0.0; ++i) {
      const CptNode& c = cpt.nodes[i];
      std::size_t row = 0;
      for (const std::string& p : c.parents)
        row = row << 1 | (value_of(index.at(p)) ? 1 : 0);
      double theta = c.table[row];
      prob *= value_of(i) ? theta : 1.0 - theta;
    }
    total += prob;
  }
  return total;
}

}  // namespace qpnet
