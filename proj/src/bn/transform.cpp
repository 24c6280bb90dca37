#include <set>

#include "qpnet/network.hpp"

namespace qpnet {
namespace {

std::string prior_root_id(const std::string& id) { return "$" + id + "'"; }

bool already_normalized(const Network& net, const NodeSpec& n,
                        const std::string& prior) {
  if (n.kind != NodeKind::Or || n.links.size() != 1) return false;
  const Link& l = n.links.front();
  return l.from == prior_root_id(n.id) && !l.inhibitory && l.label == prior &&
         net.node(l.from).kind == NodeKind::Root;
}

}  // namespace

Network normalize_roots(
    const Network& net,
    const std::map<std::string, std::optional<std::string>>& priors) {
  std::vector<NodeSpec> out;
  for (const auto& [id, prior] : priors) {
    if (!net.contains(id)) throw NotARoot("unknown node '" + id + "'");
    const NodeSpec& n = net.node(id);
    bool done = prior && already_normalized(net, n, *prior);
    if (n.kind != NodeKind::Root && !done)
      throw NotARoot("'" + id + "' is not a root");
  }
  for (const NodeSpec& n : net.nodes()) {
    auto it = priors.find(n.id);
    if (it == priors.end() || !it->second || n.kind != NodeKind::Root) {
      out.push_back(n);
      continue;
    }
    out.push_back({prior_root_id(n.id), NodeKind::Root, {}, std::nullopt});
    out.push_back({n.id,
                   NodeKind::Or,
                   {{prior_root_id(n.id), it->second, false}},
                   std::nullopt});
  }
  return Network::create(std::move(out));
}

Network eliminate_inhibitory(const Network& net) {
  std::vector<NodeSpec> out;
  std::set<std::string> created;
  std::vector<NodeSpec> extra;
  for (const NodeSpec& n : net.nodes()) {
    NodeSpec copy = n;
    if (n.kind == NodeKind::And || n.kind == NodeKind::Or) {
      for (Link& l : copy.links) {
        if (!l.inhibitory) continue;
        std::string not_id = "$not:" + l.from;
        // An existing `$not:A` has the same meaning; reuse it.
        if (!net.contains(not_id) && created.insert(not_id).second)
          extra.push_back({not_id,
                           NodeKind::Not,
                           {{l.from, std::nullopt, true}},
                           std::nullopt});
        l.from = not_id;
        l.inhibitory = false;
      }
    }
    out.push_back(std::move(copy));
  }
  for (NodeSpec& n : extra) out.push_back(std::move(n));
  return Network::create(std::move(out));
}

}  // namespace qpnet
