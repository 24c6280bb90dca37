#include <algorithm>
#include <queue>
#include <set>

#include "qpnet/network.hpp"

namespace qpnet {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Root: return "root";
    case NodeKind::And: return "and";
    case NodeKind::Or: return "or";
    case NodeKind::Not: return "not";
  }
  return "?";
}

std::optional<NodeKind> parse_node_kind(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (s == "root") return NodeKind::Root;
  if (s == "and") return NodeKind::And;
  if (s == "or") return NodeKind::Or;
  if (s == "not") return NodeKind::Not;
  return std::nullopt;
}

namespace {

std::string describe(const std::vector<Violation>& vs) {
  std::string out = "invalid network";
  for (const Violation& v : vs) {
    out += "\n  ";
    if (!v.node.empty()) out += v.node + ": ";
    out += v.message;
  }
  return out;
}

bool bad_symbol(const std::string& s) { return s.empty() || s == "0" || s == "1"; }

// Kahn's algorithm; picks the lowest pending index first so the order is
// stable. Returns fewer indices than nodes when there is a cycle.
std::vector<std::size_t> topo_sort(
    std::size_t n, const std::vector<std::vector<std::size_t>>& parents) {
  std::vector<std::vector<std::size_t>> children(n);
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p : parents[i]) {
      children[p].push_back(i);
      ++indegree[i];
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>>
      ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push(i);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t i = ready.top();
    ready.pop();
    order.push_back(i);
    for (std::size_t c : children[i])
      if (--indegree[c] == 0) ready.push(c);
  }
  return order;
}

}  // namespace

std::vector<Violation> validate(const std::vector<NodeSpec>& nodes) {
  std::vector<Violation> out;
  auto report = [&](const std::string& node, std::string msg) {
    out.push_back({node, std::move(msg)});
  };

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id.empty()) report("", "node with empty id");
    if (!index.try_emplace(nodes[i].id, i).second)
      report(nodes[i].id, "duplicate node id");
  }

  std::map<std::string, std::string> label_owner;
  auto claim = [&](const std::string& node, const std::string& label) {
    if (bad_symbol(label)) {
      report(node, "'" + label + "' is not a valid label symbol");
      return;
    }
    auto [it, inserted] = label_owner.try_emplace(label, node);
    if (!inserted)
      report(node, "label '" + label + "' is already used by " +
                       (it->second == node ? "another link of this node"
                                           : "node " + it->second));
  };

  std::vector<std::vector<std::size_t>> parents(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NodeSpec& n = nodes[i];
    std::set<std::string> seen;
    for (const Link& l : n.links) {
      auto it = index.find(l.from);
      if (it == index.end()) {
        report(n.id, "link from unknown node '" + l.from + "'");
      } else if (!seen.insert(l.from).second) {
        report(n.id, "more than one link from '" + l.from + "'");
      } else {
        parents[i].push_back(it->second);
      }
    }

    std::size_t arity = n.links.size();
    switch (n.kind) {
      case NodeKind::Root:
        if (arity != 0) report(n.id, "a root has no incoming links");
        if (n.joint_label) report(n.id, "a root has no joint label");
        break;
      case NodeKind::And:
        if (arity < 2) report(n.id, "an AND node needs at least 2 parents");
        for (const Link& l : n.links)
          if (l.label)
            report(n.id, "AND links are unlabelled; use the joint label");
        if (n.joint_label) claim(n.id, *n.joint_label);
        break;
      case NodeKind::Or:
        if (arity < 1) report(n.id, "an OR node needs at least 1 parent");
        if (n.joint_label) report(n.id, "an OR node has no joint label");
        for (const Link& l : n.links)
          if (l.label) claim(n.id, *l.label);
        break;
      case NodeKind::Not:
        if (arity != 1) {
          report(n.id, "a NOT node has exactly 1 parent");
        } else {
          const Link& l = n.links.front();
          if (!l.inhibitory) report(n.id, "a NOT node's link must be inhibitory");
          if (l.label && n.joint_label)
            report(n.id, "a NOT node is labelled on its link or jointly, not both");
          if (l.label) claim(n.id, *l.label);
        }
        if (n.joint_label) claim(n.id, *n.joint_label);
        break;
    }
  }

  std::vector<std::size_t> order = topo_sort(nodes.size(), parents);
  if (order.size() < nodes.size()) {
    std::vector<bool> done(nodes.size(), false);
    for (std::size_t i : order) done[i] = true;
    std::string members;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (done[i]) continue;
      if (!members.empty()) members += ", ";
      members += nodes[i].id;
    }
    report("", "cycle among nodes " + members);
  }
  return out;
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(describe(violations)), violations_(std::move(violations)) {}

Network Network::create(std::vector<NodeSpec> nodes) {
  if (auto vs = validate(nodes); !vs.empty()) throw ValidationError(std::move(vs));
  Network net;
  net.nodes_ = std::move(nodes);
  std::vector<std::vector<std::size_t>> parents(net.nodes_.size());
  for (std::size_t i = 0; i < net.nodes_.size(); ++i)
    net.index_.emplace(net.nodes_[i].id, i);
  for (std::size_t i = 0; i < net.nodes_.size(); ++i)
    for (const Link& l : net.nodes_[i].links)
      parents[i].push_back(net.index_.at(l.from));
  net.order_ = topo_sort(net.nodes_.size(), parents);
  return net;
}

bool Network::contains(std::string_view id) const {
  return index_.count(std::string(id)) != 0;
}

std::size_t Network::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end())
    throw QueryError("unknown node '" + std::string(id) + "'");
  return it->second;
}

const NodeSpec& Network::node(std::string_view id) const {
  return nodes_[index_of(id)];
}

std::vector<std::string> Network::labels() const {
  std::vector<std::string> out;
  for (const NodeSpec& n : nodes_) {
    if (n.joint_label) out.push_back(*n.joint_label);
    for (const Link& l : n.links)
      if (l.label) out.push_back(*l.label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> Network::gate_label(const NodeSpec& node) const {
  if (node.kind == NodeKind::And) return node.joint_label;
  if (node.kind == NodeKind::Not)
    return node.joint_label ? node.joint_label : node.links.front().label;
  return std::nullopt;
}

}  // namespace qpnet
