#include <algorithm>

#include "json.hpp"

#include "qpnet/network.hpp"

namespace qpnet {
namespace {

using nlohmann::ordered_json;

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const ordered_json& member(const ordered_json& obj, const char* key,
                           const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

std::string string_member(const ordered_json& obj, const char* key,
                          const std::string& where) {
  const ordered_json& v = member(obj, key, where);
  if (!v.is_string())
    throw ParseError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

// A label is a symbol or the number 1; absent or null also means 1.
std::optional<std::string> label_member(const ordered_json& obj, const char* key,
                                        const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number() && it->get<double>() == 1.0) return std::nullopt;
  throw ParseError(where + ": \"" + key +
                   "\" must be a symbol or the number 1");
}

const ordered_json& node_array(const ordered_json& doc) {
  if (!doc.is_object()) throw ParseError("top level must be an object");
  const ordered_json& nodes = member(doc, "nodes", "document");
  if (!nodes.is_array()) throw ParseError("\"nodes\" must be an array");
  return nodes;
}

std::string where_of(std::size_t i, const ordered_json& node) {
  auto it = node.find("id");
  if (it != node.end() && it->is_string())
    return "node '" + it->get<std::string>() + "'";
  return "node #" + std::to_string(i + 1);
}

}  // namespace

Network read_network(const std::string& json_text) {
  ordered_json doc = parse_json(json_text);
  std::vector<NodeSpec> specs;
  const ordered_json& nodes = node_array(doc);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const ordered_json& n = nodes[i];
    std::string where = where_of(i, n);
    if (!n.is_object()) throw ParseError(where + ": must be an object");
    NodeSpec spec;
    spec.id = string_member(n, "id", where);
    std::string kind = string_member(n, "kind", where);
    auto parsed = parse_node_kind(kind);
    if (!parsed) throw ParseError(where + ": unknown kind '" + kind + "'");
    spec.kind = *parsed;
    spec.joint_label = label_member(n, "joint_label", where);
    if (auto it = n.find("links"); it != n.end()) {
      if (!it->is_array()) throw ParseError(where + ": \"links\" must be an array");
      for (const ordered_json& l : *it) {
        if (!l.is_object()) throw ParseError(where + ": links must be objects");
        Link link;
        link.from = string_member(l, "from", where);
        link.label = label_member(l, "label", where);
        if (auto inh = l.find("inhibitory"); inh != l.end()) {
          if (!inh->is_boolean())
            throw ParseError(where + ": \"inhibitory\" must be true or false");
          link.inhibitory = inh->get<bool>();
        }
        spec.links.push_back(std::move(link));
      }
    }
    specs.push_back(std::move(spec));
  }
  return Network::create(std::move(specs));
}

std::string write_network(const Network& net) {
  auto label_json = [](const std::optional<std::string>& l) {
    return l ? ordered_json(*l) : ordered_json(1);
  };
  ordered_json nodes = ordered_json::array();
  for (const NodeSpec& n : net.nodes()) {
    ordered_json node;
    node["id"] = n.id;
    node["kind"] = std::string(to_string(n.kind));
    if (n.joint_label) node["joint_label"] = *n.joint_label;
    ordered_json links = ordered_json::array();
    for (const Link& l : n.links)
      links.push_back({{"from", l.from},
                       {"label", label_json(l.label)},
                       {"inhibitory", l.inhibitory}});
    node["links"] = std::move(links);
    nodes.push_back(std::move(node));
  }
  return ordered_json{{"nodes", std::move(nodes)}}.dump(2) + "\n";
}

CptNetwork read_cpt(const std::string& json_text) {
  ordered_json doc = parse_json(json_text);
  CptNetwork cpt;
  const ordered_json& nodes = node_array(doc);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const ordered_json& n = nodes[i];
    std::string where = where_of(i, n);
    if (!n.is_object()) throw ParseError(where + ": must be an object");
    CptNode node;
    node.id = string_member(n, "id", where);
    if (auto it = n.find("parents"); it != n.end()) {
      if (!it->is_array()) throw ParseError(where + ": \"parents\" must be an array");
      for (const ordered_json& p : *it) {
        if (!p.is_string()) throw ParseError(where + ": parents must be strings");
        node.parents.push_back(p.get<std::string>());
      }
    }
    const ordered_json& table = member(n, "table", where);
    if (!table.is_array()) throw ParseError(where + ": \"table\" must be an array");
    for (const ordered_json& x : table) {
      if (!x.is_number()) throw ParseError(where + ": table entries must be numbers");
      node.table.push_back(x.get<double>());
    }
    cpt.nodes.push_back(std::move(node));
  }
  return cpt;
}

std::string write_cpt(const CptNetwork& cpt) {
  ordered_json nodes = ordered_json::array();
  for (const CptNode& n : cpt.nodes)
    nodes.push_back({{"id", n.id}, {"parents", n.parents}, {"table", n.table}});
  return ordered_json{{"nodes", std::move(nodes)}}.dump(2) + "\n";
}

Valuation read_valuation(const std::string& json_text) {
  ordered_json doc = parse_json(json_text);
  if (!doc.is_object()) throw ParseError("valuation must be a JSON object");
  Valuation v;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_number())
      throw ParseError("value of '" + key + "' must be a number");
    try {
      v.set(key, value.get<double>());
    } catch (const InvalidValuation& e) {
      throw ParseError("'" + key + "': " + e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError("'" + key + "' is not a valid symbol");
    }
  }
  return v;
}

std::string write_valuation(const Valuation& v,
                            const std::vector<std::string>& order) {
  std::vector<std::string> keys = order;
  std::vector<std::string> rest;
  for (const auto& [atom, value] : v)
    if (std::find(order.begin(), order.end(), atom.name()) == order.end())
      rest.push_back(atom.name());
  std::sort(rest.begin(), rest.end());
  keys.insert(keys.end(), rest.begin(), rest.end());
  ordered_json doc = ordered_json::object();
  for (const std::string& k : keys) doc[k] = v.at(Atom(k));
  return doc.dump(2) + "\n";
}

}  // namespace qpnet
