#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qpnet/error.hpp"
#include "qpnet/valuation.hpp"

namespace qpnet {

enum class NodeKind { Root, And, Or, Not };

std::string_view to_string(NodeKind kind);
std::optional<NodeKind> parse_node_kind(std::string_view text);

/// Incoming link. An empty label stands for the constant 1.
struct Link {
  std::string from;
  std::optional<std::string> label;
  bool inhibitory = false;

  friend bool operator==(const Link&, const Link&) = default;
};

/// A node and its incoming links.
///
/// AND nodes carry their probability on `joint_label`; their links are
/// unlabelled. OR links each carry a label. A NOT node has one inhibitory
/// link whose probability sits either on the link or on `joint_label`, not
/// both.
struct NodeSpec {
  std::string id;
  NodeKind kind = NodeKind::Root;
  std::vector<Link> links;
  std::optional<std::string> joint_label;

  friend bool operator==(const NodeSpec&, const NodeSpec&) = default;
};

struct Violation {
  std::string node;  // empty for network-wide problems
  std::string message;
};

/// All problems found in `nodes`, in a stable order. Empty means valid.
std::vector<Violation> validate(const std::vector<NodeSpec>& nodes);

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Immutable, validated AND-OR-NOT network.
class Network {
 public:
  /// Throws ValidationError.
  static Network create(std::vector<NodeSpec> nodes);

  /// Nodes in the order given at construction.
  const std::vector<NodeSpec>& nodes() const { return nodes_; }
  /// Node indices, parents before children; ties keep construction order.
  const std::vector<std::size_t>& topological_order() const { return order_; }

  bool contains(std::string_view id) const;
  /// Throws QueryError for an unknown id.
  const NodeSpec& node(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;

  /// Every label symbol, sorted.
  std::vector<std::string> labels() const;

  /// The probability symbol a node multiplies in (AND joint label, NOT label),
  /// empty for 1. Root and OR nodes have none.
  std::optional<std::string> gate_label(const NodeSpec& node) const;

 private:
  Network() = default;

  std::vector<NodeSpec> nodes_;
  std::vector<std::size_t> order_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Roots in `priors` with a symbolic prior become OR nodes fed by a fresh
/// unit root `$R'` through a link labelled with the prior. A prior of
/// nullopt (the constant 1) leaves the root alone. Nodes already produced by
/// this transformation are recognized, which makes it idempotent.
/// Throws NotARoot.
Network normalize_roots(
    const Network& net,
    const std::map<std::string, std::optional<std::string>>& priors);

/// Inhibitory links into AND and OR nodes are rerouted through shared NOT
/// nodes `$not:A` (label 1), one per parent A.
Network eliminate_inhibitory(const Network& net);

/// Boolean network given by conditional probability tables.
struct CptNode {
  std::string id;
  std::vector<std::string> parents;
  /// P(id = true | parents); entry index has the first parent as its most
  /// significant bit. A root has a single entry, its prior.
  std::vector<double> table;

  friend bool operator==(const CptNode&, const CptNode&) = default;
};

struct CptNetwork {
  std::vector<CptNode> nodes;

  friend bool operator==(const CptNetwork&, const CptNetwork&) = default;
};

/// Problems with a CPT network: table sizes, ranges, parents, cycles.
std::vector<Violation> validate(const CptNetwork& cpt);

struct Converted {
  Network network;
  /// Symbol -> numeric probability for every fresh label.
  Valuation symbols;
  /// Symbols in creation order, for stable output.
  std::vector<std::string> symbol_order;
};

/// Builds an equivalent AND-OR-NOT network. Symbols are named
/// `θ_<node>_<rowbits>` (`θ_<node>` for root priors); entries equal to 1 need
/// no symbol and entries equal to 0 produce no node. Throws ValidationError.
Converted from_cpt(const CptNetwork& cpt);

/// P(nodes take the given values) by the chain rule over every joint
/// assignment. At most 24 nodes.
double cpt_joint_probability(const CptNetwork& cpt,
                             const std::map<std::string, bool>& values);

// JSON files.
Network read_network(const std::string& json_text);
std::string write_network(const Network& net);
CptNetwork read_cpt(const std::string& json_text);
std::string write_cpt(const CptNetwork& cpt);
/// Flat object: symbol -> number.
Valuation read_valuation(const std::string& json_text);
std::string write_valuation(const Valuation& v,
                            const std::vector<std::string>& order = {});

}  // namespace qpnet
