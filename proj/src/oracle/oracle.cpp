#include "qpnet/oracle.hpp"

#include <cstdint>

namespace qpnet {
namespace {

constexpr int kAlways = -1;

struct CompiledLink {
  std::size_t parent;
  int label;  // bit index into the outcome mask, or kAlways
  bool inhibitory;
};

struct CompiledNode {
  NodeKind kind;
  int gate;  // AND joint label / NOT label bit, or kAlways
  std::vector<CompiledLink> links;
};

// Network rewritten over label bit indices, in topological order.
struct Compiled {
  std::vector<Atom> atoms;
  std::vector<std::size_t> order;
  std::vector<CompiledNode> nodes;

  explicit Compiled(const Network& net) {
    for (const std::string& l : net.labels()) atoms.emplace_back(l);
    auto bit = [&](const std::optional<std::string>& label) {
      if (!label) return kAlways;
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i].name() == *label) return static_cast<int>(i);
      return kAlways;
    };
    order = net.topological_order();
    for (const NodeSpec& n : net.nodes()) {
      CompiledNode c{n.kind, bit(net.gate_label(n)), {}};
      for (const Link& l : n.links) {
        // A NOT node's label is its gate; its link is otherwise unlabelled.
        int lb = n.kind == NodeKind::Not ? kAlways : bit(l.label);
        c.links.push_back({net.index_of(l.from), lb, l.inhibitory});
      }
      nodes.push_back(std::move(c));
    }
  }

  void run(std::uint64_t mask, std::vector<char>& truth) const {
    auto ok = [&](int b) { return b == kAlways || (mask >> b & 1) != 0; };
    for (std::size_t i : order) {
      const CompiledNode& n = nodes[i];
      auto fires = [&](const CompiledLink& l) {
        bool parent = truth[l.parent] != 0;
        return (l.inhibitory ? !parent : parent) && ok(l.label);
      };
      bool value = false;
      switch (n.kind) {
        case NodeKind::Root:
          value = true;
          break;
        case NodeKind::And:
          value = ok(n.gate);
          for (const CompiledLink& l : n.links) value = value && fires(l);
          break;
        case NodeKind::Or:
          for (const CompiledLink& l : n.links) value = value || fires(l);
          break;
        case NodeKind::Not:
          value = ok(n.gate) && fires(n.links.front());
          break;
      }
      truth[i] = value;
    }
  }
};

std::vector<std::pair<std::size_t, bool>> resolve(
    const Network& net, const std::vector<Literal>& lits) {
  std::vector<std::pair<std::size_t, bool>> out;
  for (const Literal& l : lits) out.emplace_back(net.index_of(l.node), l.positive);
  return out;
}

template <typename Number>
Number enumerate(const Network& net, const std::vector<Literal>& lits,
                 const Valuation& v, std::size_t max_atoms) {
  Compiled c(net);
  if (c.atoms.size() > max_atoms || c.atoms.size() > 62)
    throw TooManyAtoms("network has " + std::to_string(c.atoms.size()) +
                       " label symbols; enumeration is limited to " +
                       std::to_string(max_atoms));
  auto want = resolve(net, lits);
  std::vector<Number> value, complement;
  for (Atom a : c.atoms) {
    Number x(v.at(a));
    value.push_back(x);
    complement.push_back(Number(1) - x);
  }
  std::vector<char> truth(net.nodes().size());
  Number total(0);
  const std::uint64_t outcomes = std::uint64_t{1} << c.atoms.size();
  for (std::uint64_t mask = 0; mask < outcomes; ++mask) {
    c.run(mask, truth);
    bool hit = true;
    for (const auto& [i, positive] : want) hit = hit && (truth[i] != 0) == positive;
    if (!hit) continue;
    Number w(1);
    for (std::size_t b = 0; b < c.atoms.size(); ++b)
      w *= (mask >> b & 1) ? value[b] : complement[b];
    total += w;
  }
  return total;
}

}  // namespace

std::vector<bool> evaluate_outcome(const Network& net, const AtomSet& succeeded) {
  Compiled c(net);
  if (c.atoms.size() > 62) throw TooManyAtoms("too many label symbols");
  std::uint64_t mask = 0;
  for (std::size_t b = 0; b < c.atoms.size(); ++b)
    if (succeeded.contains(c.atoms[b])) mask |= std::uint64_t{1} << b;
  std::vector<char> truth(net.nodes().size());
  c.run(mask, truth);
  return {truth.begin(), truth.end()};
}

double enumerate_probability(const Network& net, const std::vector<Literal>& lits,
                             const Valuation& v, std::size_t max_atoms) {
  return enumerate<double>(net, lits, v, max_atoms);
}

Rational enumerate_probability_exact(const Network& net,
                                     const std::vector<Literal>& lits,
                                     const Valuation& v, std::size_t max_atoms) {
  return enumerate<Rational>(net, lits, v, max_atoms);
}

double enumerate_conditional(const Network& net, const Query& q,
                             const Valuation& v, std::size_t max_atoms) {
  std::vector<Literal> joint = q.targets;
  joint.insert(joint.end(), q.evidence.begin(), q.evidence.end());
  double den = q.evidence.empty()
                   ? 1.0
                   : enumerate_probability(net, q.evidence, v, max_atoms);
  if (den == 0.0) throw ZeroEvidence();
  return enumerate_probability(net, joint, v, max_atoms) / den;
}

}  // namespace qpnet
