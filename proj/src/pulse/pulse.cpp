#include "qpnet/pulse.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qpnet {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Uniform in [0, n) from 64 random bits.
std::size_t below(std::uint64_t bits, std::size_t n) {
  return static_cast<std::size_t>(
      (static_cast<unsigned __int128>(bits) * n) >> 64);
}

}  // namespace

void PulseConfig::check() const {
  if (slots_per_period < 2)
    throw std::invalid_argument("pulse resolution must be at least 2 slots");
  if (periods < 1) throw std::invalid_argument("pulse trains need at least one period");
}

PulseTrain::PulseTrain(const PulseConfig& cfg, bool value)
    : cfg_(cfg), words_((cfg.length() + 63) / 64, value ? ~std::uint64_t{0} : 0) {
  cfg_.check();
  clear_tail();
}

void PulseTrain::clear_tail() {
  std::size_t rem = length() % 64;
  if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

void PulseTrain::set_range(std::size_t begin, std::size_t end) {
  while (begin < end) {
    std::size_t w = begin / 64, off = begin % 64;
    std::size_t n = std::min<std::size_t>(64 - off, end - begin);
    std::uint64_t mask = n == 64 ? ~std::uint64_t{0}
                                 : ((std::uint64_t{1} << n) - 1) << off;
    words_[w] |= mask;
    begin += n;
  }
}

std::size_t PulseTrain::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

double PulseTrain::area() const {
  return static_cast<double>(count()) / static_cast<double>(length());
}

PulseTrain make_train(double p, const PulseConfig& cfg, std::uint64_t stream) {
  if (!(p >= 0.0 && p <= 1.0))
    throw InvalidValuation("pulse probability must lie in [0,1]");
  const std::size_t r = cfg.slots_per_period;
  const auto w = static_cast<std::size_t>(std::llround(p * static_cast<double>(r)));
  if (w == 0) return PulseTrain(cfg, false);
  if (w == r) return PulseTrain(cfg, true);

  PulseTrain t(cfg, false);
  const std::uint64_t key = splitmix64(cfg.seed ^ splitmix64(stream));
  for (std::size_t k = 0; k < cfg.periods; ++k) {
    std::size_t start = below(splitmix64(key + k), r);
    std::size_t base = k * r;
    std::size_t first = std::min(w, r - start);
    t.set_range(base + start, base + start + first);
    t.set_range(base, base + (w - first));
  }
  return t;
}

PulseTrain pt_product(const PulseTrain& a, const PulseTrain& b) {
  if (!(a.cfg_ == b.cfg_)) throw ConfigMismatch();
  PulseTrain out = a;
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] &= b.words_[i];
  return out;
}

PulseTrain pt_complement(const PulseTrain& a) {
  PulseTrain out = a;
  for (std::uint64_t& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

TrainCache::TrainCache(const PulseConfig& cfg, const Valuation& v)
    : cfg_(cfg), v_(v) {
  cfg_.check();
}

const PulseTrain& TrainCache::train(Atom a) {
  if (auto it = trains_.find(a); it != trains_.end()) return it->second;
  PulseTrain t = make_train(v_.at(a), cfg_, a.name_hash());
  return trains_.emplace(a, std::move(t)).first->second;
}

PulseSweep::PulseSweep(const Network& net, const Valuation& v,
                       const PulseConfig& cfg)
    : net_(net), cache_(cfg, v), nodes_(net.nodes().size()) {}

const PulseTrain& PulseSweep::node(std::string_view id) {
  return build(net_.index_of(id));
}

PulseTrain PulseSweep::literal(const Literal& lit) {
  const PulseTrain& t = node(lit.node);
  return lit.positive ? t : pt_complement(t);
}

PulseTrain PulseSweep::event(const std::vector<Literal>& lits) {
  PulseTrain out(cache_.config(), true);
  for (const Literal& l : lits) out = pt_product(out, literal(l));
  return out;
}

const PulseTrain& PulseSweep::build(std::size_t index) {
  if (nodes_[index]) return *nodes_[index];
  const NodeSpec& n = net_.nodes()[index];
  const PulseConfig& cfg = cache_.config();
  auto label = [&](const std::optional<std::string>& l) {
    return l ? cache_.train(Atom(*l)) : PulseTrain(cfg, true);
  };
  auto parent = [&](const Link& l) {
    PulseTrain p = build(net_.index_of(l.from));
    return l.inhibitory ? pt_complement(p) : p;
  };

  PulseTrain out(cfg, true);
  switch (n.kind) {
    case NodeKind::Root:
      break;
    case NodeKind::And:
      out = label(n.joint_label);
      for (const Link& l : n.links) out = pt_product(out, parent(l));
      break;
    case NodeKind::Or:
      for (const Link& l : n.links)
        out = pt_product(out, pt_complement(pt_product(label(l.label), parent(l))));
      out = pt_complement(out);
      break;
    case NodeKind::Not:
      out = pt_product(label(net_.gate_label(n)), parent(n.links.front()));
      break;
  }
  nodes_[index] = std::move(out);
  return *nodes_[index];
}

double estimate_event(const Network& net, const std::vector<Literal>& lits,
                      const Valuation& v, const PulseConfig& cfg) {
  PulseSweep sweep(net, v, cfg);
  return sweep.event(lits).area();
}

double estimate_conditional(const Network& net, const Query& q,
                            const Valuation& v, const PulseConfig& cfg) {
  check_query(net, q);
  PulseSweep sweep(net, v, cfg);
  PulseTrain evidence = sweep.event(q.evidence);
  std::size_t den = evidence.count();
  if (den == 0) throw ZeroEvidenceArea();
  PulseTrain joint = pt_product(evidence, sweep.event(q.targets));
  return static_cast<double>(joint.count()) / static_cast<double>(den);
}

}  // namespace qpnet
