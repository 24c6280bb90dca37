#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qpnet/atom.hpp"
#include "qpnet/network.hpp"
#include "qpnet/query.hpp"
#include "qpnet/valuation.hpp"

namespace qpnet {

struct PulseConfig {
  /// Slots per period; one period is the pulse spacing.
  std::size_t slots_per_period = 64;
  std::size_t periods = 20000;
  std::uint64_t seed = 1;

  std::size_t length() const { return slots_per_period * periods; }
  /// Throws std::invalid_argument unless R >= 2 and periods >= 1.
  void check() const;

  friend bool operator==(const PulseConfig&, const PulseConfig&) = default;
};

/// A 0/1 signal of `length()` slots, packed 64 to a word. Bits past the end
/// of the last word are kept clear.
class PulseTrain {
 public:
  /// Constant train.
  PulseTrain(const PulseConfig& cfg, bool value);

  const PulseConfig& config() const { return cfg_; }
  std::size_t length() const { return cfg_.length(); }
  bool bit(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  std::size_t count() const;
  /// Fraction of set slots.
  double area() const;

  friend bool operator==(const PulseTrain& a, const PulseTrain& b) {
    return a.cfg_ == b.cfg_ && a.words_ == b.words_;
  }

 private:
  friend PulseTrain make_train(double, const PulseConfig&, std::uint64_t);
  friend PulseTrain pt_product(const PulseTrain&, const PulseTrain&);
  friend PulseTrain pt_complement(const PulseTrain&);

  void set_range(std::size_t begin, std::size_t end);
  void clear_tail();

  PulseConfig cfg_;
  std::vector<std::uint64_t> words_;
};

/// One pulse of round(p*R) slots per period, at an offset drawn uniformly
/// from [0, R) and wrapped within the period. Offsets come from a
/// counter-based generator keyed by (seed, stream, period), so any period can
/// be produced independently and the result does not depend on how the work
/// is split. Throws InvalidValuation for p outside [0,1].
PulseTrain make_train(double p, const PulseConfig& cfg, std::uint64_t stream);

/// Slot-wise AND. Throws ConfigMismatch.
PulseTrain pt_product(const PulseTrain& a, const PulseTrain& b);
/// Slot-wise NOT.
PulseTrain pt_complement(const PulseTrain& a);

/// One train per atom under one configuration; the stream of an atom is
/// derived from its name, so rebuilding the cache reproduces the trains.
class TrainCache {
 public:
  TrainCache(const PulseConfig& cfg, const Valuation& v);

  const PulseConfig& config() const { return cfg_; }
  /// Throws MissingAtom when the valuation has no value for the atom.
  const PulseTrain& train(Atom a);

 private:
  PulseConfig cfg_;
  const Valuation& v_;
  std::unordered_map<Atom, PulseTrain, AtomHash> trains_;
};

/// Trains for network nodes, computed parents first by the same recursion
/// that builds P*: products for AND, complement of the product of
/// complements for OR. Each node's train is computed once and reused.
class PulseSweep {
 public:
  PulseSweep(const Network& net, const Valuation& v, const PulseConfig& cfg);

  const PulseTrain& node(std::string_view id);
  PulseTrain literal(const Literal& lit);
  /// Product of the literal trains.
  PulseTrain event(const std::vector<Literal>& lits);

 private:
  const PulseTrain& build(std::size_t index);

  const Network& net_;
  TrainCache cache_;
  std::vector<std::optional<PulseTrain>> nodes_;
};

double estimate_event(const Network& net, const std::vector<Literal>& lits,
                      const Valuation& v, const PulseConfig& cfg);

/// Area of target-and-evidence over area of evidence, from one sweep.
/// Throws ZeroEvidenceArea.
double estimate_conditional(const Network& net, const Query& q,
                            const Valuation& v, const PulseConfig& cfg);

}  // namespace qpnet
