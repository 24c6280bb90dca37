#pragma once

#include <initializer_list>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "qpnet/atom.hpp"

namespace qpnet {

/// Numeric values in [0,1] for elementary probability symbols.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<std::pair<std::string_view, double>> values);

  /// All atoms of `atoms` set to `value`.
  static Valuation uniform(const AtomSet& atoms, double value);

  /// Throws InvalidValuation for values outside [0,1] (including NaN).
  void set(Atom atom, double value);
  void set(std::string_view name, double value) { set(Atom(name), value); }

  /// Throws MissingAtom.
  double at(Atom atom) const;
  std::optional<double> find(Atom atom) const;
  bool contains(Atom atom) const { return values_.count(atom) != 0; }

  std::size_t size() const { return values_.size(); }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

 private:
  std::unordered_map<Atom, double, AtomHash> values_;
};

}  // namespace qpnet
