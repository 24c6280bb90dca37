#include "qpnet/valuation.hpp"

#include <cmath>

#include "qpnet/error.hpp"

namespace qpnet {

Valuation::Valuation(
    std::initializer_list<std::pair<std::string_view, double>> values) {
  for (auto [name, value] : values) set(name, value);
}

Valuation Valuation::uniform(const AtomSet& atoms, double value) {
  Valuation v;
  for (Atom a : atoms) v.set(a, value);
  return v;
}

void Valuation::set(Atom atom, double value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw InvalidValuation("value for '" + atom.name() + "' is outside [0,1]");
  values_.insert_or_assign(atom, value);
}

double Valuation::at(Atom atom) const {
  auto it = values_.find(atom);
  if (it == values_.end()) throw MissingAtom(atom.name());
  return it->second;
}

std::optional<double> Valuation::find(Atom atom) const {
  auto it = values_.find(atom);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

}  // namespace qpnet
