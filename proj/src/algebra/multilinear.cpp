#include "qpnet/multilinear.hpp"

#include <algorithm>

#include "qpnet/error.hpp"

namespace qpnet {

MultilinearForm MultilinearForm::constant(long value) {
  MultilinearForm f;
  if (value != 0) f.terms_.emplace(AtomSet{}, value);
  return f;
}

MultilinearForm MultilinearForm::monomial(AtomSet atoms, long coeff) {
  MultilinearForm f;
  if (coeff != 0) f.terms_.emplace(std::move(atoms), coeff);
  return f;
}

void MultilinearForm::add_term(const AtomSet& atoms, const Coefficient& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(atoms, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Coefficient MultilinearForm::coefficient(const AtomSet& atoms) const {
  auto it = terms_.find(atoms);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

AtomSet MultilinearForm::support() const {
  AtomSet s;
  for (const auto& [atoms, coeff] : terms_) s = s | atoms;
  return s;
}

std::vector<std::pair<AtomSet, Coefficient>> MultilinearForm::sorted_terms()
    const {
  struct Keyed {
    int group;
    std::vector<std::string> names;
    const AtomSet* atoms;
    const Coefficient* coeff;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(terms_.size());
  for (const auto& [atoms, coeff] : terms_) {
    int group = atoms.empty() ? 0 : (coeff > 0 ? 1 : 2);
    keyed.push_back({group, atoms.names(), &atoms, &coeff});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.group != b.group) return a.group < b.group;
    return a.names < b.names;
  });
  std::vector<std::pair<AtomSet, Coefficient>> out;
  out.reserve(keyed.size());
  for (const auto& k : keyed) out.emplace_back(*k.atoms, *k.coeff);
  return out;
}

MultilinearForm MultilinearForm::operator-() const {
  MultilinearForm r = *this;
  for (auto& [atoms, coeff] : r.terms_) coeff = -coeff;
  return r;
}

MultilinearForm& MultilinearForm::operator+=(const MultilinearForm& other) {
  for (const auto& [atoms, coeff] : other.terms_) add_term(atoms, coeff);
  return *this;
}

MultilinearForm& MultilinearForm::operator-=(const MultilinearForm& other) {
  for (const auto& [atoms, coeff] : other.terms_) add_term(atoms, -coeff);
  return *this;
}

MultilinearForm MultilinearForm::multiply(const MultilinearForm& other,
                                          std::size_t cap) const {
  MultilinearForm r;
  if (is_zero() || other.is_zero()) return r;
  const auto& small = size() <= other.size() ? terms_ : other.terms_;
  const auto& large = size() <= other.size() ? other.terms_ : terms_;
  r.terms_.reserve(std::min(cap, small.size() * large.size()));
  for (const auto& [a, ca] : small) {
    for (const auto& [b, cb] : large) {
      r.add_term(a | b, ca * cb);
      if (r.terms_.size() > cap) throw ExpansionLimit(cap);
    }
  }
  return r;
}

MultilinearForm MultilinearForm::complement() const {
  MultilinearForm r = -*this;
  r.add_term(AtomSet{}, 1);
  return r;
}

double MultilinearForm::evaluate(const Valuation& v) const {
  double total = 0.0;
  for (const auto& [atoms, coeff] : terms_) {
    double term = coeff.convert_to<double>();
    for (Atom a : atoms) term *= v.at(a);
    total += term;
  }
  return total;
}

Rational MultilinearForm::evaluate_exact(const Valuation& v) const {
  Rational total = 0;
  for (const auto& [atoms, coeff] : terms_) {
    Rational term = coeff;
    for (Atom a : atoms) term *= Rational(v.at(a));
    total += term;
  }
  return total;
}

}  // namespace qpnet
