#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qpnet/atom.hpp"
#include "qpnet/valuation.hpp"

namespace qpnet {

using Coefficient = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Default cap on the number of terms of any expansion.
inline constexpr std::size_t kDefaultExpansionCap = std::size_t{1} << 18;

/// Expanded normal form of a quasi-probability: a sum of monomials over
/// distinct atoms with exact integer coefficients. The empty atom set keys
/// the constant term. Zero coefficients are never stored, so two forms are
/// equal exactly when their term maps are equal.
class MultilinearForm {
 public:
  using TermMap = std::unordered_map<AtomSet, Coefficient, AtomSetHash>;

  MultilinearForm() = default;

  static MultilinearForm constant(long value);
  static MultilinearForm monomial(AtomSet atoms, long coeff = 1);

  void add_term(const AtomSet& atoms, const Coefficient& coeff);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Coefficient coefficient(const AtomSet& atoms) const;
  AtomSet support() const;

  /// Terms in printing order: the constant first, then positive terms, then
  /// negative ones; lexicographic by sorted atom names within each group.
  std::vector<std::pair<AtomSet, Coefficient>> sorted_terms() const;

  MultilinearForm operator-() const;
  MultilinearForm& operator+=(const MultilinearForm& other);
  MultilinearForm& operator-=(const MultilinearForm& other);
  friend MultilinearForm operator+(MultilinearForm a, const MultilinearForm& b) {
    return a += b;
  }
  friend MultilinearForm operator-(MultilinearForm a, const MultilinearForm& b) {
    return a -= b;
  }

  /// Product with monomials multiplied by atom-set union (the weak product).
  /// Throws ExpansionLimit when the result would exceed `cap` terms.
  MultilinearForm multiply(const MultilinearForm& other,
                           std::size_t cap = kDefaultExpansionCap) const;

  /// 1 - this.
  MultilinearForm complement() const;

  double evaluate(const Valuation& v) const;
  Rational evaluate_exact(const Valuation& v) const;

  friend bool operator==(const MultilinearForm& a, const MultilinearForm& b) {
    return a.terms_ == b.terms_;
  }

 private:
  TermMap terms_;
};

}  // namespace qpnet
