#pragma once

#include <cstddef>

#include "qpnet/multilinear.hpp"
#include "qpnet/qp.hpp"
#include "qpnet/valuation.hpp"

namespace qpnet {

/// Fully distributes sums and products, multiplying monomials by atom-set
/// union. Two expressions are equivalent exactly when their expansions are
/// equal. Throws ExpansionLimit past `cap` terms.
MultilinearForm expand(const Qp& e, std::size_t cap = kDefaultExpansionCap);

bool equivalent(const Qp& a, const Qp& b,
                std::size_t cap = kDefaultExpansionCap);

/// equivalent(e, 0).
bool is_identically_zero(const Qp& e, std::size_t cap = kDefaultExpansionCap);

/// Renders a form as a sum of monomials; the result is decomposed.
Qp to_qp(const MultilinearForm& form);

/// Ordinary arithmetic evaluation of a decomposed expression.
/// Throws NotDecomposed if an atom straddles a weak product, MissingAtom if
/// the valuation lacks an atom.
double evaluate(const Qp& e, const Valuation& v);
Rational evaluate_exact(const Qp& e, const Valuation& v);

inline double evaluate(const MultilinearForm& f, const Valuation& v) {
  return f.evaluate(v);
}

/// Replaces atoms by constants, simplifying as it goes. Decomposed inputs
/// stay decomposed.
Qp assign(const Qp& e, const Valuation& constants);

}  // namespace qpnet
