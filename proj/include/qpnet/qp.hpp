#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qpnet/atom.hpp"

namespace qpnet {

enum class QpKind {
  Const,       // 0 or 1
  Monomial,    // product of distinct atoms
  OneMinus,    // 1 - child
  WeakProd,    // idempotent product, factors may share atoms
  StrongProd,  // ordinary product of pairwise atom-disjoint factors
  Sum,         // integer-weighted sum of terms
};

namespace detail {
struct QpNode;
}

/// Immutable quasi-probability expression.
///
/// A `Qp` is a cheap handle to a shared node; subtrees are shared freely.
/// All construction goes through the smart constructors below, which keep
/// operands of products and sums in a canonical order and apply the local
/// simplifications (constant folding, merging of monomials, duplicate
/// factors, `x * (1-x)`), so structurally equal results compare equal with
/// `operator==`. Semantic equivalence is `equivalent()` in expand.hpp.
class Qp {
 public:
  /// The constant 0.
  Qp();

  static Qp zero();
  static Qp one();
  static Qp constant(bool value) { return value ? one() : zero(); }
  static Qp atom(Atom a);
  static Qp atom(std::string_view name) { return atom(Atom(name)); }
  /// The empty set gives the constant 1.
  static Qp monomial(const AtomSet& atoms);

  QpKind kind() const;
  bool is_zero() const;
  bool is_one() const;

  /// Const only.
  int constant_value() const;
  /// Monomial only.
  const AtomSet& atoms() const;
  /// OneMinus only.
  const Qp& child() const;
  /// Factors of a product, terms of a sum, the child of OneMinus.
  const std::vector<Qp>& operands() const;
  /// Sum only; parallel to operands().
  const std::vector<std::int64_t>& coefficients() const;

  /// Every atom occurring in the expression.
  const AtomSet& support() const;
  /// Structural hash, derived from atom names only.
  std::uint64_t hash() const;
  /// True when the expression is built from constants, monomials, 1- and
  /// products only, which makes it 0/1-valued on every 0/1 assignment.
  bool boolean_valued() const;
  /// Node identity for memo tables.
  const void* identity() const { return node_.get(); }
  /// Number of distinct nodes reachable from this one.
  std::size_t dag_size() const;

  friend bool operator==(const Qp& a, const Qp& b);

 private:
  friend struct detail::QpNode;
  friend Qp make_qp(detail::QpNode&& node);
  explicit Qp(std::shared_ptr<const detail::QpNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const detail::QpNode> node_;
};

namespace detail {
struct QpNode {
  QpKind kind = QpKind::Const;
  int value = 0;
  AtomSet atoms;  // monomial atoms
  std::vector<Qp> operands;
  std::vector<std::int64_t> coefficients;
  AtomSet support;
  std::uint64_t hash = 0;
  bool boolean = true;
};
}  // namespace detail

/// Three-way structural comparison; the canonical operand order.
int compare(const Qp& a, const Qp& b);

struct QpHash {
  std::size_t operator()(const Qp& q) const { return q.hash(); }
};

Qp one_minus(const Qp& x);
/// `x` becomes `1-x`, and `1-y` becomes `y`.
Qp complement(const Qp& x);

Qp weak_mul(const Qp& a, const Qp& b);
Qp weak_product(std::vector<Qp> factors);

/// Throws std::invalid_argument if two factors share an atom.
Qp strong_mul(const Qp& a, const Qp& b);
Qp strong_product(std::vector<Qp> factors);

struct SumTerm {
  std::int64_t coeff;
  Qp expr;
};
Qp sum(std::vector<SumTerm> terms);
Qp add(const Qp& a, const Qp& b);
Qp subtract(const Qp& a, const Qp& b);

/// Flattened factor list: a product yields its factors, anything else
/// yields itself.
std::vector<Qp> factors_of(const Qp& x);

/// Whether no atom occurs in two factors of any weak product.
bool is_decomposed(const Qp& x);

}  // namespace qpnet
