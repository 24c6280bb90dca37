#include "qpnet/qp.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace qpnet {
namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t kind_seed(QpKind k) {
  return mix(0x51ed270b27a4c3d1ull + static_cast<std::uint64_t>(k));
}

void finalize(detail::QpNode& n) {
  std::uint64_t h = kind_seed(n.kind);
  switch (n.kind) {
    case QpKind::Const:
      h = mix(h + static_cast<std::uint64_t>(n.value));
      n.support = AtomSet{};
      n.boolean = true;
      break;
    case QpKind::Monomial:
      h = mix(h ^ n.atoms.hash());
      n.support = n.atoms;
      n.boolean = true;
      break;
    default: {
      std::uint64_t acc = 0;
      AtomSet support;
      bool boolean = n.kind != QpKind::Sum;
      for (std::size_t i = 0; i < n.operands.size(); ++i) {
        const Qp& op = n.operands[i];
        std::uint64_t c = n.coefficients.empty()
                              ? 1
                              : static_cast<std::uint64_t>(n.coefficients[i]);
        acc += mix(op.hash() * 0x2545f4914f6cdd1dull + c);
        support = support | op.support();
        boolean = boolean && op.boolean_valued();
      }
      h = mix(h ^ acc);
      n.support = std::move(support);
      n.boolean = boolean;
      break;
    }
  }
  n.hash = h;
}

bool canonical_less(const Qp& a, const Qp& b) { return compare(a, b) < 0; }

}  // namespace

Qp make_qp(detail::QpNode&& node) {
  finalize(node);
  return Qp(std::make_shared<const detail::QpNode>(std::move(node)));
}

namespace {

Qp make_const(int v) {
  detail::QpNode n;
  n.kind = QpKind::Const;
  n.value = v;
  return make_qp(std::move(n));
}

const Qp& zero_node() {
  static const Qp z = make_const(0);
  return z;
}

const Qp& one_node() {
  static const Qp o = make_const(1);
  return o;
}

Qp make_compound(QpKind kind, std::vector<Qp> operands,
                 std::vector<std::int64_t> coeffs = {}) {
  detail::QpNode n;
  n.kind = kind;
  n.operands = std::move(operands);
  n.coefficients = std::move(coeffs);
  return make_qp(std::move(n));
}

}  // namespace

Qp::Qp() : Qp(zero_node()) {}

Qp Qp::zero() { return zero_node(); }
Qp Qp::one() { return one_node(); }

Qp Qp::atom(Atom a) { return monomial(AtomSet{a}); }

Qp Qp::monomial(const AtomSet& atoms) {
  if (atoms.empty()) return one();
  detail::QpNode n;
  n.kind = QpKind::Monomial;
  n.atoms = atoms;
  return make_qp(std::move(n));
}

QpKind Qp::kind() const { return node_->kind; }
bool Qp::is_zero() const {
  return node_->kind == QpKind::Const && node_->value == 0;
}
bool Qp::is_one() const {
  return node_->kind == QpKind::Const && node_->value == 1;
}
int Qp::constant_value() const { return node_->value; }
const AtomSet& Qp::atoms() const { return node_->atoms; }
const Qp& Qp::child() const { return node_->operands.front(); }
const std::vector<Qp>& Qp::operands() const { return node_->operands; }
const std::vector<std::int64_t>& Qp::coefficients() const {
  return node_->coefficients;
}
const AtomSet& Qp::support() const { return node_->support; }
std::uint64_t Qp::hash() const { return node_->hash; }
bool Qp::boolean_valued() const { return node_->boolean; }

std::size_t Qp::dag_size() const {
  std::unordered_set<const void*> seen;
  std::vector<const Qp*> stack{this};
  while (!stack.empty()) {
    const Qp* q = stack.back();
    stack.pop_back();
    if (!seen.insert(q->identity()).second) continue;
    for (const Qp& op : q->operands()) stack.push_back(&op);
  }
  return seen.size();
}

int compare(const Qp& a, const Qp& b) {
  if (a.identity() == b.identity()) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (a.hash() != b.hash()) return a.hash() < b.hash() ? -1 : 1;
  switch (a.kind()) {
    case QpKind::Const:
      return a.constant_value() - b.constant_value();
    case QpKind::Monomial: {
      auto c = a.atoms() <=> b.atoms();
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    default: {
      const auto& xa = a.operands();
      const auto& xb = b.operands();
      if (xa.size() != xb.size()) return xa.size() < xb.size() ? -1 : 1;
      for (std::size_t i = 0; i < xa.size(); ++i) {
        if (int c = compare(xa[i], xb[i]); c != 0) return c;
      }
      const auto& ca = a.coefficients();
      const auto& cb = b.coefficients();
      for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] != cb[i]) return ca[i] < cb[i] ? -1 : 1;
      }
      return 0;
    }
  }
}

bool operator==(const Qp& a, const Qp& b) {
  if (a.identity() == b.identity()) return true;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

Qp one_minus(const Qp& x) {
  switch (x.kind()) {
    case QpKind::Const:
      return Qp::constant(x.constant_value() == 0);
    case QpKind::OneMinus:
      return x.child();
    default:
      return make_compound(QpKind::OneMinus, {x});
  }
}

Qp complement(const Qp& x) {
  return x.kind() == QpKind::OneMinus ? x.child() : one_minus(x);
}

Qp weak_mul(const Qp& a, const Qp& b) { return weak_product({a, b}); }

Qp weak_product(std::vector<Qp> factors) {
  std::vector<Qp> flat;
  flat.reserve(factors.size());
  AtomSet mono;
  bool has_mono = false;
  for (auto& f : factors) {
    auto push = [&](const Qp& g) {
      switch (g.kind()) {
        case QpKind::Const:
          if (g.is_zero()) return false;
          return true;
        case QpKind::Monomial:
          mono = mono | g.atoms();
          has_mono = true;
          return true;
        default:
          flat.push_back(g);
          return true;
      }
    };
    if (f.kind() == QpKind::WeakProd) {
      for (const Qp& g : f.operands())
        if (!push(g)) return Qp::zero();
    } else if (!push(f)) {
      return Qp::zero();
    }
  }
  std::sort(flat.begin(), flat.end(), canonical_less);
  // x * x = x only holds for 0/1-valued x; repeated sums are kept.
  std::vector<Qp> kept;
  kept.reserve(flat.size());
  for (Qp& f : flat)
    if (kept.empty() || !(kept.back() == f) || !f.boolean_valued())
      kept.push_back(std::move(f));
  flat = std::move(kept);

  // x * (1-x) and m * (1-m') with m' a subset of m are identically zero.
  for (const Qp& f : flat) {
    if (f.kind() != QpKind::OneMinus) continue;
    const Qp& g = f.child();
    if (g.kind() == QpKind::Monomial && has_mono && mono.includes(g.atoms()))
      return Qp::zero();
    if (g.boolean_valued() &&
        std::binary_search(flat.begin(), flat.end(), g, canonical_less))
      return Qp::zero();
  }

  if (has_mono) {
    flat.push_back(Qp::monomial(mono));
    std::sort(flat.begin(), flat.end(), canonical_less);
  }
  if (flat.empty()) return Qp::one();
  if (flat.size() == 1) return flat.front();
  return make_compound(QpKind::WeakProd, std::move(flat));
}

Qp strong_mul(const Qp& a, const Qp& b) { return strong_product({a, b}); }

Qp strong_product(std::vector<Qp> factors) {
  std::vector<Qp> flat;
  flat.reserve(factors.size());
  AtomSet mono;
  AtomSet seen;
  auto push = [&](const Qp& g) {
    if (g.support().intersects(seen))
      throw std::invalid_argument(
          "strong product of factors sharing an atom");
    seen = seen | g.support();
    switch (g.kind()) {
      case QpKind::Const:
        return !g.is_zero();
      case QpKind::Monomial:
        mono = mono | g.atoms();
        return true;
      default:
        flat.push_back(g);
        return true;
    }
  };
  bool zero = false;
  for (auto& f : factors) {
    if (f.kind() == QpKind::StrongProd) {
      for (const Qp& g : f.operands()) zero = !push(g) || zero;
    } else {
      zero = !push(f) || zero;
    }
  }
  if (zero) return Qp::zero();
  if (!mono.empty()) flat.push_back(Qp::monomial(mono));
  std::sort(flat.begin(), flat.end(), canonical_less);
  if (flat.empty()) return Qp::one();
  if (flat.size() == 1) return flat.front();
  return make_compound(QpKind::StrongProd, std::move(flat));
}

Qp sum(std::vector<SumTerm> terms) {
  std::vector<SumTerm> flat;
  std::int64_t constant = 0;
  auto push = [&](std::int64_t c, const Qp& e) {
    if (c == 0 || e.is_zero()) return;
    if (e.is_one()) {
      constant += c;
      return;
    }
    flat.push_back({c, e});
  };
  for (auto& t : terms) {
    if (t.expr.kind() == QpKind::Sum) {
      const auto& ops = t.expr.operands();
      const auto& cs = t.expr.coefficients();
      for (std::size_t i = 0; i < ops.size(); ++i) push(t.coeff * cs[i], ops[i]);
    } else {
      push(t.coeff, t.expr);
    }
  }
  std::sort(flat.begin(), flat.end(), [](const SumTerm& a, const SumTerm& b) {
    return canonical_less(a.expr, b.expr);
  });
  std::vector<SumTerm> merged;
  for (auto& t : flat) {
    if (!merged.empty() && merged.back().expr == t.expr)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const SumTerm& t) { return t.coeff == 0; });

  if (merged.empty() && (constant == 0 || constant == 1))
    return Qp::constant(constant == 1);
  if (constant == 0 && merged.size() == 1 && merged[0].coeff == 1)
    return merged[0].expr;
  if (constant == 1 && merged.size() == 1 && merged[0].coeff == -1)
    return one_minus(merged[0].expr);
  if (constant != 0) {
    merged.push_back({constant, Qp::one()});
    std::sort(merged.begin(), merged.end(),
              [](const SumTerm& a, const SumTerm& b) {
                return canonical_less(a.expr, b.expr);
              });
  }
  std::vector<Qp> ops;
  std::vector<std::int64_t> coeffs;
  for (auto& t : merged) {
    ops.push_back(t.expr);
    coeffs.push_back(t.coeff);
  }
  return make_compound(QpKind::Sum, std::move(ops), std::move(coeffs));
}

Qp add(const Qp& a, const Qp& b) { return sum({{1, a}, {1, b}}); }
Qp subtract(const Qp& a, const Qp& b) { return sum({{1, a}, {-1, b}}); }

std::vector<Qp> factors_of(const Qp& x) {
  if (x.kind() == QpKind::WeakProd || x.kind() == QpKind::StrongProd)
    return x.operands();
  return {x};
}

bool is_decomposed(const Qp& x) {
  std::unordered_map<const void*, bool> memo;
  auto rec = [&](auto&& self, const Qp& e) -> bool {
    if (auto it = memo.find(e.identity()); it != memo.end()) return it->second;
    bool ok = true;
    if (e.kind() == QpKind::WeakProd) {
      AtomSet seen;
      for (const Qp& f : e.operands()) {
        if (f.support().intersects(seen)) {
          ok = false;
          break;
        }
        seen = seen | f.support();
      }
    }
    if (ok) {
      for (const Qp& op : e.operands()) {
        if (!self(self, op)) {
          ok = false;
          break;
        }
      }
    }
    memo.emplace(e.identity(), ok);
    return ok;
  };
  return rec(rec, x);
}

}  // namespace qpnet
