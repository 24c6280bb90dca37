#include <unordered_map>

#include "qpnet/error.hpp"
#include "qpnet/expand.hpp"

namespace qpnet {
namespace {

template <typename Number, typename Lookup>
Number evaluate_with(const Qp& e, Lookup&& lookup) {
  std::unordered_map<const void*, Number> memo;
  auto rec = [&](auto&& self, const Qp& x) -> Number {
    if (auto it = memo.find(x.identity()); it != memo.end()) return it->second;
    Number r{};
    switch (x.kind()) {
      case QpKind::Const:
        r = Number(x.constant_value());
        break;
      case QpKind::Monomial:
        r = Number(1);
        for (Atom a : x.atoms()) r *= lookup(a);
        break;
      case QpKind::OneMinus:
        r = Number(1) - self(self, x.child());
        break;
      case QpKind::WeakProd: {
        AtomSet seen;
        for (const Qp& f : x.operands()) {
          if (f.support().intersects(seen))
            throw NotDecomposed("atom '" +
                                (f.support() & seen).sorted_by_name()[0].name() +
                                "' occurs in two factors of a weak product");
          seen = seen | f.support();
        }
        [[fallthrough]];
      }
      case QpKind::StrongProd:
        r = Number(1);
        for (const Qp& f : x.operands()) r *= self(self, f);
        break;
      case QpKind::Sum: {
        r = Number(0);
        const auto& cs = x.coefficients();
        for (std::size_t i = 0; i < cs.size(); ++i)
          r += Number(cs[i]) * self(self, x.operands()[i]);
        break;
      }
    }
    memo.emplace(x.identity(), r);
    return r;
  };
  return rec(rec, e);
}

}  // namespace

double evaluate(const Qp& e, const Valuation& v) {
  return evaluate_with<double>(e, [&](Atom a) { return v.at(a); });
}

Rational evaluate_exact(const Qp& e, const Valuation& v) {
  return evaluate_with<Rational>(e, [&](Atom a) { return Rational(v.at(a)); });
}

Qp assign(const Qp& e, const Valuation& constants) {
  std::unordered_map<const void*, Qp> memo;
  auto touches = [&](const Qp& x) {
    for (Atom a : x.support())
      if (constants.contains(a)) return true;
    return false;
  };
  auto rec = [&](auto&& self, const Qp& x) -> Qp {
    if (!touches(x)) return x;
    if (auto it = memo.find(x.identity()); it != memo.end()) return it->second;
    Qp r;
    switch (x.kind()) {
      case QpKind::Const:
        r = x;
        break;
      case QpKind::Monomial: {
        std::vector<Atom> kept;
        double scale = 1.0;
        for (Atom a : x.atoms()) {
          if (auto c = constants.find(a))
            scale *= *c;
          else
            kept.push_back(a);
        }
        if (scale != 0.0 && scale != 1.0)
          throw InvalidValuation("assign() accepts only the constants 0 and 1");
        r = scale == 0.0 ? Qp::zero() : Qp::monomial(AtomSet(std::move(kept)));
        break;
      }
      case QpKind::OneMinus:
        r = one_minus(self(self, x.child()));
        break;
      case QpKind::WeakProd:
      case QpKind::StrongProd: {
        std::vector<Qp> fs;
        for (const Qp& f : x.operands()) fs.push_back(self(self, f));
        r = x.kind() == QpKind::WeakProd ? weak_product(std::move(fs))
                                         : strong_product(std::move(fs));
        break;
      }
      case QpKind::Sum: {
        std::vector<SumTerm> ts;
        for (std::size_t i = 0; i < x.operands().size(); ++i)
          ts.push_back({x.coefficients()[i], self(self, x.operands()[i])});
        r = sum(std::move(ts));
        break;
      }
    }
    memo.emplace(x.identity(), r);
    return r;
  };
  return rec(rec, e);
}

}  // namespace qpnet
