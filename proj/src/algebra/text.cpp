#include "qpnet/text.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "qpnet/error.hpp"

namespace qpnet {
namespace {

struct Rendered {
  std::string text;
  int depth;  // deepest bracket level used inside, -1 for none
};

std::string atom_text(Atom a) {
  return is_short_atom_name(a.name()) ? a.name() : "`" + a.name() + "`";
}

std::string monomial_text(const AtomSet& atoms, TextStyle style) {
  std::string out;
  bool first = true;
  for (Atom a : atoms.sorted_by_name()) {
    if (!first && style == TextStyle::Raw) out += '*';
    out += atom_text(a);
    first = false;
  }
  return out;
}

Rendered wrap(const Rendered& r, TextStyle style) {
  int level = r.depth + 1;
  static constexpr const char* open[] = {"(", "[", "{"};
  static constexpr const char* close[] = {")", "]", "}"};
  int k = style == TextStyle::Raw ? 0 : level % 3;
  return {open[k] + r.text + close[k], level};
}

Rendered render(const Qp& x, TextStyle style);

Rendered render_product(const Qp& x, TextStyle style) {
  bool weak = x.kind() == QpKind::WeakProd;
  struct Item {
    bool monomial;
    Rendered r;
  };
  std::vector<Item> items;
  for (const Qp& f : x.operands()) {
    Rendered r = render(f, style);
    bool needs_group = f.kind() == QpKind::OneMinus ||
                       f.kind() == QpKind::Sum ||
                       (!weak && f.kind() == QpKind::WeakProd);
    if (needs_group) r = wrap(r, style);
    items.push_back({f.kind() == QpKind::Monomial, std::move(r)});
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& a, const Item& b) {
                     if (a.monomial != b.monomial) return a.monomial;
                     return a.r.text < b.r.text;
                   });
  Rendered out{"", -1};
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0 && weak) out.text += '*';
    out.text += items[i].r.text;
    out.depth = std::max(out.depth, items[i].r.depth);
  }
  return out;
}

Rendered render_sum(const Qp& x, TextStyle style) {
  struct Item {
    int group;
    std::int64_t coeff;
    Rendered r;
  };
  std::vector<Item> items;
  const auto& ops = x.operands();
  const auto& cs = x.coefficients();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    std::int64_t c = cs[i];
    std::int64_t mag = c < 0 ? -c : c;
    Rendered r;
    if (ops[i].is_one()) {
      r = {std::to_string(mag), -1};
    } else {
      r = render(ops[i], style);
      if (ops[i].kind() == QpKind::OneMinus || ops[i].kind() == QpKind::Sum)
        r = wrap(r, style);
      if (mag != 1) r.text = std::to_string(mag) + r.text;
    }
    int group = ops[i].is_one() ? 0 : (c > 0 ? 1 : 2);
    items.push_back({group, c, std::move(r)});
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& a, const Item& b) {
                     if (a.group != b.group) return a.group < b.group;
                     return a.r.text < b.r.text;
                   });
  Rendered out{"", -1};
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].coeff < 0)
      out.text += '-';
    else if (i > 0)
      out.text += '+';
    out.text += items[i].r.text;
    out.depth = std::max(out.depth, items[i].r.depth);
  }
  return out;
}

Rendered render(const Qp& x, TextStyle style) {
  switch (x.kind()) {
    case QpKind::Const:
      return {x.is_one() ? "1" : "0", -1};
    case QpKind::Monomial:
      return {monomial_text(x.atoms(), style), -1};
    case QpKind::OneMinus: {
      Rendered c = render(x.child(), style);
      if (x.child().kind() == QpKind::Sum) c = wrap(c, style);
      return {"1-" + c.text, c.depth};
    }
    case QpKind::WeakProd:
    case QpKind::StrongProd:
      return render_product(x, style);
    case QpKind::Sum:
      return render_sum(x, style);
  }
  throw std::logic_error("unreachable");
}

std::string normalize(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    // U+2212 minus sign and U+2217 asterisk operator.
    if (in.compare(i, 3, "\xE2\x88\x92") == 0) {
      out += '-';
      i += 2;
    } else if (in.compare(i, 3, "\xE2\x88\x97") == 0) {
      out += '*';
      i += 2;
    } else {
      out += in[i];
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  Qp parse() {
    Qp e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what, 1, static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  static bool starts_primary(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) ||
           std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
           c == '[' || c == '{' || c == '`';
  }

  Qp expr() {
    std::vector<SumTerm> terms;
    std::int64_t sign = 1;
    if (peek() == '-') {
      ++pos_;
      sign = -1;
    } else if (peek() == '+') {
      ++pos_;
    }
    terms.push_back(signed_term(sign));
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      terms.push_back(signed_term(c == '-' ? -1 : 1));
    }
    if (terms.size() == 1 && terms[0].coeff == 1) return terms[0].expr;
    return sum(std::move(terms));
  }

  SumTerm signed_term(std::int64_t sign) {
    std::int64_t coeff = 1;
    skip_ws();
    std::size_t save = pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::int64_t n = number();
      // A bare integer other than 0/1, or one followed by a factor, is a
      // coefficient.
      if (n > 1 || starts_primary(peek())) {
        coeff = n;
        if (!starts_primary(peek())) return {sign * coeff, Qp::one()};
      } else {
        pos_ = save;
      }
    }
    return {sign * coeff, term()};
  }

  Qp term() {
    std::vector<Qp> factors{juxtaposed()};
    while (peek() == '*') {
      ++pos_;
      factors.push_back(juxtaposed());
    }
    return factors.size() == 1 ? factors[0] : weak_product(std::move(factors));
  }

  Qp juxtaposed() {
    std::vector<Qp> factors{primary()};
    while (starts_primary(peek())) factors.push_back(primary());
    if (factors.size() == 1) return factors[0];
    try {
      return strong_product(std::move(factors));
    } catch (const std::invalid_argument&) {
      fail("juxtaposed factors share an atom; use '*' for the weak product");
    }
  }

  std::int64_t number() {
    std::int64_t n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      n = n * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return n;
  }

  Qp primary() {
    char c = peek();
    if (c == '(' || c == '[' || c == '{') {
      char close = c == '(' ? ')' : (c == '[' ? ']' : '}');
      ++pos_;
      Qp e = expr();
      if (peek() != close) fail(std::string("expected '") + close + "'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t n = number();
      if (n > 1) fail("constants must be 0 or 1");
      return Qp::constant(n == 1);
    }
    if (c == '`') {
      std::size_t end = s_.find('`', pos_ + 1);
      if (end == std::string::npos || end == pos_ + 1) fail("bad quoted atom");
      std::string name = s_.substr(pos_ + 1, end - pos_ - 1);
      pos_ = end + 1;
      return Qp::atom(name);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_++;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '\''))
        ++pos_;
      return Qp::atom(s_.substr(start, pos_ - start));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Qp& e, TextStyle style) {
  return render(e, style).text;
}

std::string to_string(const MultilinearForm& f, TextStyle style) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [atoms, coeff] : f.sorted_terms()) {
    Coefficient mag = coeff < 0 ? Coefficient(-coeff) : coeff;
    if (coeff < 0)
      out += '-';
    else if (!first)
      out += '+';
    if (atoms.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str();
      out += monomial_text(atoms, style);
    }
    first = false;
  }
  return out;
}

Qp parse_qp(std::string_view text) { return Parser(normalize(text)).parse(); }

}  // namespace qpnet
