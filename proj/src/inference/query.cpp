#include "qpnet/query.hpp"

#include "qpnet/error.hpp"
#include "qpnet/network.hpp"

namespace qpnet {
namespace {

std::string_view trim(std::string_view s) {
  const char* blanks = " \t\r\n";
  auto b = s.find_first_not_of(blanks);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(blanks);
  return s.substr(b, e - b + 1);
}

std::vector<Literal> parse_literals(std::string_view text, bool allow_empty) {
  std::vector<Literal> out;
  if (trim(text).empty()) {
    if (allow_empty) return out;
    throw ParseError("query has no target");
  }
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view part = trim(text.substr(start, comma - start));
    Literal lit;
    while (!part.empty() && part.front() == '!') {
      lit.positive = !lit.positive;
      part = trim(part.substr(1));
    }
    if (part.empty()) throw ParseError("empty literal in query");
    if (part.find_first_of("|! \t") != std::string_view::npos)
      throw ParseError("malformed literal '" + std::string(part) + "'");
    lit.node = std::string(part);
    out.push_back(std::move(lit));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Query parse_query(std::string_view text) {
  Query q;
  std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) {
    q.targets = parse_literals(text, false);
    return q;
  }
  if (text.find('|', bar + 1) != std::string_view::npos)
    throw ParseError("query has more than one '|'");
  q.targets = parse_literals(text.substr(0, bar), false);
  q.evidence = parse_literals(text.substr(bar + 1), false);
  return q;
}

std::string to_string(const Literal& lit) {
  return (lit.positive ? "" : "!") + lit.node;
}

std::string to_string(const Query& q) {
  std::string out;
  auto list = [&](const std::vector<Literal>& ls) {
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (i > 0) out += ", ";
      out += to_string(ls[i]);
    }
  };
  list(q.targets);
  if (!q.evidence.empty()) {
    out += " | ";
    list(q.evidence);
  }
  return out;
}

void check_query(const Network& net, const Query& q) {
  if (q.targets.empty()) throw QueryError("a query needs at least one target");
  for (const auto* ls : {&q.targets, &q.evidence})
    for (const Literal& l : *ls)
      if (!net.contains(l.node))
        throw QueryError("unknown node '" + l.node + "'");
}

}  // namespace qpnet
