#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qpnet {

class Network;

/// A node asserted true (`positive`) or false.
struct Literal {
  std::string node;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// P(targets | evidence); no evidence means the plain event probability.
struct Query {
  std::vector<Literal> targets;
  std::vector<Literal> evidence;

  friend bool operator==(const Query&, const Query&) = default;
};

/// "B | F, !G": targets left of '|', evidence right of it, '!' negates.
/// Node ids are trimmed of surrounding blanks. Throws ParseError.
Query parse_query(std::string_view text);

std::string to_string(const Literal& lit);
std::string to_string(const Query& q);

/// Throws QueryError for unknown nodes or an empty target list.
void check_query(const Network& net, const Query& q);

}  // namespace qpnet
