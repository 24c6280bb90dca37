#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef QPNET_TEST_DATA
#define QPNET_TEST_DATA "tests/data"
#endif

namespace qpnet::testing {

Network sibling_and_network() {
  return Network::create({
      {"A", NodeKind::Root, {}, std::nullopt},
      {"B", NodeKind::Or, {{"A", "p", false}}, std::nullopt},
      {"C", NodeKind::Or, {{"B", "q", false}}, std::nullopt},
      {"D", NodeKind::Or, {{"B", "r", false}}, std::nullopt},
      {"E", NodeKind::And, {{"C", std::nullopt, false}, {"D", std::nullopt, false}}, "s"},
  });
}

Network two_paths_network() {
  return Network::create({
      {"A", NodeKind::Root, {}, std::nullopt},
      {"B", NodeKind::Or, {{"A", "p", false}}, std::nullopt},
      {"C", NodeKind::Or, {{"A", "q", false}}, std::nullopt},
      {"D", NodeKind::And, {{"B", std::nullopt, false}, {"C", std::nullopt, false}}, "r"},
      {"E", NodeKind::Or, {{"C", "t", false}}, std::nullopt},
      {"F", NodeKind::Or, {{"D", "s", false}, {"E", "u", false}}, std::nullopt},
  });
}

Valuation uniform_pqrstu(double value) {
  Valuation v;
  for (const char* a : {"p", "q", "r", "s", "t", "u"}) v.set(a, value);
  return v;
}

CnfFormula six_clause_formula() {
  auto c = [](std::vector<SatLiteral> ls) { return Clause(ls); };
  return CnfFormula({c({{"p", false}, {"q", true}, {"r", true}}),
                     c({{"p", true}}),
                     c({{"q", false}, {"s", false}, {"t", true}}),
                     c({{"t", false}}),
                     c({{"r", false}, {"t", true}, {"u", false}}),
                     c({{"r", false}, {"u", true}})},
                    {"p", "q", "r", "s", "t", "u"});
}

std::string data_path(const std::string& name) {
  return std::string(QPNET_TEST_DATA) + "/" + name;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qpnet::testing
