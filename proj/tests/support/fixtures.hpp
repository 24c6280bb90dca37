#pragma once

#include <string>

#include "qpnet/network.hpp"
#include "qpnet/sat.hpp"
#include "qpnet/valuation.hpp"

namespace qpnet::testing {

/// A -> B (p); B -> C (q); B -> D (r); E = AND(C, D) with joint label s.
Network sibling_and_network();

/// A -> B (p); A -> C (q); D = AND(B, C) with joint label r; C -> E (t);
/// F = OR(D (s), E (u)).
Network two_paths_network();

/// Every one of p, q, r, s, t, u set to `value`.
Valuation uniform_pqrstu(double value);

/// {!p | q | r, p, !q | !s | t, !t, !r | t | !u, !r | u} over p..u.
CnfFormula six_clause_formula();

std::string data_path(const std::string& name);
std::string read_text(const std::string& path);

}  // namespace qpnet::testing
