#pragma once

// Numeric checks shared by the unit and acceptance suites.

#include <cstddef>
#include <vector>

#include "generators.hpp"
#include "qpnet/network.hpp"
#include "qpnet/query.hpp"
#include "qpnet/valuation.hpp"

namespace qpnet::testing {

/// |value of the eliminated event QP - enumerated probability|.
double event_deviation(const Network& net, const std::vector<Literal>& lits,
                       const Valuation& v);

struct RecursionCheck {
  std::size_t and_nodes = 0;
  std::size_t or_nodes = 0;
  double max_error = 0;
};

/// For every AND and OR node, compares P(E C) with the right-hand side of
/// its recursion identity, both from the enumeration oracle. E is a random
/// set of up to three nodes that are neither C nor its descendants.
RecursionCheck check_recursions(Rng& rng, const Network& net,
                                const Valuation& v);

}  // namespace qpnet::testing
