#pragma once

#include <cstddef>
#include <vector>

#include "qpnet/multilinear.hpp"
#include "qpnet/network.hpp"
#include "qpnet/query.hpp"
#include "qpnet/valuation.hpp"

namespace qpnet {

constexpr std::size_t kDefaultOracleAtoms = 20;

/// Truth value of every node (indexed like Network::nodes()) when exactly
/// the label events in `succeeded` occur. Unlabelled links always succeed.
std::vector<bool> evaluate_outcome(const Network& net,
                                   const AtomSet& succeeded);

/// Probability that every literal holds, by summing over all outcomes of the
/// network's label events. Literals may repeat or contradict each other.
/// Throws TooManyAtoms when the network has more than `max_atoms` labels,
/// MissingAtom when `v` lacks one.
double enumerate_probability(const Network& net,
                             const std::vector<Literal>& lits,
                             const Valuation& v,
                             std::size_t max_atoms = kDefaultOracleAtoms);

/// Same sum in exact rational arithmetic; every double is a binary fraction,
/// so the result is the exact probability for the given values.
Rational enumerate_probability_exact(
    const Network& net, const std::vector<Literal>& lits, const Valuation& v,
    std::size_t max_atoms = kDefaultOracleAtoms);

/// Conditional probability P(targets | evidence) by enumeration. Throws
/// ZeroEvidence when the evidence has probability 0.
double enumerate_conditional(const Network& net, const Query& q,
                             const Valuation& v,
                             std::size_t max_atoms = kDefaultOracleAtoms);

}  // namespace qpnet
