#pragma once

#include <optional>
#include <vector>

#include "qpnet/qp.hpp"

namespace qpnet::detail {

/// Monomial factor of a product (or the monomial itself); empty otherwise.
AtomSet monomial_part(const Qp& x);

/// r such that x == rho*r, reading x and rho as products.
std::optional<Qp> cofactor(const Qp& x, const Qp& rho);

/// Groups of factor indices connected through shared atoms.
std::vector<std::vector<std::size_t>> atom_components(
    const std::vector<Qp>& factors);

/// Whether `x` may serve as a resolution pivot: 0/1-valued on every 0/1
/// assignment. Falls back to an expansion check for sums.
bool usable_as_pivot(const Qp& x);

}  // namespace qpnet::detail
