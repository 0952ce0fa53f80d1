#pragma once

#include "marmann/nn_rule.hpp"
#include "marmann/state.hpp"

#include <cstddef>
#include <span>

namespace marmann {

/// Q(m) = ceil(18 ln(4 m^3 / delta)).
std::size_t query_budget(std::size_t m, double delta);

/// Label of region i of the t/2 net: reuses a memoized decision, otherwise
/// draws Q(m) region points with replacement, queries them and takes the
/// majority (ties to the smallest label id).
Label decide_region(MarmannState& state, double t, std::size_t region);

/// (x_i, y_i) for every requested region, in ascending region order.
CompressionSet generate_nn_set(MarmannState& state, double t, std::span<const std::size_t> regions);

/// Same, for every region of the t/2 net.
CompressionSet generate_full_nn_set(MarmannState& state, double t);

}  // namespace marmann
