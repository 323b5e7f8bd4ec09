#pragma once

#include <optional>

#include "dagbook/dag.hpp"
#include "dagbook/layout.hpp"
#include "dagbook/order.hpp"

namespace dagbook {

/// First-fit page assignment for a fixed order. Edges are processed sorted
/// by (source position asc, target position desc); each goes to the lowest
/// page where it crosses nothing. Always valid, no optimality claim.
/// Throws std::invalid_argument if sigma is not a linear extension.
StackLayout greedy_first_fit(const Dag& g, const LinearOrder& sigma);

/// Exact minimum page count for the fixed order sigma: branch-and-bound
/// coloring of the crossing-conflict graph, with the maximum twist as a
/// clique lower bound. Returns nullopt when the optimum exceeds k_max.
std::optional<StackLayout> min_pages_for_order(const Dag& g, const LinearOrder& sigma,
                                               int k_max);

}  // namespace dagbook
