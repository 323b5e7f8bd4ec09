#pragma once

#include <functional>
#include <vector>

#include "dagbook/dag.hpp"
#include "dagbook/order.hpp"

namespace dagbook {

/// k pairwise-crossing edges: under the accompanying order the sources
/// strictly increase, the targets strictly increase, and the last source
/// precedes the first target.
struct TwistCertificate {
  std::vector<Edge> edges;

  int k() const { return static_cast<int>(edges.size()); }
};

/// True iff the edge set forms a twist under sigma.
bool is_twist(const LinearOrder& sigma, const std::vector<Edge>& edges);

using EdgePredicate = std::function<bool(const Edge&)>;

/// A maximum twist of g under sigma. For every gap between consecutive
/// positions, the edges spanning the gap are chained by strict increase in
/// both endpoints (a longest increasing subsequence on target positions
/// after sorting by source position); the best gap wins. O(n * m log m).
/// Throws std::invalid_argument if sigma is not a linear extension of g.
TwistCertificate max_twist(const Dag& g, const LinearOrder& sigma);

/// As max_twist restricted to edges satisfying pred.
TwistCertificate max_twist_of_subset(const Dag& g, const LinearOrder& sigma,
                                     const EdgePredicate& pred);

/// Exhaustive maximum twist over all edge subsets; oracle for max_twist.
/// Intended for m <= 20.
TwistCertificate max_twist_bruteforce(const Dag& g, const LinearOrder& sigma);

/// Core routine shared by the variants: maximum twist of an explicit edge
/// list under explicit positions.
TwistCertificate max_twist_of_edges(const std::vector<Edge>& edges,
                                    const std::vector<int>& position);

}  // namespace dagbook
