#pragma once

#include <vector>

#include "nioa/graph.hpp"
#include "nioa/partition.hpp"

namespace nioa {

// Fraction of a community's incident edges that stay inside it:
// intra / (intra + cut), where intra counts edges with both endpoints in the
// community and cut counts edges with exactly one. Returns 0 when the
// community touches no edge at all (empty or isolated). Throws
// std::domain_error if any node id is out of range.
double isolability(const Graph& g, const std::vector<int>& community);

// Average isolability over all k_max communities of the partition, empty ones
// contributing 0. The divisor is k_max, not the number of non-empty
// communities, so the objective is stable across iterations. Result in [0,1].
double avi(const Graph& g, const Partition& p);

} // namespace nioa
