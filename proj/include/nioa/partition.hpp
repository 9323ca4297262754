#pragma once

#include <vector>

#include "nioa/rng.hpp"

namespace nioa {

// A point in the continuous search space: one real per node, each meant to
// live in [1, k_max]. Rounding a coordinate yields the node's community label.
struct PositionVector {
    std::vector<double> values;
    int k_max = 1;

    std::size_t size() const { return values.size(); }
    bool operator==(const PositionVector&) const = default;
};

// Discrete community assignment decoded from a PositionVector: labels in
// {1..k_max}. Some labels may be unused (empty communities are legal).
struct Partition {
    std::vector<int> labels;
    int k_max = 1;

    bool operator==(const Partition&) const = default;
};

// Clamps every coordinate into [1, k_max]. Idempotent.
PositionVector clamp(PositionVector x);

// Rounds each coordinate half-away-from-zero, then clamps the integer into
// {1..k_max}. Total: any real vector decodes to a valid Partition.
Partition decode(const PositionVector& x);

// Exactly k_max node-id lists in label order (label i+1 -> entry i); empty
// communities are kept so the community count never silently changes.
std::vector<std::vector<int>> communities(const Partition& p);

// Fresh candidate with every coordinate uniform in [1, k].
PositionVector random_position(int n, int k, Rng& rng);

} // namespace nioa
