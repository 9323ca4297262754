#include "nioa/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nioa {

namespace {

void check_k_max(int k_max) {
    if (k_max < 1) {
        throw std::invalid_argument("k_max must be >= 1, got " + std::to_string(k_max));
    }
}

} // namespace

PositionVector clamp(PositionVector x) {
    check_k_max(x.k_max);
    const double hi = static_cast<double>(x.k_max);
    for (double& v : x.values) v = std::min(std::max(v, 1.0), hi);
    return x;
}

Partition decode(const PositionVector& x) {
    check_k_max(x.k_max);
    Partition p;
    p.k_max = x.k_max;
    p.labels.reserve(x.values.size());
    for (double v : x.values) {
        // std::round rounds half away from zero, the pinned tie rule.
        int label = static_cast<int>(std::round(v));
        label = std::min(std::max(label, 1), x.k_max);
        p.labels.push_back(label);
    }
    return p;
}

std::vector<std::vector<int>> communities(const Partition& p) {
    check_k_max(p.k_max);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(p.k_max));
    for (std::size_t node = 0; node < p.labels.size(); ++node) {
        const int label = p.labels[node];
        if (label < 1 || label > p.k_max) {
            throw std::invalid_argument("label " + std::to_string(label) + " of node " +
                                        std::to_string(node) + " is outside 1.." +
                                        std::to_string(p.k_max));
        }
        out[static_cast<std::size_t>(label - 1)].push_back(static_cast<int>(node));
    }
    return out;
}

PositionVector random_position(int n, int k, Rng& rng) {
    check_k_max(k);
    PositionVector x;
    x.k_max = k;
    x.values.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x.values.push_back(rng.uniform(1.0, static_cast<double>(k)));
    return x;
}

} // namespace nioa
