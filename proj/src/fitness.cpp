#include "nioa/fitness.hpp"

#include <stdexcept>
#include <string>

namespace nioa {

double isolability(const Graph& g, const std::vector<int>& community) {
    std::vector<char> member(static_cast<std::size_t>(g.node_count()), 0);
    for (int v : community) {
        if (v < 0 || v >= g.node_count()) {
            throw std::domain_error("community node id " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(g.node_count()) + ")");
        }
        member[static_cast<std::size_t>(v)] = 1;
    }
    long intra = 0, cut = 0;
    for (auto [u, v] : g.edges()) {
        const int inside = member[static_cast<std::size_t>(u)] + member[static_cast<std::size_t>(v)];
        if (inside == 2) ++intra;
        else if (inside == 1) ++cut;
    }
    if (intra + cut == 0) return 0.0;
    return static_cast<double>(intra) / static_cast<double>(intra + cut);
}

double avi(const Graph& g, const Partition& p) {
    // One pass over the edges: count, per community, the edges fully inside it
    // and the cut edges incident to it. Same semantics as calling isolability
    // per community, without k scans.
    const std::size_t k = static_cast<std::size_t>(p.k_max);
    if (p.labels.size() != static_cast<std::size_t>(g.node_count())) {
        throw std::domain_error("partition holds " + std::to_string(p.labels.size()) +
                                " labels for a graph of " + std::to_string(g.node_count()) +
                                " nodes");
    }
    for (int l : p.labels) {
        if (l < 1 || l > p.k_max) {
            throw std::domain_error("label " + std::to_string(l) + " outside 1.." +
                                    std::to_string(p.k_max));
        }
    }
    std::vector<long> intra(k, 0), cut(k, 0);
    for (auto [u, v] : g.edges()) {
        const int lu = p.labels[static_cast<std::size_t>(u)];
        const int lv = p.labels[static_cast<std::size_t>(v)];
        if (lu == lv) {
            ++intra[static_cast<std::size_t>(lu - 1)];
        } else {
            ++cut[static_cast<std::size_t>(lu - 1)];
            ++cut[static_cast<std::size_t>(lv - 1)];
        }
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const long touched = intra[i] + cut[i];
        if (touched > 0) sum += static_cast<double>(intra[i]) / static_cast<double>(touched);
    }
    return sum / static_cast<double>(p.k_max);
}

} // namespace nioa
