#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace nioa {

// Immutable undirected, unweighted simple graph. Node ids are contiguous
// integers 0..node_count()-1; adjacency lists are sorted and symmetric.
class Graph {
public:
    // Parses edge-list text: lines starting with '#' or '%' are comments,
    // blank lines are skipped, every other line must hold exactly two
    // whitespace-separated node tokens. Tokens are remapped to dense ids in
    // first-appearance order; original tokens stay available via label().
    // Throws std::runtime_error (with the line number) on malformed lines and
    // std::invalid_argument on self-loops or duplicate edges.
    static Graph from_edge_list(std::istream& in);
    static Graph from_edge_list(const std::string& text);

    // Builds from explicit 0-based edges over node_count nodes; validates the
    // same simple-graph rules as the parser.
    static Graph from_edges(int node_count, const std::vector<std::pair<int, int>>& edges);

    int node_count() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edges_.size(); }

    // Sorted (u, v) pairs with u < v.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    // 2|E| / |V|; throws std::domain_error on an empty graph.
    double average_degree() const;

    // Original token for a node id (ids are assigned in first-appearance
    // order when parsing; from_edges uses the decimal id itself).
    const std::string& label(int v) const;

private:
    Graph() = default;
    void check_node(int v) const;

    std::vector<std::vector<int>> adjacency_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> labels_;
};

} // namespace nioa
