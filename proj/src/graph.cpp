#include "nioa/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace nioa {

namespace {

bool is_comment_or_blank(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r\n\v\f");
    if (pos == std::string::npos) return true;
    return line[pos] == '#' || line[pos] == '%';
}

} // namespace

Graph Graph::from_edge_list(std::istream& in) {
    Graph g;
    std::unordered_map<std::string, int> id_of;
    std::set<std::pair<int, int>> seen;
    std::string line;
    int line_no = 0;

    auto intern = [&](const std::string& token) {
        auto [it, inserted] = id_of.emplace(token, static_cast<int>(g.labels_.size()));
        if (inserted) {
            g.labels_.push_back(token);
            g.adjacency_.emplace_back();
        }
        return it->second;
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;

        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a >> b)) {
            throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                     ": expected two node tokens, got \"" + line + "\"");
        }
        if (fields >> extra) {
            throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                     ": expected two node tokens, got more in \"" + line + "\"");
        }
        if (a == b) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": self-loop on node \"" + a + "\"");
        }
        int u = intern(a);
        int v = intern(b);
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) {
            throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                        ": duplicate edge (" + a + ", " + b + ")");
        }
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }

    g.edges_.assign(seen.begin(), seen.end());
    for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
    return g;
}

Graph Graph::from_edge_list(const std::string& text) {
    std::istringstream in(text);
    return from_edge_list(in);
}

Graph Graph::from_edges(int node_count, const std::vector<std::pair<int, int>>& edges) {
    if (node_count < 0) throw std::invalid_argument("negative node count");
    Graph g;
    g.adjacency_.resize(node_count);
    g.labels_.reserve(node_count);
    for (int v = 0; v < node_count; ++v) g.labels_.push_back(std::to_string(v));

    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= node_count || v < 0 || v >= node_count) {
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") out of range for " + std::to_string(node_count) + " nodes");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop on node " + std::to_string(u));
        }
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ")");
        }
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    g.edges_.assign(seen.begin(), seen.end());
    for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
    return g;
}

void Graph::check_node(int v) const {
    if (v < 0 || v >= node_count()) {
        throw std::domain_error("node id " + std::to_string(v) + " out of range [0, " +
                                std::to_string(node_count()) + ")");
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_node(v);
    return adjacency_[v];
}

int Graph::degree(int v) const {
    check_node(v);
    return static_cast<int>(adjacency_[v].size());
}

bool Graph::has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

double Graph::average_degree() const {
    if (node_count() == 0) throw std::domain_error("average degree of an empty graph");
    return 2.0 * static_cast<double>(edge_count()) / node_count();
}

const std::string& Graph::label(int v) const {
    check_node(v);
    return labels_[v];
}

} // namespace nioa
