#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nioa/datasets.hpp"
#include "nioa/graph.hpp"

using nioa::Graph;

TEST_CASE("parses a two-edge path") {
    const Graph g = Graph::from_edge_list("0 1\n1 2\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("comments, blank lines and arbitrary whitespace are accepted") {
    const Graph g = Graph::from_edge_list(
        "# heading comment\n"
        "\n"
        "% percent comment\n"
        "  0\t1\n"
        "   \t\n"
        "1 2   \n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("node tokens map to dense ids in first-appearance order") {
    const Graph g = Graph::from_edge_list("alice bob\ncarol alice\n");
    CHECK(g.node_count() == 3);
    CHECK(g.label(0) == "alice");
    CHECK(g.label(1) == "bob");
    CHECK(g.label(2) == "carol");
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 0));
}

TEST_CASE("malformed lines report their line number") {
    CHECK_THROWS_WITH_AS(Graph::from_edge_list("0 1\nonly_one_token\n"),
                         doctest::Contains("line 2"), std::runtime_error);
    CHECK_THROWS_WITH_AS(Graph::from_edge_list("0 1\n\n2 3 4\n"), doctest::Contains("line 3"),
                         std::runtime_error);
}

TEST_CASE("self-loops and duplicate edges are rejected") {
    CHECK_THROWS_AS(Graph::from_edge_list("0 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list("0 1\n0 1\n"), std::invalid_argument);
    // an edge listed again in reversed orientation is still a duplicate
    CHECK_THROWS_AS(Graph::from_edge_list("0 1\n1 0\n"), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric, sorted and satisfies the handshake lemma") {
    const Graph g = Graph::from_edge_list("0 1\n0 2\n1 2\n2 3\n");
    std::size_t degree_sum = 0;
    for (int v = 0; v < g.node_count(); ++v) {
        degree_sum += static_cast<std::size_t>(g.degree(v));
        CHECK(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
        for (int u : g.neighbors(v)) CHECK(g.has_edge(u, v));
    }
    CHECK(degree_sum == 2 * g.edge_count());
}

TEST_CASE("line-permuted input yields the same counts") {
    const Graph a = Graph::from_edge_list("0 1\n1 2\n2 3\n3 0\n");
    const Graph b = Graph::from_edge_list("3 0\n2 3\n0 1\n1 2\n");
    CHECK(a.node_count() == b.node_count());
    CHECK(a.edge_count() == b.edge_count());
}

TEST_CASE("average degree") {
    CHECK(Graph::from_edge_list("0 1\n").average_degree() == 1.0);
    CHECK_THROWS_AS(Graph::from_edge_list("").average_degree(), std::domain_error);
}

TEST_CASE("node queries validate their argument") {
    const Graph g = Graph::from_edge_list("0 1\n");
    CHECK_THROWS_AS(g.degree(2), std::domain_error);
    CHECK_THROWS_AS(g.neighbors(-1), std::domain_error);
    CHECK_THROWS_AS((void)g.label(5), std::domain_error);
}

TEST_CASE("from_edges validates like the parser") {
    const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("bundled datasets have the documented shapes") {
    const Graph& karate = nioa::builtin_dataset("karate");
    CHECK(karate.node_count() == 34);
    CHECK(karate.edge_count() == 78);
    CHECK(karate.average_degree() == doctest::Approx(4.5882).epsilon(1e-4));

    const Graph& dolphin = nioa::builtin_dataset("dolphin");
    CHECK(dolphin.node_count() == 62);
    CHECK(dolphin.edge_count() == 159);
    CHECK(dolphin.average_degree() == doctest::Approx(5.1290).epsilon(1e-4));

    const Graph& football = nioa::builtin_dataset("football");
    CHECK(football.node_count() == 115);
    CHECK(football.edge_count() == 613);
    CHECK(football.average_degree() == doctest::Approx(10.6609).epsilon(1e-4));
}

TEST_CASE("unknown dataset names fail the lookup") {
    CHECK_THROWS_AS(nioa::builtin_dataset("petersen"), std::out_of_range);
    CHECK_THROWS_AS(nioa::default_k("petersen"), std::out_of_range);
    CHECK(nioa::default_k("karate") == 2);
    CHECK(nioa::default_k("dolphin") == 2);
    CHECK(nioa::default_k("football") == 12);
    CHECK(nioa::builtin_dataset_names().size() == 3);
}

TEST_CASE("builtin graphs are connected and loop back through the parser") {
    for (const auto& name : nioa::builtin_dataset_names()) {
        const Graph& g = nioa::builtin_dataset(name);
        // BFS from node 0 must reach everything: these social networks are
        // connected, so a truncated or corrupted edge list shows up here.
        std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
        std::vector<int> queue = {0};
        seen[0] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (int nb : g.neighbors(queue[head])) {
                if (!seen[static_cast<std::size_t>(nb)]) {
                    seen[static_cast<std::size_t>(nb)] = 1;
                    queue.push_back(nb);
                }
            }
        }
        CHECK(queue.size() == static_cast<std::size_t>(g.node_count()));
    }
}
