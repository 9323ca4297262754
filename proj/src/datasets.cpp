#include "nioa/datasets.hpp"

#include <stdexcept>

namespace nioa {

namespace detail {
std::string_view karate_edges();
std::string_view dolphin_edges();
std::string_view football_edges();
} // namespace detail

std::string_view builtin_dataset_text(std::string_view name) {
    if (name == "karate") return detail::karate_edges();
    if (name == "dolphin") return detail::dolphin_edges();
    if (name == "football") return detail::football_edges();
    throw std::out_of_range("unknown dataset \"" + std::string(name) +
                            "\"; bundled datasets: karate, dolphin, football");
}

const Graph& builtin_dataset(std::string_view name) {
    // Parsed once per dataset; Graph is immutable afterwards, so sharing the
    // instance across concurrent runs is safe.
    if (name == "karate") {
        static const Graph g = Graph::from_edge_list(std::string(detail::karate_edges()));
        return g;
    }
    if (name == "dolphin") {
        static const Graph g = Graph::from_edge_list(std::string(detail::dolphin_edges()));
        return g;
    }
    if (name == "football") {
        static const Graph g = Graph::from_edge_list(std::string(detail::football_edges()));
        return g;
    }
    throw std::out_of_range("unknown dataset \"" + std::string(name) +
                            "\"; bundled datasets: karate, dolphin, football");
}

const std::vector<std::string>& builtin_dataset_names() {
    static const std::vector<std::string> names = {"karate", "dolphin", "football"};
    return names;
}

int default_k(std::string_view name) {
    if (name == "karate") return 2;
    if (name == "dolphin") return 2;
    if (name == "football") return 12;
    throw std::out_of_range("unknown dataset \"" + std::string(name) +
                            "\"; bundled datasets: karate, dolphin, football");
}

} // namespace nioa
