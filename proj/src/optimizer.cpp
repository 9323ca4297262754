#include "nioa/optimizer.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace nioa {

Algorithm algorithm_from_string(std::string_view name) {
    std::string up(name);
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (up == "GWO") return Algorithm::GWO;
    if (up == "MFO") return Algorithm::MFO;
    if (up == "SCA") return Algorithm::SCA;
    if (up == "WOA") return Algorithm::WOA;
    throw std::invalid_argument("unknown algorithm \"" + std::string(name) +
                                "\"; expected one of GWO, MFO, SCA, WOA");
}

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::GWO: return "GWO";
        case Algorithm::MFO: return "MFO";
        case Algorithm::SCA: return "SCA";
        case Algorithm::WOA: return "WOA";
    }
    return "?";
}

const std::array<Algorithm, 4>& all_algorithms() {
    static const std::array<Algorithm, 4> algs = {Algorithm::GWO, Algorithm::MFO,
                                                  Algorithm::SCA, Algorithm::WOA};
    return algs;
}

void OptimizerConfig::validate() const {
    if (population_size < 1) throw std::invalid_argument("population_size must be >= 1");
    if (algorithm == Algorithm::GWO && population_size < 3) {
        throw std::invalid_argument("GWO needs population_size >= 3 (three leaders)");
    }
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    if (!(a_initial > 0.0)) throw std::invalid_argument("a_initial must be positive");
    if (!(spiral_b > 0.0)) throw std::invalid_argument("spiral_b must be positive");
}

double linear_decay(double a0, int t, int max_iter) {
    return a0 * (1.0 - static_cast<double>(t) / static_cast<double>(max_iter));
}

int mfo_flame_count(int population, int t, int max_iter) {
    const double raw = population - static_cast<double>(t) * (population - 1) /
                                        static_cast<double>(max_iter);
    const int fc = static_cast<int>(std::llround(raw));
    return std::min(std::max(fc, 1), population);
}

namespace {

// Indices sorted by fitness descending; stable, so equal fitness keeps the
// lower index first. Shared by leader/flame/rank bookkeeping.
std::vector<std::size_t> order_by_fitness(const std::vector<double>& fit) {
    std::vector<std::size_t> order(fit.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fit[a] > fit[b]; });
    return order;
}

} // namespace

RunResult optimize(const Graph& g, const OptimizerConfig& cfg) {
    cfg.validate();
    if (g.node_count() == 0) throw std::invalid_argument("cannot optimize an empty graph");

    Mt64Rng rng(cfg.seed);
    const int n = g.node_count();
    const std::size_t pop_size = static_cast<std::size_t>(cfg.population_size);

    Population pop;
    pop.positions.reserve(pop_size);
    for (std::size_t i = 0; i < pop_size; ++i) {
        pop.positions.push_back(random_position(n, cfg.k_max, rng));
    }
    pop.fitnesses.resize(pop_size);
    auto evaluate = [&] {
        for (std::size_t i = 0; i < pop_size; ++i) {
            pop.fitnesses[i] = avi(g, decode(pop.positions[i]));
        }
    };
    evaluate();

    // Best-so-far (ties keep the first finder, for determinism).
    auto init_order = order_by_fitness(pop.fitnesses);
    PositionVector best_pos = pop.positions[init_order[0]];
    double best_fit = pop.fitnesses[init_order[0]];

    // GWO leaders: the three best-ever candidates, best first.
    std::array<PositionVector, 3> leader_pos;
    std::array<double, 3> leader_fit{};
    if (cfg.algorithm == Algorithm::GWO) {
        for (std::size_t m = 0; m < 3; ++m) {
            leader_pos[m] = pop.positions[init_order[m]];
            leader_fit[m] = pop.fitnesses[init_order[m]];
        }
    }

    // MFO flame archive: best population_size candidates seen so far, sorted
    // best first; existing flames outrank equal-fitness newcomers.
    std::vector<PositionVector> flame_pos;
    std::vector<double> flame_fit;
    if (cfg.algorithm == Algorithm::MFO) {
        flame_pos.reserve(pop_size);
        flame_fit.reserve(pop_size);
        for (std::size_t r = 0; r < pop_size; ++r) {
            flame_pos.push_back(pop.positions[init_order[r]]);
            flame_fit.push_back(pop.fitnesses[init_order[r]]);
        }
    }

    RunResult result;
    result.seed = cfg.seed;
    result.algorithm = cfg.algorithm;
    result.trajectory.reserve(static_cast<std::size_t>(cfg.max_iterations));

    for (int t = 1; t <= cfg.max_iterations; ++t) {
        switch (cfg.algorithm) {
            case Algorithm::GWO:
                gwo_step(pop, leader_pos, t, cfg, rng);
                break;
            case Algorithm::SCA:
                sca_step(pop, best_pos, t, cfg, rng);
                break;
            case Algorithm::WOA:
                woa_step(pop, best_pos, t, cfg, rng);
                break;
            case Algorithm::MFO:
                mfo_step(pop, flame_pos, mfo_flame_count(cfg.population_size, t, cfg.max_iterations),
                         cfg, rng);
                break;
        }

        for (auto& x : pop.positions) x = clamp(std::move(x));
        evaluate();

        if (cfg.algorithm == Algorithm::GWO) {
            for (std::size_t i = 0; i < pop_size; ++i) {
                const double f = pop.fitnesses[i];
                if (f > leader_fit[0]) {
                    leader_fit[2] = leader_fit[1]; leader_pos[2] = std::move(leader_pos[1]);
                    leader_fit[1] = leader_fit[0]; leader_pos[1] = std::move(leader_pos[0]);
                    leader_fit[0] = f; leader_pos[0] = pop.positions[i];
                } else if (f > leader_fit[1]) {
                    leader_fit[2] = leader_fit[1]; leader_pos[2] = std::move(leader_pos[1]);
                    leader_fit[1] = f; leader_pos[1] = pop.positions[i];
                } else if (f > leader_fit[2]) {
                    leader_fit[2] = f; leader_pos[2] = pop.positions[i];
                }
            }
        } else if (cfg.algorithm == Algorithm::MFO) {
            // Merge old flames (first, so they win ties) with the moved moths,
            // keep the best population_size.
            std::vector<PositionVector> merged_pos;
            std::vector<double> merged_fit;
            merged_pos.reserve(flame_pos.size() + pop_size);
            merged_fit.reserve(flame_fit.size() + pop_size);
            for (std::size_t i = 0; i < flame_pos.size(); ++i) {
                merged_pos.push_back(std::move(flame_pos[i]));
                merged_fit.push_back(flame_fit[i]);
            }
            for (std::size_t i = 0; i < pop_size; ++i) {
                merged_pos.push_back(pop.positions[i]);
                merged_fit.push_back(pop.fitnesses[i]);
            }
            auto order = order_by_fitness(merged_fit);
            flame_pos.clear();
            flame_fit.clear();
            for (std::size_t r = 0; r < pop_size; ++r) {
                flame_pos.push_back(std::move(merged_pos[order[r]]));
                flame_fit.push_back(merged_fit[order[r]]);
            }
        }

        for (std::size_t i = 0; i < pop_size; ++i) {
            if (pop.fitnesses[i] > best_fit) {
                best_fit = pop.fitnesses[i];
                best_pos = pop.positions[i];
            }
        }
        result.trajectory.push_back(best_fit);
    }

    result.best_position = best_pos;
    result.best_partition = decode(best_pos);
    result.best_fitness = best_fit;
    result.iterations_run = cfg.max_iterations;
    return result;
}

} // namespace nioa
