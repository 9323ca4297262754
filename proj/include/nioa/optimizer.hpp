#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nioa/fitness.hpp"
#include "nioa/graph.hpp"
#include "nioa/partition.hpp"
#include "nioa/rng.hpp"

namespace nioa {

enum class Algorithm { GWO, MFO, SCA, WOA };

Algorithm algorithm_from_string(std::string_view name); // throws std::invalid_argument
std::string to_string(Algorithm a);
const std::array<Algorithm, 4>& all_algorithms();

struct OptimizerConfig {
    Algorithm algorithm = Algorithm::GWO;
    int population_size = 30;
    int max_iterations = 500;
    int k_max = 2;
    std::uint64_t seed = 0;
    double spiral_b = 1.0;  // logarithmic-spiral shape (MFO, WOA)
    double a_initial = 2.0; // start of the linear a schedule (GWO, WOA) and
                            // the SCA r1 amplitude

    // Throws std::invalid_argument on violations (population < 1, < 3 for
    // GWO, max_iterations < 1, k_max < 1, non-positive a/b).
    void validate() const;
};

struct Population {
    std::vector<PositionVector> positions;
    std::vector<double> fitnesses; // avi of the decoded position, kept in sync
                                   // with positions by the optimize loop
};

// One seeded optimizer run. trajectory holds the best-so-far fitness after
// each iteration (non-decreasing, length = iterations_run) and best_fitness
// equals its last element.
struct RunResult {
    PositionVector best_position;
    Partition best_partition;
    double best_fitness = 0.0;
    std::vector<double> trajectory;
    std::uint64_t seed = 0;
    Algorithm algorithm = Algorithm::GWO;
    int iterations_run = 0;
};

// Shared loop: seed rng -> random population -> evaluate -> repeat
// {algorithm step, clamp, decode, evaluate, refresh attractors/best}.
// Deterministic in (g, cfg); maximizes avi.
RunResult optimize(const Graph& g, const OptimizerConfig& cfg);

// --- Parameter schedules (iteration t is 1-based, t in 1..max_iter) ---

// Linear a0 -> 0; exactly 0 at t = max_iter (GWO/WOA a, and SCA r1 with a0=2).
double linear_decay(double a0, int t, int max_iter);

// Flame-count schedule: round(N - t*(N-1)/T); N at the start, 1 at t = T.
int mfo_flame_count(int population, int t, int max_iter);

// --- Per-algorithm position updates ---
// Each step reads a snapshot of the population (and its attractors) and
// replaces pop.positions with the moved ones; fitnesses are left stale for
// the caller to re-evaluate after clamping. Draw order is part of the
// contract and is pinned by scripted-generator tests.

// Wolves move toward the three best-ever leaders (sorted best-first). Per
// wolf, per dimension, per leader: draw r1, r2; A = 2a*r1 - a, C = 2*r2,
// X'_m = leader_m - A*|C*leader_m - x|; new coordinate = mean over leaders.
void gwo_step(Population& pop, const std::array<PositionVector, 3>& leaders,
              int t, const OptimizerConfig& cfg, Rng& rng);

// Per agent, per dimension: r2 in [0,2pi), r3 in [0,2), r4 in [0,1);
// x' = x + r1*sin(r2)*|r3*best - x| (sine when r4 < 0.5, else cosine),
// r1 = a_initial*(1 - t/T).
void sca_step(Population& pop, const PositionVector& best, int t,
              const OptimizerConfig& cfg, Rng& rng);

// Moth of fitness-rank i spirals around flame min(i, flame_count-1):
// per dimension k in [-1,1], x' = |F - x|*e^(b*k)*cos(2pi*k) + F. flames are
// the archive sorted best-first; flame_count comes from mfo_flame_count.
void mfo_step(Population& pop, const std::vector<PositionVector>& flames,
              int flame_count, const OptimizerConfig& cfg, Rng& rng);

// Per agent: p in [0,1). p >= 0.5: spiral around best (per dimension
// l in [-1,1], x' = |best - x|*e^(b*l)*cos(2pi*l) + best). Otherwise draw one
// random agent index, then per dimension one shared r giving A = 2a*r - a and
// C = 2r; the target is best when |A| < 1, else the random agent's snapshot;
// x' = target - A*|C*target - x|.
void woa_step(Population& pop, const PositionVector& best, int t,
              const OptimizerConfig& cfg, Rng& rng);

} // namespace nioa
