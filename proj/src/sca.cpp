// Sine cosine algorithm position update (Mirjalili 2016): oscillate around
// the best-so-far solution, amplitude r1 shrinking linearly to zero.
#include "nioa/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace nioa {

void sca_step(Population& pop, const PositionVector& best, int t,
              const OptimizerConfig& cfg, Rng& rng) {
    const double r1 = linear_decay(cfg.a_initial, t, cfg.max_iterations);
    std::vector<PositionVector> next;
    next.reserve(pop.positions.size());

    for (const auto& agent : pop.positions) {
        PositionVector moved;
        moved.k_max = agent.k_max;
        moved.values.reserve(agent.values.size());
        for (std::size_t d = 0; d < agent.values.size(); ++d) {
            const double x = agent.values[d];
            const double r2 = rng.uniform(0.0, 2.0 * std::numbers::pi);
            const double r3 = rng.uniform(0.0, 2.0);
            const double r4 = rng.uniform();
            const double swing = std::fabs(r3 * best.values[d] - x);
            const double trig = r4 < 0.5 ? std::sin(r2) : std::cos(r2);
            moved.values.push_back(x + r1 * trig * swing);
        }
        next.push_back(std::move(moved));
    }
    pop.positions = std::move(next);
}

} // namespace nioa
