// Whale optimization algorithm position update (Mirjalili & Lewis 2016): coin
// flip between a spiral around the best solution and shrinking encirclement;
// when the encircling coefficient is large the target is a random agent
// instead, which keeps exploration alive.
#include "nioa/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace nioa {

void woa_step(Population& pop, const PositionVector& best, int t,
              const OptimizerConfig& cfg, Rng& rng) {
    const double a = linear_decay(cfg.a_initial, t, cfg.max_iterations);
    const std::size_t pop_size = pop.positions.size();

    std::vector<PositionVector> next;
    next.reserve(pop_size);
    for (std::size_t i = 0; i < pop_size; ++i) {
        const auto& agent = pop.positions[i];
        PositionVector moved;
        moved.k_max = agent.k_max;
        moved.values.reserve(agent.values.size());

        const double p = rng.uniform();
        if (p >= 0.5) {
            // Logarithmic spiral around the best-so-far solution.
            for (std::size_t d = 0; d < agent.values.size(); ++d) {
                const double l = rng.uniform(-1.0, 1.0);
                const double dis = std::fabs(best.values[d] - agent.values[d]);
                moved.values.push_back(dis * std::exp(cfg.spiral_b * l) *
                                           std::cos(2.0 * std::numbers::pi * l) +
                                       best.values[d]);
            }
        } else {
            // Encircle: one random agent is drawn up front; per dimension a
            // single r feeds both A and C, and |A| >= 1 switches the target
            // from the best solution to that random agent's snapshot.
            const auto& random_agent = pop.positions[rng.index(pop_size)];
            for (std::size_t d = 0; d < agent.values.size(); ++d) {
                const double r = rng.uniform();
                const double A = 2.0 * a * r - a;
                const double C = 2.0 * r;
                const double target =
                    std::fabs(A) < 1.0 ? best.values[d] : random_agent.values[d];
                const double D = std::fabs(C * target - agent.values[d]);
                moved.values.push_back(target - A * D);
            }
        }
        next.push_back(std::move(moved));
    }
    pop.positions = std::move(next);
}

} // namespace nioa
