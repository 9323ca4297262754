// Grey wolf optimizer position update (Mirjalili, Mirjalili & Lewis 2014):
// every wolf is pulled toward the three best-ever leaders; the pull decays
// with the linear a schedule.
#include "nioa/optimizer.hpp"

#include <cmath>
#include <vector>

namespace nioa {

void gwo_step(Population& pop, const std::array<PositionVector, 3>& leaders, int t,
              const OptimizerConfig& cfg, Rng& rng) {
    const double a = linear_decay(cfg.a_initial, t, cfg.max_iterations);
    std::vector<PositionVector> next;
    next.reserve(pop.positions.size());

    for (const auto& wolf : pop.positions) {
        PositionVector moved;
        moved.k_max = wolf.k_max;
        moved.values.reserve(wolf.values.size());
        for (std::size_t d = 0; d < wolf.values.size(); ++d) {
            const double x = wolf.values[d];
            double acc = 0.0;
            for (const auto& leader : leaders) { // alpha, beta, delta
                const double r1 = rng.uniform();
                const double r2 = rng.uniform();
                const double A = 2.0 * a * r1 - a;
                const double C = 2.0 * r2;
                const double L = leader.values[d];
                const double D = std::fabs(C * L - x);
                acc += L - A * D;
            }
            moved.values.push_back(acc / 3.0);
        }
        next.push_back(std::move(moved));
    }
    pop.positions = std::move(next);
}

} // namespace nioa
