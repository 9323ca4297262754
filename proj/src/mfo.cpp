// Moth flame optimization position update (Mirjalili 2015): each moth flies a
// logarithmic spiral around its flame; the usable flame count shrinks to one
// so stragglers converge on the best solution late in the run.
#include "nioa/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

namespace nioa {

void mfo_step(Population& pop, const std::vector<PositionVector>& flames, int flame_count,
              const OptimizerConfig& cfg, Rng& rng) {
    const std::size_t pop_size = pop.positions.size();

    // Moth ranks by current fitness (stable: equal fitness keeps lower index
    // first). Rank i orbits flame min(i, flame_count-1).
    std::vector<std::size_t> order(pop_size);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pop.fitnesses[a] > pop.fitnesses[b];
    });
    std::vector<std::size_t> rank_of(pop_size);
    for (std::size_t r = 0; r < pop_size; ++r) rank_of[order[r]] = r;

    const std::size_t last_flame =
        std::min(static_cast<std::size_t>(std::max(flame_count, 1)), flames.size()) - 1;

    std::vector<PositionVector> next;
    next.reserve(pop_size);
    for (std::size_t i = 0; i < pop_size; ++i) {
        const auto& moth = pop.positions[i];
        const auto& flame = flames[std::min(rank_of[i], last_flame)];
        PositionVector moved;
        moved.k_max = moth.k_max;
        moved.values.reserve(moth.values.size());
        for (std::size_t d = 0; d < moth.values.size(); ++d) {
            const double k = rng.uniform(-1.0, 1.0);
            const double dis = std::fabs(flame.values[d] - moth.values[d]);
            moved.values.push_back(dis * std::exp(cfg.spiral_b * k) *
                                       std::cos(2.0 * std::numbers::pi * k) +
                                   flame.values[d]);
        }
        next.push_back(std::move(moved));
    }
    pop.positions = std::move(next);
}

} // namespace nioa
