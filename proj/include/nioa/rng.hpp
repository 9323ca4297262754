#pragma once

#include <cstdint>
#include <random>

namespace nioa {

// Seedable random source behind a virtual interface so tests can substitute a
// scripted sequence. All library randomness flows through uniform().
class Rng {
public:
    virtual ~Rng() = default;

    // Uniform double in [0, 1).
    virtual double uniform() = 0;

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer index in [0, n). n must be positive.
    std::size_t index(std::size_t n) {
        auto i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }
};

// Production source: mt19937_64 with an explicit 53-bit mapping to [0, 1).
// The engine's output sequence is fixed by the C++ standard and the mapping
// avoids std::uniform_real_distribution, whose results vary across standard
// library implementations; together they make runs reproducible everywhere.
class Mt64Rng final : public Rng {
public:
    explicit Mt64Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() override {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace nioa
