#include <doctest.h>

#include <stdexcept>

#include "nioa/partition.hpp"
#include "nioa/rng.hpp"

#include "oracles.hpp"

using nioa::Partition;
using nioa::PositionVector;

TEST_CASE("decode rounds half away from zero and clamps into range") {
    PositionVector p{{1.4, 1.5, 2.49, 0.2, 9.7, -3.0}, 3};
    const Partition q = nioa::decode(p);
    CHECK(q.k_max == 3);
    CHECK(q.labels == std::vector<int>{1, 2, 2, 1, 3, 1});
}

TEST_CASE("decode of an in-range integer grid is the identity") {
    PositionVector p{{1.0, 2.0, 3.0, 4.0}, 4};
    CHECK(nioa::decode(p).labels == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("clamp pins coordinates to [1, k_max]") {
    const PositionVector p =
        nioa::clamp(PositionVector{{-2.0, 0.99, 1.0, 4.0, 4.01, 100.0}, 4});
    CHECK(p.values == std::vector<double>{1.0, 1.0, 1.0, 4.0, 4.0, 4.0});
}

TEST_CASE("communities keeps empty groups") {
    Partition q{{1, 1, 3}, 4};
    const auto groups = nioa::communities(q);
    REQUIRE(groups.size() == 4);
    CHECK(groups[0] == std::vector<int>{0, 1});
    CHECK(groups[1].empty());
    CHECK(groups[2] == std::vector<int>{2});
    CHECK(groups[3].empty());
}

TEST_CASE("invalid shapes are rejected") {
    CHECK_THROWS_AS(nioa::decode(PositionVector{{1.0}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(nioa::communities(Partition{{1, 5}, 4}), std::invalid_argument);
    CHECK_THROWS_AS(nioa::communities(Partition{{0}, 4}), std::invalid_argument);
}

TEST_CASE("random_position draws every coordinate from [1, k_max]") {
    nioa::Mt64Rng rng(7);
    const PositionVector p = nioa::random_position(50, 6, rng);
    REQUIRE(p.values.size() == 50);
    CHECK(p.k_max == 6);
    for (double v : p.values) {
        CHECK(v >= 1.0);
        CHECK(v < 6.0 + 1e-9);
    }
}

TEST_CASE("random_position maps scripted draws linearly onto the label range") {
    oracles::ScriptedRng rng({0.0, 0.5, 0.999});
    const PositionVector p = nioa::random_position(3, 5, rng);
    CHECK(p.values[0] == doctest::Approx(1.0));
    CHECK(p.values[1] == doctest::Approx(3.0));
    CHECK(p.values[2] == doctest::Approx(1.0 + 0.999 * 4.0));
}
