#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nioa/rng.hpp"
#include "oracles.hpp"

TEST_CASE("same seed reproduces the same stream") {
    nioa::Mt64Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) CHECK(a.uniform() == b.uniform());
}

TEST_CASE("different seeds diverge") {
    nioa::Mt64Rng a(1), b(2);
    int same = 0;
    for (int i = 0; i < 100; ++i) {
        if (a.uniform() == b.uniform()) ++same;
    }
    CHECK(same < 5);
}

TEST_CASE("uniform stays in [0,1) and fills the range") {
    nioa::Mt64Rng rng(7);
    double lo = 1.0, hi = 0.0, sum = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        sum += u;
    }
    CHECK(lo < 0.01);
    CHECK(hi > 0.99);
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("ranged uniform and index mapping") {
    oracles::ScriptedRng rng({0.0, 0.5, 0.999, 0.0, 0.999});
    CHECK(rng.uniform(-1.0, 1.0) == -1.0);
    CHECK(rng.uniform(-1.0, 1.0) == 0.0);
    CHECK(rng.uniform(2.0, 4.0) == doctest::Approx(3.998));
    CHECK(rng.index(5) == 0);
    CHECK(rng.index(5) == 4);
    CHECK(rng.remaining() == 0);
}

TEST_CASE("scripted rng refuses to improvise") {
    oracles::ScriptedRng rng({0.25});
    CHECK(rng.uniform() == 0.25);
    CHECK_THROWS_AS(rng.uniform(), std::out_of_range);
}
