#include <catch_amalgamated.hpp>

#include "endscope/rng.hpp"

using endscope::CounterRng;

TEST_CASE("same seed reproduces the same stream") {
    CounterRng a(42), b(42);
    for (int i = 0; i < 100; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("different seeds and different splits give different streams") {
    CounterRng a(1), b(2);
    int same = 0;
    for (int i = 0; i < 64; ++i)
        if (a.next_u64() == b.next_u64()) ++same;
    REQUIRE(same == 0);

    CounterRng parent(7);
    CounterRng c1 = parent.split(0), c2 = parent.split(1);
    same = 0;
    for (int i = 0; i < 64; ++i)
        if (c1.next_u64() == c2.next_u64()) ++same;
    REQUIRE(same == 0);
}

TEST_CASE("split streams are independent of parent draws") {
    CounterRng p1(9), p2(9);
    (void)p1.next_u64(); // advance one parent only
    CounterRng c1 = p1.split(3), c2 = p2.split(3);
    for (int i = 0; i < 16; ++i) REQUIRE(c1.next_u64() == c2.next_u64());
}

TEST_CASE("next_unit lands in [0,1) with a sane mean") {
    CounterRng rng(123);
    double sum = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        double u = rng.next_unit();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    REQUIRE(sum / n == Catch::Approx(0.5).margin(0.01));
}

TEST_CASE("next_below stays in range and covers all residues") {
    CounterRng rng(5);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 1000; ++i) {
        auto v = rng.next_below(7);
        REQUIRE(v < 7);
        ++hits[static_cast<std::size_t>(v)];
    }
    for (int h : hits) REQUIRE(h > 0);
}
