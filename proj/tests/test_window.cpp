// Exploration windows: BFS balls, budgets, distances, components.
//
// Derived expected values are computed first with the brute-force oracle in
// tests/support/brute.hpp (independent of Window) and frozen as literals.
#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "endscope/gallery/registry.hpp"
#include "endscope/rng.hpp"
#include "endscope/window.hpp"
#include "support/brute.hpp"
#include "support/finite_graphs.hpp"

using namespace endscope;

namespace {

std::set<std::string> token_set(const std::vector<VertexId>& vs) {
    std::set<std::string> out;
    for (const auto& v : vs) out.insert(v.token);
    return out;
}

} // namespace

TEST_CASE("radius-zero window is the root alone, on the frontier") {
    auto ladder = gallery::make_ladder();
    Window w = explore(ladder.graph, 0);
    REQUIRE(w.vertex_count() == 1);
    REQUIRE(w.contains(VertexId("0:t")));
    REQUIRE(token_set(w.frontier()) == std::set<std::string>{"0:t"});
}

TEST_CASE("ladder radius-2 ball has exactly 8 vertices") {
    auto ladder = gallery::make_ladder();

    // Oracle: brute BFS over the neighbor stream, radius 2.
    auto adj = brute::expand(*ladder.graph, 3, 16);
    auto dist = brute::bfs(adj, "0:t");
    std::set<std::string> expected;
    for (const auto& [token, d] : dist)
        if (d <= 2) expected.insert(token);
    REQUIRE(expected == std::set<std::string>{"-2:t", "-1:t", "0:t", "1:t", "2:t", "-1:b", "0:b",
                                              "1:b"}); // frozen

    Window w = explore(ladder.graph, 2, constant_budget(100));
    REQUIRE(token_set(w.vertices()) == expected);
    REQUIRE(w.vertex_count() == 8);
}

TEST_CASE("star-of-paths with budget 5 reveals five first vertices") {
    auto star = gallery::make_star_of_paths();
    Window w = explore(star.graph, 1, constant_budget(5));
    REQUIRE(token_set(w.vertices()) ==
            std::set<std::string>{"x", "1:1", "2:1", "3:1", "4:1", "5:1"});
    REQUIRE(w.status(VertexId("x")) == VertexStatus::Truncated);
    REQUIRE(w.enumerated(VertexId("x")) == 5);
    // P_1 ends immediately: its single explored vertex is Complete.
    REQUIRE(w.is_complete(VertexId("1:1")));
    REQUIRE_FALSE(w.is_complete(VertexId("2:1")));
}

TEST_CASE("budget schedule of zero is rejected") {
    auto ladder = gallery::make_ladder();
    REQUIRE_THROWS_AS(explore(ladder.graph, 2, constant_budget(0)), InvalidConfigError);
    REQUIRE_THROWS_AS(explore(ladder.graph, -1), InvalidConfigError);
}

TEST_CASE("distances: identity, ladder pair, free-group formula") {
    auto ladder = gallery::make_ladder();
    Window lw = explore(ladder.graph, 6);
    REQUIRE(lw.distance(VertexId("1:t"), VertexId("1:t")).value == 0);
    REQUIRE(lw.distance(VertexId("1:t"), VertexId("1:t")).certainty == Certainty::Exact);

    // Brute oracle confirms d((0,t),(3,b)) = 4; frozen.
    auto adj = brute::expand(*ladder.graph, 7, 16);
    REQUIRE(brute::bfs(adj, "0:t").at("3:b") == 4);
    auto d = lw.distance(VertexId("0:t"), VertexId("3:b"));
    REQUIRE(d.value == 4);
    REQUIRE(d.certainty == Certainty::Exact);

    // Free group r=2: d(e, g1.g2.g1) = ceil(3/2) = 2; window BFS on the
    // explored ball agrees.
    auto free2 = gallery::make_free_group(2);
    Window fw = explore(free2.graph, 2);
    auto fd = fw.distance(VertexId("e"), VertexId("g1.g2.g1"));
    REQUIRE(fd.value == 2);
    REQUIRE(fd.certainty == Certainty::Exact);
    auto fadj = brute::expand(*free2.graph, 2, 2000);
    REQUIRE(brute::bfs(fadj, "e").at("g1.g2.g1") == 2);
}

TEST_CASE("unexplored vertices raise a not-explored error") {
    auto ladder = gallery::make_ladder();
    Window w = explore(ladder.graph, 2);
    REQUIRE_THROWS_AS(w.distance(VertexId("0:t"), VertexId("50:t")), NotExploredError);
}

TEST_CASE("set diameters") {
    auto ladder = gallery::make_ladder();
    Window w = explore(ladder.graph, 5);
    REQUIRE(w.set_diameter({}).value == 0);
    REQUIRE(w.set_diameter({VertexId("2:t")}).value == 0);
    auto d = w.set_diameter({VertexId("0:t"), VertexId("0:b"), VertexId("1:t")});
    REQUIRE(d.value == 2);
    REQUIRE(d.certainty == Certainty::Exact);

    // A K_N level is mutually adjacent: diameter 1.
    auto kn = gallery::make_kn_chain(gallery::KnVariant::V5a);
    Window kw = explore(kn.graph, 2, constant_budget(6));
    auto kd = kw.set_diameter({VertexId("0:0"), VertexId("0:1"), VertexId("0:2")});
    REQUIRE(kd.value == 1);
    REQUIRE(kd.certainty == Certainty::Exact);
}

TEST_CASE("components of complement: empty removal, ladder column, star tails") {
    auto ladder = gallery::make_ladder();
    Window w = explore(ladder.graph, 4);
    auto all = w.components_of_complement({});
    REQUIRE(all.component_count() == 1);

    auto lab = w.components_of_complement({VertexId("0:t"), VertexId("0:b")});
    REQUIRE(lab.component_count() == 2);
    for (const auto& [fp, open] : lab.open) REQUIRE(open); // both reach the frontier

    auto star = gallery::make_star_of_paths();
    Window sw = explore(star.graph, 20);
    auto ball = sw.ball(VertexId("x"), 1);
    auto slab = sw.components_of_complement(ball);
    // Budget 20 reveals P_1..P_20; P_1 disappears into the ball, the other
    // 19 tails are fully explored, hence Closed.
    REQUIRE(slab.component_count() == 19);
    for (const auto& [fp, open] : slab.open) REQUIRE_FALSE(open);
}

TEST_CASE("monotonicity: window growth, closed components and exact distances persist") {
    for (const char* tag : {"ladder", "star-paths", "x2", "kn-chain:variant=5d", "free:r=1"}) {
        auto g = gallery::make(tag);
        Window small = explore(g.graph, 4);
        Window big = explore(g.graph, 6);
        auto sv = token_set(small.vertices());
        auto bv = token_set(big.vertices());
        REQUIRE(std::includes(bv.begin(), bv.end(), sv.begin(), sv.end()));

        // Closed components of a fixed removal set never change.
        auto ball = small.ball(small.origin(), 1);
        auto lab_small = small.components_of_complement(ball);
        auto lab_big = big.components_of_complement(ball);
        for (const auto& [fp, open] : lab_small.open) {
            if (open) continue;
            REQUIRE(lab_big.open.count(fp) == 1);
            REQUIRE_FALSE(lab_big.open.at(fp));
            REQUIRE(lab_big.members.at(fp) == lab_small.members.at(fp));
        }

        // Exact distances persist.
        CounterRng rng(2024);
        auto vs = small.vertices();
        for (int i = 0; i < 30; ++i) {
            const auto& a = vs[rng.next_below(vs.size())];
            const auto& b = vs[rng.next_below(vs.size())];
            auto ds = small.distance(a, b);
            if (ds.certainty != Certainty::Exact) continue;
            auto db = big.distance(a, b);
            REQUIRE(db.certainty == Certainty::Exact);
            REQUIRE(db.value == ds.value);
        }
    }
}

TEST_CASE("window edges satisfy symmetry and the distance-1 criterion") {
    for (const char* tag : {"ladder", "x1", "kn-chain:variant=5c", "treeplus2:b=3"}) {
        auto g = gallery::make(tag);
        Window w = explore(g.graph, 3);
        for (const auto& [a, b] : w.edges()) {
            REQUIRE(g.graph->is_adjacent(a, b));
            REQUIRE(g.graph->is_adjacent(b, a));
            REQUIRE(w.distance(a, b).value == 1);
        }
    }
}

TEST_CASE("triangle inequality on sampled window triples") {
    for (const char* tag : {"ladder", "x2", "free:r=2", "kn-chain:variant=5d"}) {
        auto g = gallery::make(tag);
        Window w = explore(g.graph, 3);
        auto vs = w.vertices();
        CounterRng rng(77);
        for (int i = 0; i < 60; ++i) {
            const auto& a = vs[rng.next_below(vs.size())];
            const auto& b = vs[rng.next_below(vs.size())];
            const auto& c = vs[rng.next_below(vs.size())];
            int ab = w.distance(a, b).value;
            int bc = w.distance(b, c).value;
            int ac = w.distance(a, c).value;
            REQUIRE(ac <= ab + bc);
        }
    }
}

TEST_CASE("fully explored finite graphs have no frontier") {
    Window w = explore(testgraphs::triangle(), 3);
    REQUIRE(w.fully_explored());
    REQUIRE(w.vertex_count() == 3);
    REQUIRE(w.set_diameter(w.vertices()).value == 1);
}
