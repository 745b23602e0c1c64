// Boundaries, cut classification, star balls, diameter witnesses, and the
// cut identities (Lemma 2, Theorem 3, the certification hierarchy).
#include <catch_amalgamated.hpp>

#include <set>

#include "endscope/cuts.hpp"
#include "endscope/gallery/registry.hpp"
#include "endscope/rng.hpp"
#include "support/brute.hpp"
#include "support/finite_graphs.hpp"

using namespace endscope;

namespace {

std::set<std::string> token_set(const std::vector<VertexId>& vs) {
    std::set<std::string> out;
    for (const auto& v : vs) out.insert(v.token);
    return out;
}

// Random explicit carriers inside a window.
std::vector<VertexId> random_subset(const Window& w, CounterRng& rng, std::size_t max_size) {
    auto vs = w.vertices();
    std::size_t size = 1 + rng.next_below(max_size);
    std::set<std::string> picked;
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < size; ++i) {
        const auto& v = vs[rng.next_below(vs.size())];
        if (picked.insert(v.token).second) out.push_back(v);
    }
    return out;
}

} // namespace

TEST_CASE("boundaries of the ladder right half") {
    auto ladder = gallery::make_ladder();
    Window w = explore(ladder.graph, 6);
    auto b = boundaries(w, Carrier::gallery_shape("right-half", 1), ladder.oracle.get());
    REQUIRE(token_set(b.theta) == std::set<std::string>{"0:t", "0:b"});
    REQUIRE(token_set(b.inner_theta) == std::set<std::string>{"1:t", "1:b"});
    REQUIRE(b.delta.size() == 2); // the two rail edges
    REQUIRE(b.delta_growing); // both sides reach beyond the window
}

TEST_CASE("theta of the full vertex set is empty") {
    auto ladder = gallery::make_ladder();
    Window w = explore(ladder.graph, 4);
    auto b = boundaries(w, Carrier::explicit_finite(w.vertices()));
    REQUIRE(b.theta.empty());
    REQUIRE(b.delta.empty());
}

TEST_CASE("X2 tail: theta is the hub, delta grows with budget") {
    auto x2 = gallery::make_x2();
    Window w = explore(x2.graph, 8);
    auto b = boundaries(w, Carrier::gallery_shape("side-tail", 1), x2.oracle.get());
    REQUIRE(token_set(b.theta) == std::set<std::string>{"x"});
    REQUIRE(b.delta_growing);
    // One crossing edge per explored tail vertex.
    std::size_t tail_in_window = 0;
    for (const auto& v : w.vertices())
        if (v.token.rfind("1:", 0) == 0) ++tail_in_window;
    REQUIRE(b.delta.size() == tail_in_window);
}

TEST_CASE("carrier referencing unexplored vertices fails loudly") {
    auto ladder = gallery::make_ladder();
    Window w = explore(ladder.graph, 3);
    REQUIRE_THROWS_AS(boundaries(w, Carrier::explicit_finite({VertexId("99:t")})),
                      NotExploredError);
}

TEST_CASE("classification of the gallery examples") {
    auto ladder = gallery::make_ladder();
    Window lw = explore(ladder.graph, 8);
    auto column = classify_cut(lw, Carrier::gallery_shape("right-half", 1), ladder.oracle.get());
    REQUIRE(column.vertex_kind.cert == Cert::YesCertified);
    REQUIRE(column.edge_kind.cert == Cert::YesCertified);
    REQUIRE(column.metric_kind.cert == Cert::YesCertified);

    auto x2 = gallery::make_x2();
    Window xw = explore(x2.graph, 8);
    auto tail = classify_cut(xw, Carrier::gallery_shape("side-tail", 1), x2.oracle.get());
    REQUIRE(tail.vertex_kind.cert == Cert::YesCertified);
    REQUIRE(tail.edge_kind.cert == Cert::NoCertified);
    REQUIRE(tail.metric_kind.cert == Cert::YesCertified);
    REQUIRE(tail.boundaries.theta.size() == 1);

    auto kn = gallery::make_kn_chain(gallery::KnVariant::V5d);
    Window kw = explore(kn.graph, 6);
    auto levels = classify_cut(kw, Carrier::gallery_shape("levels-leq", 0), kn.oracle.get());
    REQUIRE(levels.vertex_kind.cert == Cert::NoCertified);
    REQUIRE(levels.edge_kind.cert == Cert::NoCertified);
    REQUIRE(levels.metric_kind.cert == Cert::YesCertified);
    // θ is (the explored part of) one level: diameter 1.
    REQUIRE(kw.set_diameter(levels.boundaries.theta).value == 1);
}

TEST_CASE("window certification without an oracle: complete finite sets") {
    auto ladder = gallery::make_ladder();
    Window w = explore(ladder.graph, 8);
    // An interior explicit set, all Complete: everything certified.
    std::vector<VertexId> interior{VertexId("0:t"), VertexId("0:b"), VertexId("1:t")};
    auto cc = classify_cut(w, Carrier::explicit_finite(interior));
    REQUIRE(cc.vertex_kind.cert == Cert::YesCertified);
    REQUIRE(cc.edge_kind.cert == Cert::YesCertified);
    REQUIRE(cc.metric_kind.cert == Cert::YesCertified);
    REQUIRE_FALSE(cc.boundaries.delta_growing);

    // Complement of a complete finite set: certified through the e* side.
    auto cof = classify_cut(w, Carrier::complement_of_finite(interior));
    REQUIRE(cof.vertex_kind.cert == Cert::YesCertified);
    REQUIRE(cof.edge_kind.cert == Cert::YesCertified);

    // A set touching the frontier stays Unknown without an oracle.
    std::vector<VertexId> fr = w.frontier();
    auto cc2 = classify_cut(w, Carrier::explicit_finite({fr.front()}));
    REQUIRE(cc2.vertex_kind.cert == Cert::Unknown);
    REQUIRE(cc2.vertex_kind.depth == w.radius());
}

TEST_CASE("empty cuts are rejected") {
    auto ladder = gallery::make_ladder();
    Window w = explore(ladder.graph, 3);
    REQUIRE_THROWS_AS(classify_cut(w, Carrier::explicit_finite({})), InvalidConfigError);
}

TEST_CASE("star-ball scores: star-of-paths grows, ladder refutes, finite path stabilizes") {
    auto star = gallery::make_star_of_paths();
    Window sw = explore(star.graph, 20);
    auto rep = star_ball_score(sw, VertexId("x"), 1);
    // Brute check: the tail of P_20 after removing K(x,1) is 2..20,
    // ambient diameter 18.
    auto adj = brute::expand(*star.graph, 21, 25);
    REQUIRE(brute::bfs(adj, "20:2").at("20:20") == 18);
    REQUIRE(rep.score == 18);
    REQUIRE(rep.verdict == StarReport::Verdict::StarBallEvidence);

    auto ladder = gallery::make_ladder();
    for (int depth : {8, 16}) {
        Window lw = explore(ladder.graph, depth);
        auto lrep = star_ball_score(lw, VertexId("0:t"), 1);
        REQUIRE(lrep.score == 0);
        REQUIRE(lrep.closed_component_count == 0);
        REQUIRE(lrep.verdict == StarReport::Verdict::RefutedAtDepth);
    }

    // Finite path of length 10, ball around the middle: score 3, stable.
    auto path = testgraphs::finite_path(10, 5);
    for (int radius : {12, 20}) {
        Window pw = explore(path, radius, constant_budget(4));
        auto prep = star_ball_score(pw, VertexId("5"), 1);
        REQUIRE(prep.score == 3);
        REQUIRE(prep.verdict == StarReport::Verdict::RefutedAtDepth); // fully explored
    }
}

TEST_CASE("star-ball score is non-decreasing in window depth") {
    auto star = gallery::make_star_of_paths();
    int last = -1;
    for (int depth : {6, 10, 14, 18}) {
        Window w = explore(star.graph, depth);
        auto rep = star_ball_score(w, VertexId("x"), 1);
        REQUIRE(rep.score >= last);
        last = rep.score;
    }
}

TEST_CASE("infinite-diameter witnesses follow the dichotomy") {
    auto ladder = gallery::make_ladder();
    auto w1 = infinite_diameter_witness(ladder.graph, 8);
    REQUIRE(w1.kind == DiameterWitness::Kind::MetricRayPrefix);
    REQUIRE(w1.path.size() == 9);
    // Checkpoints strictly increase from the root.
    Window lw = explore(ladder.graph, 8);
    for (std::size_t i = 0; i < w1.path.size(); ++i) {
        auto d = lw.distance(lw.origin(), w1.path[i]);
        REQUIRE(d.certainty == Certainty::Exact);
        REQUIRE(d.value == static_cast<int>(i));
    }

    auto star = gallery::make_star_of_paths();
    auto w2 = infinite_diameter_witness(star.graph, 8);
    REQUIRE(w2.kind == DiameterWitness::Kind::StarBallWitness);
    REQUIRE(w2.star.has_value());

    auto w3 = infinite_diameter_witness(testgraphs::triangle(), 4);
    REQUIRE(w3.kind == DiameterWitness::Kind::BoundedCertified);
    REQUIRE(w3.bounded_diameter == 1);

    REQUIRE_THROWS_AS(infinite_diameter_witness(ladder.graph, 0), InvalidConfigError);
}

TEST_CASE("theta equals the e*-endpoints of delta (generated sets)") {
    CounterRng rng(11);
    for (const char* tag : {"ladder", "x2", "kn-chain:variant=5d", "free:r=1", "star-paths"}) {
        auto g = gallery::make(tag);
        Window w = explore(g.graph, 5);
        for (int i = 0; i < 40; ++i) {
            auto e = random_subset(w, rng, 8);
            auto b = boundaries(w, Carrier::explicit_finite(e));
            std::set<std::string> theta_from_delta, inner_from_delta;
            for (const auto& [inner, outer] : b.delta) {
                inner_from_delta.insert(inner.token);
                theta_from_delta.insert(outer.token);
            }
            REQUIRE(token_set(b.theta) == theta_from_delta);
            REQUIRE(token_set(b.inner_theta) == inner_from_delta);
            REQUIRE(b.theta.size() <= b.delta.size());
        }
    }
}

TEST_CASE("Lemma 2: boundary of an intersection, with kind preservation") {
    CounterRng rng(13);
    auto ladder = gallery::make_ladder();
    Window w = explore(ladder.graph, 6);
    int checked = 0;
    for (int i = 0; i < 80; ++i) {
        auto e1 = random_subset(w, rng, 10);
        auto e2 = random_subset(w, rng, 10);
        auto inter = intersect_carriers(Carrier::explicit_finite(e1), Carrier::explicit_finite(e2));
        REQUIRE(inter.has_value());
        auto bi = boundaries(w, *inter);
        auto b1 = boundaries(w, Carrier::explicit_finite(e1));
        auto b2 = boundaries(w, Carrier::explicit_finite(e2));
        auto t1 = token_set(b1.theta), t2 = token_set(b2.theta);
        for (const auto& v : bi.theta) REQUIRE((t1.count(v.token) || t2.count(v.token)));

        if (inter->set.empty()) continue;
        auto c1 = classify_cut(w, Carrier::explicit_finite(e1));
        auto c2 = classify_cut(w, Carrier::explicit_finite(e2));
        auto ci = classify_cut(w, *inter);
        for (Notion n : {Notion::VertexEnd, Notion::EdgeEnd, Notion::MetricEnd}) {
            if (c1.kind(n).cert == Cert::YesCertified && c2.kind(n).cert == Cert::YesCertified) {
                REQUIRE(ci.kind(n).cert == Cert::YesCertified);
                ++checked;
            }
        }
    }
    REQUIRE(checked > 0);
}

TEST_CASE("Theorem 3: e and e* both vertex-certified makes e edge-certified") {
    // Shape route: the ladder halves certify both sides.
    auto ladder = gallery::make_ladder();
    Window w = explore(ladder.graph, 6);
    auto right = classify_cut(w, Carrier::gallery_shape("right-half", 1), ladder.oracle.get());
    auto left = classify_cut(w, Carrier::gallery_shape("left-half", 0), ladder.oracle.get());
    REQUIRE(right.vertex_kind.cert == Cert::YesCertified);
    REQUIRE(left.vertex_kind.cert == Cert::YesCertified);
    REQUIRE(right.edge_kind.cert == Cert::YesCertified);

    // Counterpoint: X2 tails have a vertex-certified cut whose complement is
    // not one, and indeed no edge certificate exists.
    auto x2 = gallery::make_x2();
    Window xw = explore(x2.graph, 8);
    auto tail = classify_cut(xw, Carrier::gallery_shape("side-tail", 1), x2.oracle.get());
    auto rest = classify_cut(xw, Carrier::gallery_shape("side-rest", 1), x2.oracle.get());
    REQUIRE(tail.vertex_kind.cert == Cert::YesCertified);
    REQUIRE(rest.vertex_kind.cert == Cert::NoCertified);
    REQUIRE(tail.edge_kind.cert == Cert::NoCertified);
}

TEST_CASE("certification hierarchy holds on generated carriers") {
    CounterRng rng(17);
    for (const char* tag : {"ladder", "x1", "x2", "kn-chain:variant=5d", "free:r=1"}) {
        auto g = gallery::make(tag);
        Window w = explore(g.graph, 5);
        std::vector<Carrier> carriers;
        for (int i = 0; i < 25; ++i) {
            carriers.push_back(Carrier::explicit_finite(random_subset(w, rng, 6)));
            carriers.push_back(Carrier::complement_of_finite(random_subset(w, rng, 6)));
        }
        auto shapes = g.oracle->candidate_cuts(Notion::VertexEnd, 5);
        carriers.insert(carriers.end(), shapes.begin(), shapes.end());
        for (const auto& c : carriers) {
            auto cc = classify_cut(w, c, g.oracle.get());
            if (cc.edge_kind.cert == Cert::YesCertified)
                REQUIRE(cc.vertex_kind.cert == Cert::YesCertified);
            if (cc.vertex_kind.cert == Cert::YesCertified)
                REQUIRE(cc.metric_kind.cert == Cert::YesCertified);
            if (cc.metric_kind.cert == Cert::NoCertified)
                REQUIRE(cc.vertex_kind.cert == Cert::NoCertified);
        }
    }
}

TEST_CASE("ball complement components are always metric-certified") {
    for (const char* tag : {"ladder", "kn-chain:variant=5d", "treeplus2:b=inf", "free:r=1"}) {
        auto g = gallery::make(tag);
        Window w = explore(g.graph, 5);
        for (int r : {0, 1, 2}) {
            auto ball = w.ball(w.origin(), r);
            auto lab = w.components_of_complement(ball);
            for (const auto& [fp, open] : lab.open) {
                auto cc = classify_cut(w, Carrier::ball_component(w.origin(), r, fp));
                REQUIRE(cc.metric_kind.cert == Cert::YesCertified);
            }
        }
    }
}

TEST_CASE("certified classifications persist at greater depth") {
    auto ladder = gallery::make_ladder();
    auto x2 = gallery::make_x2();
    struct Case {
        gallery::GalleryGraph* g;
        Carrier c;
    };
    std::vector<Case> cases{{&ladder, Carrier::gallery_shape("right-half", 1)},
                            {&x2, Carrier::gallery_shape("side-tail", 2)}};
    for (auto& [g, c] : cases) {
        Window small = explore(g->graph, 5);
        Window big = explore(g->graph, 9);
        auto a = classify_cut(small, c, g->oracle.get());
        auto b = classify_cut(big, c, g->oracle.get());
        for (Notion n : {Notion::VertexEnd, Notion::EdgeEnd, Notion::MetricEnd}) {
            if (a.kind(n).cert != Cert::Unknown) REQUIRE(b.kind(n).cert == a.kind(n).cert);
        }
    }
}
