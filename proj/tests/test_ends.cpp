// Tail containment, separation verdicts, approximants, classification and
// the notion hierarchy.
#include <catch_amalgamated.hpp>

#include <set>

#include "endscope/ends.hpp"
#include "endscope/gallery/registry.hpp"
#include "support/finite_graphs.hpp"

using namespace endscope;

TEST_CASE("tail containment on the ladder") {
    auto ladder = gallery::make_ladder();
    Window w = explore(ladder.graph, 8);
    Ray rt = ladder.ray("right-top");

    auto yes = tail_in(rt, Carrier::gallery_shape("right-half", 1), w, ladder.oracle.get());
    REQUIRE(yes.value == TailResult::Value::Yes);
    REQUIRE(yes.from_index == 1); // only (0,t) lies outside

    auto no = tail_in(rt, Carrier::gallery_shape("left-half", -1), w, ladder.oracle.get());
    REQUIRE(no.value == TailResult::Value::No);

    // The whole vertex set as a cofinite carrier: trivially Yes from 0.
    auto whole = tail_in(rt, Carrier::complement_of_finite({}), w, ladder.oracle.get());
    REQUIRE(whole.value == TailResult::Value::Yes);
    REQUIRE(whole.from_index == 0);

    // Finite explicit carriers can never hold a tail of distinct vertices.
    auto fin = tail_in(rt, Carrier::explicit_finite({VertexId("0:t"), VertexId("1:t")}), w);
    REQUIRE(fin.value == TailResult::Value::No);
}

TEST_CASE("Lemma 2 tail identity: intersection iff both") {
    auto ladder = gallery::make_ladder();
    Window w = explore(ladder.graph, 8);
    Ray rt = ladder.ray("right-top");
    std::vector<VertexId> s1{VertexId("0:t")};
    std::vector<VertexId> s2{VertexId("1:b"), VertexId("-1:t")};
    Carrier e1 = Carrier::complement_of_finite(s1);
    Carrier e2 = Carrier::complement_of_finite(s2);
    auto inter = intersect_carriers(e1, e2);
    REQUIRE(inter.has_value());
    auto t1 = tail_in(rt, e1, w);
    auto t2 = tail_in(rt, e2, w);
    auto ti = tail_in(rt, *inter, w);
    REQUIRE(t1.value == TailResult::Value::Yes);
    REQUIRE(t2.value == TailResult::Value::Yes);
    REQUIRE(ti.value == TailResult::Value::Yes);
    REQUIRE(ti.from_index == std::max(t1.from_index, t2.from_index));
}

TEST_CASE("separation verdicts reproduce the worked examples") {
    auto ladder = gallery::make_ladder();
    Ray rt = ladder.ray("right-top");
    Ray lt = ladder.ray("left-top");
    auto v = separation_verdict(rt, lt, Notion::VertexEnd, 8, ladder.graph, ladder.oracle.get());
    REQUIRE(v.outcome == Verdict::Outcome::Separated);
    REQUIRE(v.certificate.has_value());
    REQUIRE(v.certificate->vertex_kind.cert == Cert::YesCertified);

    auto x2 = gallery::make_x2();
    Ray l1 = x2.ray("L1");
    Ray l2 = x2.ray("L2");
    auto vx = separation_verdict(l1, l2, Notion::VertexEnd, 10, x2.graph, x2.oracle.get());
    REQUIRE(vx.outcome == Verdict::Outcome::Separated);
    auto ex = separation_verdict(l1, l2, Notion::EdgeEnd, 10, x2.graph, x2.oracle.get());
    REQUIRE(ex.outcome == Verdict::Outcome::EquivalentCertified);

    auto kn = gallery::make_kn_chain(gallery::KnVariant::V5d);
    Ray right = kn.ray("right");
    Ray left = kn.ray("left");
    auto mv = separation_verdict(right, left, Notion::MetricEnd, 6, kn.graph, kn.oracle.get());
    REQUIRE(mv.outcome == Verdict::Outcome::Separated);
    REQUIRE(mv.certificate->metric_kind.cert == Cert::YesCertified);

    auto x1 = gallery::make_x1();
    Ray a = x1.ray("L1");
    Ray b = x1.ray("L2");
    auto ev = separation_verdict(a, b, Notion::EdgeEnd, 10, x1.graph, x1.oracle.get());
    REQUIRE(ev.outcome == Verdict::Outcome::Separated);
    REQUIRE(ev.certificate->edge_kind.cert == Cert::YesCertified);
}

TEST_CASE("metric separation demands metric rays") {
    auto x2 = gallery::make_x2();
    Ray l1 = x2.ray("L1");
    Ray l2 = x2.ray("L2");
    REQUIRE_THROWS_AS(
        separation_verdict(l1, l2, Notion::MetricEnd, 8, x2.graph, x2.oracle.get()),
        NotMetricRayError);
}

TEST_CASE("notion hierarchy on metric-ray pairs") {
    // Edge separation implies vertex separation implies metric separation.
    struct PairCase {
        const char* tag;
        const char* a;
        const char* b;
    };
    for (const auto& pc : {PairCase{"ladder", "right-top", "left-top"},
                           PairCase{"free:r=1", "gen-1", "gen-2"},
                           PairCase{"treeplus2:b=3", "cone-1", "cone-2"}}) {
        auto g = gallery::make(pc.tag);
        auto eval = [&](Notion n) {
            Ray a = g.ray(pc.a);
            Ray b = g.ray(pc.b);
            return separation_verdict(a, b, n, 6, g.graph, g.oracle.get()).outcome;
        };
        auto edge = eval(Notion::EdgeEnd);
        auto vertex = eval(Notion::VertexEnd);
        auto metric = eval(Notion::MetricEnd);
        if (edge == Verdict::Outcome::Separated) REQUIRE(vertex == Verdict::Outcome::Separated);
        if (vertex == Verdict::Outcome::Separated) REQUIRE(metric == Verdict::Outcome::Separated);
    }
}

TEST_CASE("verdict monotonicity across depth for the full registry") {
    for (const auto& tag : gallery::registry_tags()) {
        auto g = gallery::make(tag);
        for (const auto& exp : g.truth.expected_verdicts) {
            const int d = g.truth.stabilization_depth;
            auto run = [&](int depth) {
                Ray a = g.ray(exp.ray_a);
                Ray b = g.ray(exp.ray_b);
                const GalleryOracle* oracle = exp.oracle_blind ? nullptr : g.oracle.get();
                return separation_verdict(a, b, exp.notion, depth, g.graph, oracle,
                                          g.probe_budget);
            };
            auto shallow = run(d);
            auto deep = run(d + 8);
            REQUIRE(shallow.outcome == exp.outcome);
            if (shallow.outcome == Verdict::Outcome::Separated ||
                shallow.outcome == Verdict::Outcome::EquivalentCertified) {
                REQUIRE(deep.outcome == shallow.outcome);
            }
            if (shallow.outcome == Verdict::Outcome::NotSeparatedAtDepth) {
                REQUIRE(deep.outcome != Verdict::Outcome::EquivalentCertified);
                REQUIRE(deep.depth >= shallow.depth);
            }
        }
    }
}

TEST_CASE("coarsening an edge certificate yields a vertex certificate") {
    auto ladder = gallery::make_ladder();
    Ray rt = ladder.ray("right-top");
    Ray lt = ladder.ray("left-top");
    auto ev = separation_verdict(rt, lt, Notion::EdgeEnd, 8, ladder.graph, ladder.oracle.get());
    REQUIRE(ev.outcome == Verdict::Outcome::Separated);
    auto vv = coarsen(ev);
    REQUIRE(vv.notion == Notion::VertexEnd);
    REQUIRE(vv.outcome == Verdict::Outcome::Separated);
    REQUIRE(vv.certificate->vertex_kind.cert == Cert::YesCertified);

    // Non-separated input passes through with a note.
    auto x2 = gallery::make_x2();
    Ray l1 = x2.ray("L1");
    Ray l2 = x2.ray("L2");
    auto eq = separation_verdict(l1, l2, Notion::EdgeEnd, 8, x2.graph, x2.oracle.get());
    auto passed = coarsen(eq);
    REQUIRE(passed.outcome == Verdict::Outcome::EquivalentCertified);
    REQUIRE(passed.notion == Notion::EdgeEnd);
    REQUIRE_FALSE(passed.note.empty());
}

TEST_CASE("end approximants: ladder chain and free-group cones") {
    auto ladder = gallery::make_ladder();
    Ray rt = ladder.ray("right-top");
    auto app = end_approximant(rt, ladder.graph, 6);
    REQUIRE(app.chain.size() == 6);
    for (std::size_t i = 1; i < app.chain.size(); ++i)
        REQUIRE(app.chain[i].radius > app.chain[i - 1].radius);
    // Witness path: nonempty, adjacent steps, distinct vertices, escapes.
    REQUIRE_FALSE(app.witness_path.empty());
    std::set<std::string> seen;
    for (std::size_t i = 0; i < app.witness_path.size(); ++i) {
        REQUIRE(seen.insert(app.witness_path[i].token).second);
        if (i > 0)
            REQUIRE(ladder.graph->is_adjacent(app.witness_path[i - 1], app.witness_path[i]));
    }
    auto d_first = ladder.graph->exact_metric(ladder.graph->root, app.witness_path.front());
    auto d_last = ladder.graph->exact_metric(ladder.graph->root, app.witness_path.back());
    REQUIRE(*d_last > *d_first);

    // Free group r=1: the chain components are the prefix cones of g1^k.
    auto fg = gallery::make_free_group(1);
    Ray g1 = fg.ray("gen-1");
    auto fapp = end_approximant(g1, fg.graph, 4);
    REQUIRE(fapp.chain.size() == 4);
    for (const auto& link : fapp.chain) {
        // The fingerprint lies in the cone of g1^(radius+1).
        Word expected(static_cast<std::size_t>(link.radius + 1), 1);
        REQUIRE(is_prefix(expected, parse_word_token(link.fingerprint)));
    }
}

TEST_CASE("approximant redirects when the input does not escape") {
    // K_N: every ray is trapped in the radius-1 ball.
    auto kn = gallery::make_kn_chain(gallery::KnVariant::V5a);
    Ray idx = kn.ray("idx");
    REQUIRE_THROWS_AS(end_approximant(idx, kn.graph, 4), ClassificationRedirect);

    // A "ray" cycling a finite graph is not a ray at all.
    auto cyc = testgraphs::cycle(5);
    Ray bad;
    bad.generator = [](int i) { return VertexId(std::to_string(i % 5)); };
    REQUIRE_THROWS_AS(end_approximant(bad, cyc, 4), InvalidRayError);
}

TEST_CASE("classify_sequence agrees with the approximant on a ray's own vertices") {
    auto ladder = gallery::make_ladder();
    Ray rt = ladder.ray("right-top");
    auto app = end_approximant(rt, ladder.graph, 6);

    auto cls = classify_sequence(
        [](int i) { return SequenceElement::of(VertexId(std::to_string(i) + ":t")); },
        ladder.graph, 6);
    REQUIRE(cls.kind == SequenceClassification::Case::ProperMetricEnd);
    REQUIRE(cls.approximant.has_value());
    REQUIRE(cls.approximant->chain.size() == app.chain.size());
    for (std::size_t i = 0; i < app.chain.size(); ++i)
        REQUIRE(cls.approximant->chain[i].fingerprint == app.chain[i].fingerprint);
}

TEST_CASE("the four Theorem-style cases classify as expected") {
    auto ladder = gallery::make_ladder();
    auto c1 = classify_sequence(ladder.sequence("const-root"), ladder.graph, 16);
    REQUIRE(c1.kind == SequenceClassification::Case::VertexLimit);
    REQUIRE(c1.limit_vertex == VertexId("0:t"));

    auto kn = gallery::make_kn_chain(gallery::KnVariant::V5a);
    auto c2 = classify_sequence(kn.sequence("distinct"), kn.graph, 16);
    REQUIRE(c2.kind == SequenceClassification::Case::LocalEnd);

    auto star = gallery::make_star_of_paths();
    auto c4 = classify_sequence(star.sequence("endpoints"), star.graph, 16);
    REQUIRE(c4.kind == SequenceClassification::Case::StarEnd);

    auto c3 = classify_sequence(ladder.sequence("rail"), ladder.graph, 16);
    REQUIRE(c3.kind == SequenceClassification::Case::ProperMetricEnd);
}

TEST_CASE("conflicting sequences raise a diagnostic error") {
    auto ladder = gallery::make_ladder();
    REQUIRE_THROWS_AS(classify_sequence(ladder.sequence("alternate"), ladder.graph, 12),
                      ConflictingEvidenceError);
}

TEST_CASE("mixed sequences classify their vertex elements") {
    auto ladder = gallery::make_ladder();
    auto mixed = [](int i) {
        if (i % 5 == 4) return SequenceElement::end("lambda");
        return SequenceElement::of(VertexId(std::to_string(i - i / 5) + ":t"));
    };
    auto cls = classify_sequence(mixed, ladder.graph, 8);
    REQUIRE(cls.kind == SequenceClassification::Case::ProperMetricEnd);
}

TEST_CASE("count_ends_at_depth matches the registry ground truths") {
    struct Expect {
        const char* tag;
        int vertex, edge;
        int metric; // -2 encodes InfiniteCertified
    };
    for (const auto& e :
         {Expect{"ladder", 2, 2, 2}, Expect{"x1", 2, 2, 0}, Expect{"x2", 2, 1, 0},
          Expect{"kn-chain:variant=5d", 1, 1, 2}, Expect{"star-paths", 0, 0, 0}}) {
        auto g = gallery::make(e.tag);
        auto vc = gallery::count_ends(g, Notion::VertexEnd, 8);
        auto ec = gallery::count_ends(g, Notion::EdgeEnd, 8);
        auto mc = gallery::count_ends(g, Notion::MetricEnd, 8);
        REQUIRE(vc.lower_bound == e.vertex);
        REQUIRE(vc.status == EndCount::Status::StabilizedCertified);
        REQUIRE(ec.lower_bound == e.edge);
        REQUIRE(ec.status == EndCount::Status::StabilizedCertified);
        REQUIRE(mc.lower_bound == e.metric);
        REQUIRE(mc.status == EndCount::Status::StabilizedCertified);
    }
    auto tree = gallery::make("treeplus2:b=inf");
    auto tm = gallery::count_ends(tree, Notion::MetricEnd, 6);
    REQUIRE(tm.status == EndCount::Status::InfiniteCertified);
    REQUIRE(tm.lower_bound >= 2);
}
