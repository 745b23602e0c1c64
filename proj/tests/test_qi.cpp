// Quasi-isometry verification, ray mapping, fattening and quasi-openness.
#include <catch_amalgamated.hpp>

#include <set>

#include "endscope/qi.hpp"
#include "endscope/gallery/registry.hpp"
#include "support/brute.hpp"

using namespace endscope;

namespace {

std::set<std::string> token_set(const std::vector<VertexId>& vs) {
    std::set<std::string> out;
    for (const auto& v : vs) out.insert(v.token);
    return out;
}

} // namespace

TEST_CASE("presets verify clean over 500 sampled checks") {
    for (const char* name : {"tree2-identity", "ladder-line"}) {
        auto preset = qi_preset(name);
        Window wx = explore(preset.spec.domain, name == std::string("tree2-identity") ? 5 : 8,
                            constant_budget(4));
        Window wy = explore(preset.spec.codomain, name == std::string("tree2-identity") ? 3 : 8,
                            constant_budget(4));
        auto rep = qi_verify(preset.spec, wx, wy, 500, 42);
        INFO(name);
        REQUIRE(rep.no_violation_found());
        REQUIRE(rep.checked_pairs >= 500);
    }
}

TEST_CASE("the constant-map mutant violates quasi-injectivity with a witness") {
    auto preset = qi_preset("ladder-line");
    auto spec = preset.spec;
    auto root_y = spec.codomain->root;
    spec.phi = [root_y](const VertexId&) { return root_y; };
    Window wx = explore(spec.domain, 8);
    Window wy = explore(spec.codomain, 8);
    auto rep = qi_verify(spec, wx, wy, 200, 7);
    REQUIRE_FALSE(rep.no_violation_found());
    bool q3 = false;
    for (const auto& v : rep.violations)
        if (v.axiom == "Q3") {
            q3 = true;
            REQUIRE(v.measured > v.bound);
        }
    REQUIRE(q3);
}

TEST_CASE("Lemma 11 sample check passes on both presets") {
    for (const char* name : {"tree2-identity", "ladder-line"}) {
        auto preset = qi_preset(name);
        Window wx = explore(preset.spec.domain, 5, constant_budget(4));
        auto rep = lemma11_check(preset.spec, wx, 200, 99);
        REQUIRE(rep.checked_sets > 100);
        REQUIRE(rep.violations == 0);
    }
}

TEST_CASE("Lemma 11 refuting direction: growing sets map to growing images") {
    auto preset = qi_preset("ladder-line");
    int last = -1;
    for (int k : {1, 2, 4, 6}) {
        Window wx = explore(preset.spec.domain, k);
        auto ball = wx.ball(wx.origin(), k);
        int image_diam = 0;
        for (const auto& u : ball)
            for (const auto& v : ball) {
                auto d = preset.spec.codomain->exact_metric(preset.spec.phi(u),
                                                            preset.spec.phi(v));
                image_diam = std::max(image_diam, *d);
            }
        REQUIRE(image_diam > last);
        last = image_diam;
    }
}

TEST_CASE("qi_map_ray projects the ladder rails onto the line") {
    auto preset = qi_preset("ladder-line");
    Ray rb = preset.x.ray("right-bottom");
    Ray image = qi_map_ray(preset.spec, rb, 6);
    REQUIRE(image.verified_prefix >= 7);
    for (int i = 0; i < 7; ++i) REQUIRE(image.at(i) == VertexId(std::to_string(i)));
    REQUIRE(image.metricity.kind == Metricity::Kind::MetricRayEvidence);
}

TEST_CASE("qi_map_ray under the identity returns the same prefix") {
    auto preset = qi_preset("tree2-identity");
    Ray cone = preset.x.ray("cone-1");
    Ray image = qi_map_ray(preset.spec, cone, 4);
    for (int i = 0; i < std::min(image.verified_prefix, 8); ++i)
        REQUIRE(image.at(i) == cone.generator(i));
}

TEST_CASE("qi_map_ray across free-group generating systems keeps the boundary word") {
    auto x = gallery::make_free_group(1);
    auto y = gallery::make_free_group(3);
    QuasiIsometrySpec spec;
    spec.name = "free-r1-r3";
    spec.domain = x.graph;
    spec.codomain = y.graph;
    spec.phi = [](const VertexId& v) { return v; };
    spec.psi = [](const VertexId& v) { return v; };
    spec.a = 1; // d_Y <= d_X since every X-edge is a Y-edge
    spec.b = 3; // d_X = |w| <= 3 * ceil(|w|/3)
    spec.c = 0;
    spec.d = 0;
    Ray g1 = x.ray("gen-1");
    Ray image = qi_map_ray(spec, g1, 4);
    REQUIRE(image.metricity.kind == Metricity::Kind::MetricRayEvidence);
    // The image tail stays in every g1-prefix cone: same boundary word.
    Window wy = explore(y.graph, 3);
    for (int k = 1; k <= 3; ++k) {
        Carrier cone = Carrier::gallery_shape("cone", 0,
                                              word_token(Word(static_cast<std::size_t>(k), 1)));
        auto t = tail_in(image, cone, wy, y.oracle.get());
        REQUIRE(t.value == TailResult::Value::Yes);
    }
}

TEST_CASE("mapping a non-metric ray is rejected") {
    auto preset = qi_preset("ladder-line");
    auto x2 = gallery::make_x2();
    QuasiIsometrySpec broken = preset.spec;
    broken.domain = x2.graph;
    Ray l1 = x2.ray("L1");
    REQUIRE_THROWS_AS(qi_map_ray(broken, l1, 6), NotMetricRayError);
}

TEST_CASE("fattening: A+0, ladder example, line example") {
    auto ladder = gallery::make_ladder();
    Window w = explore(ladder.graph, 6);
    std::vector<VertexId> a{VertexId("1:t"), VertexId("2:t"), VertexId("3:t")};
    auto same = fatten(w, a, {"right-end"}, 0);
    REQUIRE(token_set(same.vertices) == token_set(a));
    REQUIRE(same.end_tags == std::vector<std::string>{"right-end"});
    REQUIRE(same.certainty == Certainty::Exact);

    auto fat = fatten(w, a, {}, 1);
    REQUIRE(token_set(fat.vertices) ==
            std::set<std::string>{"0:t", "1:t", "2:t", "3:t", "4:t", "1:b", "2:b", "3:b"});

    auto line = gallery::make_line();
    Window lw = explore(line.graph, 6);
    auto lf = fatten(lw, {VertexId("0")}, {}, 3);
    REQUIRE(token_set(lf.vertices) == std::set<std::string>{"-3", "-2", "-1", "0", "1", "2", "3"});
    REQUIRE(lf.certainty == Certainty::Exact);

    // Fattening against the frontier is only a lower bound.
    auto edge = fatten(lw, {VertexId("5")}, {}, 3);
    REQUIRE(edge.certainty == Certainty::LowerBound);
}

TEST_CASE("quasi-open evidence on the preset cases") {
    auto preset = qi_preset("ladder-line");
    Window wx = explore(preset.spec.domain, 6);
    auto ball = wx.ball(wx.origin(), 1);
    auto lab = wx.components_of_complement(ball);
    // Pick the right-side component (it contains (3,t)).
    Carrier e = Carrier::ball_component(wx.origin(), 1, lab.labels.at(VertexId("3:t")));
    auto ev = quasi_open_check(preset.spec, e, 6, preset.x.oracle.get());
    REQUIRE(ev.verdict == QuasiOpenEvidence::Verdict::OpenEvidence);
    REQUIRE(ev.theta_diameter.value == 0);
    REQUIRE(ev.containment_violations == 0);

    auto tree = qi_preset("tree2-identity");
    Carrier cone = Carrier::gallery_shape("cone", 0, "o.1.1");
    auto tev = quasi_open_check(tree.spec, cone, 6, tree.x.oracle.get(), constant_budget(4));
    REQUIRE(tev.verdict == QuasiOpenEvidence::Verdict::OpenEvidence);
    REQUIRE(tev.theta_diameter.value <= 2);
}

TEST_CASE("identity fattening obeys the triangle bound on boundary diameter") {
    auto ladder = gallery::make_ladder();
    QuasiIsometrySpec id;
    id.domain = ladder.graph;
    id.codomain = ladder.graph;
    id.phi = [](const VertexId& v) { return v; };
    id.psi = [](const VertexId& v) { return v; };
    id.a = id.b = 1;
    id.c = id.d = 0;
    Window w = explore(ladder.graph, 6);
    auto ball = w.ball(w.origin(), 1);
    auto lab = w.components_of_complement(ball);
    Carrier e = Carrier::ball_component(w.origin(), 1, lab.labels.at(VertexId("3:t")));
    auto base = classify_cut(w, e);
    auto base_diam = w.set_diameter(base.boundaries.theta);
    auto ev = quasi_open_check(id, e, 6);
    REQUIRE(ev.theta_diameter.value <= base_diam.value + 2);
}

TEST_CASE("Corollary 1 on gallery cuts: preimages of metric cuts are metric cuts") {
    auto preset = qi_preset("ladder-line");
    Window wy = explore(preset.spec.codomain, 6);
    auto fy = classify_cut(wy, Carrier::gallery_shape("right-geq", 2), preset.y.oracle.get());
    REQUIRE(fy.metric_kind.cert == Cert::YesCertified);
    // phi^-1(right-geq k) is the ladder right-half(k).
    Window wx = explore(preset.spec.domain, 6);
    auto fx = classify_cut(wx, Carrier::gallery_shape("right-half", 2), preset.x.oracle.get());
    REQUIRE(fx.metric_kind.cert == Cert::YesCertified);
}

TEST_CASE("end correspondence: separation agrees across the quasi-isometry") {
    for (const char* name : {"tree2-identity", "ladder-line"}) {
        auto preset = qi_preset(name);
        const int depth = name == std::string("tree2-identity") ? 4 : 6;
        for (const auto& [na, nb, expected] : preset.ray_pairs) {
            Ray xa = preset.x.ray(na);
            Ray xb = preset.x.ray(nb);
            auto vx = separation_verdict(xa, xb, Notion::MetricEnd, depth, preset.x.graph,
                                         preset.x.oracle.get(), constant_budget(6));
            Ray ya = qi_map_ray(preset.spec, preset.x.ray(na), depth);
            Ray yb = qi_map_ray(preset.spec, preset.x.ray(nb), depth);
            auto vy = separation_verdict(ya, yb, Notion::MetricEnd, depth, preset.y.graph,
                                         preset.y.oracle.get(), constant_budget(6));
            INFO(name << " " << na << "/" << nb);
            REQUIRE(vx.outcome == expected);
            REQUIRE(vy.outcome == expected);
        }
    }
}

TEST_CASE("unknown presets are rejected") {
    REQUIRE_THROWS_AS(qi_preset("moebius-flip"), InvalidConfigError);
}
