// gallery/line.hpp — the two-sided integer line, quasi-isometry partner of
// the ladder. Tokens are plain integers ("0", "-3", "17").
#pragma once

#include <cstdlib>

#include "endscope/gallery/common.hpp"

namespace endscope::gallery {

namespace line_detail {

inline VertexId vid(long long n) { return VertexId(std::to_string(n)); }

class Oracle final : public GalleryOracle {
  public:
    std::optional<bool> shape_contains(const Carrier& c, const VertexId& v) const override {
        auto n = parse_int(v.token);
        if (!n) return std::nullopt;
        if (c.shape == "right-geq") return *n >= c.param;
        if (c.shape == "left-leq") return *n <= c.param;
        return std::nullopt;
    }

    std::optional<CutTruth> certify(const Carrier& c) const override {
        if (c.kind != Carrier::Kind::Shape) return std::nullopt;
        if (c.shape == "right-geq" || c.shape == "left-leq")
            return CutTruth{Cert::YesCertified, Cert::YesCertified, Cert::YesCertified};
        return std::nullopt;
    }

    bool ball_components_stable(const VertexId& center, int) const override {
        return parse_int(center.token).has_value();
    }

    std::optional<bool> ray_eventually_in(const Ray& ray, const Carrier& c) const override {
        int dir = direction(ray);
        if (dir == 0) return std::nullopt;
        if (c.kind == Carrier::Kind::Shape) {
            if (c.shape == "right-geq") return dir > 0;
            if (c.shape == "left-leq") return dir < 0;
            return std::nullopt;
        }
        if (c.kind == Carrier::Kind::BallComplementComponent) {
            auto fp = parse_int(c.fingerprint);
            auto ct = parse_int(c.center.token);
            if (!fp || !ct) return std::nullopt;
            return (dir > 0) == (*fp > *ct);
        }
        return std::nullopt;
    }

    std::optional<bool> equivalent(const Ray& a, const Ray& b, Notion) const override {
        int da = direction(a), db = direction(b);
        if (da == 0 || db == 0) return std::nullopt;
        if (da == db) return true;
        return std::nullopt;
    }

    std::vector<Carrier> candidate_cuts(Notion, int depth) const override {
        return {Carrier::gallery_shape("right-geq", 1),
                Carrier::gallery_shape("left-leq", -1),
                Carrier::gallery_shape("right-geq", std::max(1, depth / 2))};
    }

    std::optional<Carrier> complement_shape(const Carrier& c) const override {
        if (c.kind != Carrier::Kind::Shape) return std::nullopt;
        if (c.shape == "right-geq") return Carrier::gallery_shape("left-leq", c.param - 1);
        if (c.shape == "left-leq") return Carrier::gallery_shape("right-geq", c.param + 1);
        return std::nullopt;
    }

  private:
    static int direction(const Ray& ray) {
        auto a = parse_int(ray.generator(0).token);
        auto b = parse_int(ray.generator(1).token);
        if (!a || !b) return 0;
        return *b > *a ? 1 : (*b < *a ? -1 : 0);
    }
};

} // namespace line_detail

inline GalleryGraph make_line() {
    using line_detail::vid;

    auto graph = std::make_shared<LazyGraph>();
    graph->root = vid(0);
    graph->neighbor_prefix = [](const VertexId& v, std::size_t k) {
        auto n = parse_int(v.token);
        if (!n) throw InvalidConfigError("line: bad token " + v.token);
        std::vector<VertexId> ns{vid(*n - 1), vid(*n + 1)};
        if (ns.size() > k) ns.resize(k);
        return ns;
    };
    graph->is_adjacent = [](const VertexId& a, const VertexId& b) {
        auto pa = parse_int(a.token), pb = parse_int(b.token);
        return pa && pb && std::llabs(*pa - *pb) == 1;
    };
    graph->degree_hint = [](const VertexId&) { return DegreeHint::finite(2); };
    graph->exact_metric = [](const VertexId& a, const VertexId& b) -> std::optional<int> {
        auto pa = parse_int(a.token), pb = parse_int(b.token);
        if (!pa || !pb) return std::nullopt;
        return static_cast<int>(std::llabs(*pa - *pb));
    };

    GalleryGraph g;
    g.tag = "line";
    g.graph = graph;
    g.oracle = std::make_shared<line_detail::Oracle>();
    g.named_rays["right"] = make_ray("right", [](int i) { return vid(i); });
    g.named_rays["left"] = make_ray("left", [](int i) { return vid(-i); });
    g.truth.end_counts = {{Notion::VertexEnd, 2}, {Notion::EdgeEnd, 2}, {Notion::MetricEnd, 2}};
    g.truth.stabilization_depth = 4;
    using O = Verdict::Outcome;
    g.truth.expected_verdicts = {
        {"right", "left", Notion::VertexEnd, O::Separated, false},
        {"right", "left", Notion::EdgeEnd, O::Separated, false},
        {"right", "left", Notion::MetricEnd, O::Separated, false},
    };
    return g;
}

} // namespace endscope::gallery
