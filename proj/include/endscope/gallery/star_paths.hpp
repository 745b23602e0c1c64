// gallery/star_paths.hpp — disjoint paths P_n (diam P_n = n) joined at a
// common initial vertex x of infinite degree.
//
// Tokens: "x" for the hub; "<n>:<i>" (1 <= i <= n) for the i-th vertex
// along P_n after the hub. No rays exist: any path from x enters one P_n
// and terminates, so every end count is zero — but every ball K(x,r) is a
// star ball.
#pragma once

#include <cstdlib>

#include "endscope/gallery/common.hpp"

namespace endscope::gallery {

namespace star_detail {

struct Pos {
    long long path = 0; // 0 encodes the hub
    long long index = 0;
};

inline std::optional<Pos> parse(const std::string& token) {
    if (token == "x") return Pos{0, 0};
    auto colon = token.find(':');
    if (colon == std::string::npos) return std::nullopt;
    auto n = parse_int(token.substr(0, colon));
    auto i = parse_int(token.substr(colon + 1));
    if (!n || !i || *n < 1 || *i < 1 || *i > *n) return std::nullopt;
    return Pos{*n, *i};
}

inline VertexId vid(long long n, long long i) {
    return VertexId(std::to_string(n) + ":" + std::to_string(i));
}

class Oracle final : public GalleryOracle {
  public:
    bool rays_exist() const override { return false; }
    bool metric_rays_exist() const override { return false; }
    bool ball_components_stable(const VertexId& center, int) const override {
        return center.token == "x";
    }
};

} // namespace star_detail

inline GalleryGraph make_star_of_paths() {
    using star_detail::parse;
    using star_detail::vid;

    auto graph = std::make_shared<LazyGraph>();
    graph->root = VertexId("x");
    graph->neighbor_prefix = [](const VertexId& v, std::size_t k) {
        auto p = parse(v.token);
        if (!p) throw InvalidConfigError("star-paths: bad token " + v.token);
        std::vector<VertexId> ns;
        if (p->path == 0) {
            for (std::size_t n = 1; n <= k; ++n) ns.push_back(vid(static_cast<long long>(n), 1));
            return ns;
        }
        ns.push_back(p->index == 1 ? VertexId("x") : vid(p->path, p->index - 1));
        if (p->index < p->path) ns.push_back(vid(p->path, p->index + 1));
        if (ns.size() > k) ns.resize(k);
        return ns;
    };
    graph->is_adjacent = [](const VertexId& a, const VertexId& b) {
        auto pa = parse(a.token), pb = parse(b.token);
        if (!pa || !pb) return false;
        if (pa->path == 0 || pb->path == 0) {
            const auto& q = pa->path == 0 ? pb : pa;
            if (pa->path == 0 && pb->path == 0) return false;
            return q->path != 0 && q->index == 1;
        }
        return pa->path == pb->path && std::llabs(pa->index - pb->index) == 1;
    };
    graph->degree_hint = [](const VertexId& v) {
        auto p = parse(v.token);
        if (!p || p->path == 0) return DegreeHint::infinite();
        return DegreeHint::finite(p->index == p->path ? 1 : 2);
    };
    graph->exact_metric = [](const VertexId& a, const VertexId& b) -> std::optional<int> {
        auto pa = parse(a.token), pb = parse(b.token);
        if (!pa || !pb) return std::nullopt;
        if (pa->path == 0) return static_cast<int>(pb->index);
        if (pb->path == 0) return static_cast<int>(pa->index);
        if (pa->path == pb->path) return static_cast<int>(std::llabs(pa->index - pb->index));
        return static_cast<int>(pa->index + pb->index); // through the hub
    };

    GalleryGraph g;
    g.tag = "star-paths";
    g.graph = graph;
    g.oracle = std::make_shared<star_detail::Oracle>();

    g.named_sequences["const-root"] = [](int) { return SequenceElement::of(VertexId("x")); };
    g.named_sequences["endpoints"] = [](int i) {
        long long n = i + 1;
        return SequenceElement::of(vid(n, n));
    };

    g.truth.end_counts = {{Notion::VertexEnd, 0}, {Notion::EdgeEnd, 0}, {Notion::MetricEnd, 0}};
    g.truth.star_ball_examples = {{"x", 1}, {"x", 2}};
    g.truth.stabilization_depth = 6;
    return g;
}

} // namespace endscope::gallery
