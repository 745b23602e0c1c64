// gallery/ladder.hpp — the two-sided infinite ladder.
//
// Tokens: "<n>:t" and "<n>:b" for column n (any integer) on the top or
// bottom rail. Adjacency: along each rail and across each rung, so
// d((m,s),(n,u)) = |m-n| + [s != u].
#pragma once

#include <cmath>
#include <cstdlib>

#include "endscope/gallery/common.hpp"

namespace endscope::gallery {

namespace ladder_detail {

struct Pos {
    long long col = 0;
    bool top = true;
};

inline std::optional<Pos> parse(const std::string& token) {
    auto colon = token.find(':');
    if (colon == std::string::npos || colon + 2 != token.size()) return std::nullopt;
    char side = token[colon + 1];
    if (side != 't' && side != 'b') return std::nullopt;
    auto col = parse_int(token.substr(0, colon));
    if (!col) return std::nullopt;
    return Pos{*col, side == 't'};
}

inline VertexId vid(long long col, bool top) {
    return VertexId(std::to_string(col) + (top ? ":t" : ":b"));
}

class Oracle final : public GalleryOracle {
  public:
    std::optional<bool> shape_contains(const Carrier& c, const VertexId& v) const override {
        auto p = parse(v.token);
        if (!p) return std::nullopt;
        if (c.shape == "right-half") return p->col >= c.param;
        if (c.shape == "left-half") return p->col <= c.param;
        return std::nullopt;
    }

    std::optional<CutTruth> certify(const Carrier& c) const override {
        if (c.kind != Carrier::Kind::Shape) return std::nullopt;
        if (c.shape == "right-half" || c.shape == "left-half") {
            // θ is one column (2 vertices, diameter 1), δ two rail edges.
            return CutTruth{Cert::YesCertified, Cert::YesCertified, Cert::YesCertified};
        }
        return std::nullopt;
    }

    bool ball_components_stable(const VertexId& center, int) const override {
        return parse(center.token).has_value();
    }

    std::optional<bool> ray_eventually_in(const Ray& ray, const Carrier& c) const override {
        int dir = ray_direction(ray);
        if (dir == 0) return std::nullopt;
        if (c.kind == Carrier::Kind::Shape) {
            if (c.shape == "right-half") return dir > 0;
            if (c.shape == "left-half") return dir < 0;
            return std::nullopt;
        }
        if (c.kind == Carrier::Kind::BallComplementComponent) {
            auto fp = parse(c.fingerprint);
            auto ct = parse(c.center.token);
            if (!fp || !ct) return std::nullopt;
            // The component's side of the ball matches the sign of the
            // fingerprint offset; rays follow their rail direction.
            if (fp->col > ct->col) return dir > 0;
            if (fp->col < ct->col) return dir < 0;
            return std::nullopt;
        }
        return std::nullopt;
    }

    std::optional<bool> equivalent(const Ray& a, const Ray& b, Notion) const override {
        int da = ray_direction(a), db = ray_direction(b);
        if (da == 0 || db == 0) return std::nullopt;
        if (da == db) return true; // same rail direction, same end in every notion
        return std::nullopt;       // opposite directions separate; let the search find the cut
    }

    std::vector<Carrier> candidate_cuts(Notion, int depth) const override {
        return {Carrier::gallery_shape("right-half", 1),
                Carrier::gallery_shape("left-half", -1),
                Carrier::gallery_shape("right-half", std::max(1, depth / 2))};
    }

    std::optional<Carrier> complement_shape(const Carrier& c) const override {
        if (c.kind != Carrier::Kind::Shape) return std::nullopt;
        if (c.shape == "right-half") return Carrier::gallery_shape("left-half", c.param - 1);
        if (c.shape == "left-half") return Carrier::gallery_shape("right-half", c.param + 1);
        return std::nullopt;
    }

    std::optional<Carrier> match_shape(const Window& wnd,
                                       const std::vector<VertexId>& side) const override {
        if (side.empty()) return std::nullopt;
        long long lo = 0, hi = 0;
        bool first = true;
        for (const auto& v : side) {
            auto p = parse(v.token);
            if (!p) return std::nullopt;
            lo = first ? p->col : std::min(lo, p->col);
            hi = first ? p->col : std::max(hi, p->col);
            first = false;
        }
        auto matches = [&](const Carrier& c) {
            for (const auto& v : wnd.vertices()) {
                bool in = *shape_contains(c, v);
                bool listed = std::binary_search(side.begin(), side.end(), v);
                if (in != listed) return false;
            }
            return true;
        };
        Carrier right = Carrier::gallery_shape("right-half", lo);
        if (matches(right)) return right;
        Carrier left = Carrier::gallery_shape("left-half", hi);
        if (matches(left)) return left;
        return std::nullopt;
    }

  private:
    static int ray_direction(const Ray& ray) {
        if (ray.verified_prefix < 2) {
            // Fall back to the first two generated vertices.
            auto a = parse(ray.generator(0).token), b = parse(ray.generator(1).token);
            if (!a || !b) return 0;
            return b->col > a->col ? 1 : (b->col < a->col ? -1 : 0);
        }
        auto a = parse(ray.generator(ray.verified_prefix - 2).token);
        auto b = parse(ray.generator(ray.verified_prefix - 1).token);
        if (!a || !b) return 0;
        return b->col > a->col ? 1 : (b->col < a->col ? -1 : 0);
    }
};

} // namespace ladder_detail

inline GalleryGraph make_ladder() {
    using ladder_detail::parse;
    using ladder_detail::vid;

    auto graph = std::make_shared<LazyGraph>();
    graph->root = vid(0, true);
    graph->neighbor_prefix = [](const VertexId& v, std::size_t k) {
        auto p = parse(v.token);
        if (!p) throw InvalidConfigError("ladder: bad token " + v.token);
        std::vector<VertexId> ns{vid(p->col - 1, p->top), vid(p->col + 1, p->top),
                                 vid(p->col, !p->top)};
        if (ns.size() > k) ns.resize(k);
        return ns;
    };
    graph->is_adjacent = [](const VertexId& a, const VertexId& b) {
        auto pa = parse(a.token), pb = parse(b.token);
        if (!pa || !pb) return false;
        long long dc = std::llabs(pa->col - pb->col);
        return dc + (pa->top != pb->top ? 1 : 0) == 1;
    };
    graph->degree_hint = [](const VertexId&) { return DegreeHint::finite(3); };
    graph->exact_metric = [](const VertexId& a, const VertexId& b) -> std::optional<int> {
        auto pa = parse(a.token), pb = parse(b.token);
        if (!pa || !pb) return std::nullopt;
        return static_cast<int>(std::llabs(pa->col - pb->col) + (pa->top != pb->top ? 1 : 0));
    };

    GalleryGraph g;
    g.tag = "ladder";
    g.graph = graph;
    g.oracle = std::make_shared<ladder_detail::Oracle>();

    g.named_rays["right-top"] = make_ray("right-top", [](int i) { return vid(i, true); });
    g.named_rays["right-bottom"] = make_ray("right-bottom", [](int i) { return vid(i, false); });
    g.named_rays["left-top"] = make_ray("left-top", [](int i) { return vid(-i, true); });
    g.named_rays["left-bottom"] = make_ray("left-bottom", [](int i) { return vid(-i - 1, false); });

    g.named_sequences["const-root"] = [](int) { return SequenceElement::of(vid(0, true)); };
    g.named_sequences["rail"] = [](int i) { return SequenceElement::of(vid(i, true)); };
    g.named_sequences["alternate"] = [](int i) {
        long long col = i / 2 + 1;
        return SequenceElement::of(vid(i % 2 == 0 ? col : -col, true));
    };

    g.truth.end_counts = {{Notion::VertexEnd, 2}, {Notion::EdgeEnd, 2}, {Notion::MetricEnd, 2}};
    g.truth.stabilization_depth = 6;
    using O = Verdict::Outcome;
    g.truth.expected_verdicts = {
        {"right-top", "left-top", Notion::VertexEnd, O::Separated, false},
        {"right-top", "left-top", Notion::EdgeEnd, O::Separated, false},
        {"right-top", "left-top", Notion::MetricEnd, O::Separated, false},
        {"right-top", "right-bottom", Notion::VertexEnd, O::EquivalentCertified, false},
        {"right-top", "right-bottom", Notion::EdgeEnd, O::EquivalentCertified, false},
        {"right-top", "right-bottom", Notion::MetricEnd, O::EquivalentCertified, false},
        // Without the oracle a window can never rule out an unseen merge,
        // so the honest blind answer stays NotSeparatedAtDepth forever.
        {"right-top", "left-top", Notion::MetricEnd, O::NotSeparatedAtDepth, true},
    };
    return g;
}

} // namespace endscope::gallery
