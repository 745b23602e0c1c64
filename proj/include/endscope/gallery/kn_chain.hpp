// gallery/kn_chain.hpp — chains of complete graphs on countably many
// vertices.
//
//   5a: a single K_N.
//   5b: K_N^(1), K_N^(2) joined to adjacent hubs x1, x2 respectively.
//   5c: both copies joined to a single hub x.
//   5d: copies K_N^(n) for every integer n, with a complete bipartite
//       join between consecutive levels.
//
// Tokens: level vertices are "<level>:<index>" (level 0 only for 5a, levels
// 1/2 for 5b and 5c, any integer for 5d); hubs are "x1"/"x2" (5b) and "x"
// (5c). level_size > 0 builds the finite K_b variant used by metric sanity
// checks; 0 keeps the countably infinite levels under budgeted enumeration.
#pragma once

#include <cstdlib>

#include "endscope/gallery/common.hpp"

namespace endscope::gallery {

enum class KnVariant { V5a, V5b, V5c, V5d };

namespace kn_detail {

struct Pos {
    int hub = 0; // 1 = x1, 2 = x2, 3 = x; 0 = level vertex
    long long level = 0, index = 0;
};

inline std::optional<Pos> parse(const std::string& token) {
    if (token == "x1") return Pos{1, 0, 0};
    if (token == "x2") return Pos{2, 0, 0};
    if (token == "x") return Pos{3, 0, 0};
    auto colon = token.find(':');
    if (colon == std::string::npos) return std::nullopt;
    auto lv = parse_int(token.substr(0, colon));
    auto ix = parse_int(token.substr(colon + 1));
    if (!lv || !ix || *ix < 0) return std::nullopt;
    return Pos{0, *lv, *ix};
}

inline VertexId vid(long long level, long long index) {
    return VertexId(std::to_string(level) + ":" + std::to_string(index));
}

class Oracle final : public GalleryOracle {
  public:
    Oracle(KnVariant variant, long long level_size)
        : variant_(variant), level_size_(level_size) {}

    std::optional<bool> shape_contains(const Carrier& c, const VertexId& v) const override {
        auto p = parse(v.token);
        if (!p) return std::nullopt;
        if (c.shape == "levels-geq") return p->hub == 0 && p->level >= c.param;
        if (c.shape == "levels-leq") return p->hub == 0 && p->level <= c.param;
        if (c.shape == "kside") return p->hub == 0 && p->level == c.param;
        if (c.shape == "kside-rest") return !(p->hub == 0 && p->level == c.param);
        if (c.shape == "kclosed")
            return (p->hub == 0 && p->level == c.param) || p->hub == c.param;
        return std::nullopt;
    }

    std::optional<CutTruth> certify(const Carrier& c) const override {
        if (c.kind != Carrier::Kind::Shape) return std::nullopt;
        const bool finite_levels = level_size_ > 0;
        if (c.shape == "levels-geq" || c.shape == "levels-leq") {
            // θ is one whole level: diameter 1 always; finite only in the
            // K_b variant.
            Cert fin = finite_levels ? Cert::YesCertified : Cert::NoCertified;
            return CutTruth{fin, fin, Cert::YesCertified};
        }
        if (c.shape == "kside") {
            // θ = {hub}; δ has one edge per level vertex.
            Cert edge = finite_levels ? Cert::YesCertified : Cert::NoCertified;
            return CutTruth{Cert::YesCertified, edge, Cert::YesCertified};
        }
        if (c.shape == "kside-rest") {
            // θ = the named level itself: diameter 1.
            Cert fin = finite_levels ? Cert::YesCertified : Cert::NoCertified;
            return CutTruth{fin, fin, Cert::YesCertified};
        }
        if (c.shape == "kclosed") {
            // Only meaningful for 5b: θ = {other hub}, δ = {x1-x2}.
            if (variant_ == KnVariant::V5b)
                return CutTruth{Cert::YesCertified, Cert::YesCertified, Cert::YesCertified};
            return std::nullopt;
        }
        return std::nullopt;
    }

    bool ball_components_stable(const VertexId& center, int) const override {
        return parse(center.token).has_value();
    }

    std::optional<bool> ray_eventually_in(const Ray& ray, const Carrier& c) const override {
        auto side = ray_side(ray);
        if (!side) return std::nullopt;
        if (c.kind == Carrier::Kind::Shape) {
            if (c.shape == "levels-geq") return *side > 0;
            if (c.shape == "levels-leq") return *side < 0;
            if (c.shape == "kside" || c.shape == "kclosed") return *side == c.param;
            if (c.shape == "kside-rest") return *side != c.param;
            return std::nullopt;
        }
        if (c.kind == Carrier::Kind::BallComplementComponent) {
            auto fp = parse(c.fingerprint);
            if (!fp) return std::nullopt;
            long long comp_side = fp->hub == 0 ? (fp->level > 0 ? 1 : (fp->level < 0 ? -1 : 0))
                                               : fp->hub;
            if (variant_ == KnVariant::V5d)
                return comp_side != 0 && ((*side > 0) == (comp_side > 0));
            // 5b/5c: components group by level 1 vs level 2.
            long long comp_level = fp->hub == 0 ? fp->level : fp->hub;
            return *side == comp_level;
        }
        return std::nullopt;
    }

    std::optional<bool> equivalent(const Ray& a, const Ray& b, Notion notion) const override {
        auto sa = ray_side(a), sb = ray_side(b);
        if (!sa || !sb) return std::nullopt;
        if (*sa == *sb) return true;
        if (variant_ == KnVariant::V5d && notion != Notion::MetricEnd && level_size_ == 0)
            return true; // one vertex-end and one edge-end
        if (variant_ == KnVariant::V5c && notion == Notion::EdgeEnd) return true;
        return std::nullopt;
    }

    std::vector<Carrier> candidate_cuts(Notion notion, int depth) const override {
        std::vector<Carrier> out;
        switch (variant_) {
            case KnVariant::V5a:
                break;
            case KnVariant::V5b:
                out.push_back(Carrier::gallery_shape("kside", 1));
                out.push_back(Carrier::gallery_shape("kside", 2));
                if (notion == Notion::EdgeEnd) {
                    out.push_back(Carrier::gallery_shape("kclosed", 1));
                    out.push_back(Carrier::gallery_shape("kclosed", 2));
                }
                break;
            case KnVariant::V5c:
                out.push_back(Carrier::gallery_shape("kside", 1));
                out.push_back(Carrier::gallery_shape("kside", 2));
                break;
            case KnVariant::V5d:
                out.push_back(Carrier::gallery_shape("levels-geq", 1));
                out.push_back(Carrier::gallery_shape("levels-leq", -1));
                out.push_back(Carrier::gallery_shape("levels-geq", std::max(1, depth / 2)));
                break;
        }
        return out;
    }

    std::optional<Carrier> complement_shape(const Carrier& c) const override {
        if (c.kind != Carrier::Kind::Shape) return std::nullopt;
        if (c.shape == "levels-geq") return Carrier::gallery_shape("levels-leq", c.param - 1);
        if (c.shape == "levels-leq") return Carrier::gallery_shape("levels-geq", c.param + 1);
        if (c.shape == "kside") return Carrier::gallery_shape("kside-rest", c.param);
        if (c.shape == "kclosed" && variant_ == KnVariant::V5b)
            return Carrier::gallery_shape("kclosed", 3 - c.param);
        return std::nullopt;
    }

    std::optional<Carrier> match_shape(const Window& wnd,
                                       const std::vector<VertexId>& side) const override {
        std::vector<Carrier> shapes;
        if (variant_ == KnVariant::V5b)
            shapes = {Carrier::gallery_shape("kclosed", 1), Carrier::gallery_shape("kclosed", 2),
                      Carrier::gallery_shape("kside", 1), Carrier::gallery_shape("kside", 2)};
        else if (variant_ == KnVariant::V5c)
            shapes = {Carrier::gallery_shape("kside", 1), Carrier::gallery_shape("kside", 2)};
        for (const Carrier& c : shapes) {
            bool ok = true;
            for (const auto& v : wnd.vertices()) {
                bool in = *shape_contains(c, v);
                if (in != std::binary_search(side.begin(), side.end(), v)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return c;
        }
        return std::nullopt;
    }

    bool metric_rays_exist() const override { return variant_ == KnVariant::V5d; }

  private:
    // For 5d: the sign of the levels the ray walks into. For 5b/5c: the
    // level (1 or 2) it lives in.
    static std::optional<long long> ray_side(const Ray& ray) {
        for (int i = 0; i < 2; ++i) {
            auto p = parse(ray.generator(i).token);
            if (p && p->hub == 0 && p->level != 0) return p->level;
        }
        auto p = parse(ray.generator(0).token);
        if (p && p->hub == 0) return p->level;
        return std::nullopt;
    }

    KnVariant variant_;
    long long level_size_;
};

} // namespace kn_detail

inline GalleryGraph make_kn_chain(KnVariant variant, long long level_size = 0) {
    using kn_detail::parse;
    using kn_detail::vid;
    if (level_size < 0 || level_size == 1)
        throw InvalidConfigError("kn-chain: level size must be 0 (infinite) or >= 2");
    const long long b = level_size;

    auto in_range = [variant](long long level) {
        switch (variant) {
            case KnVariant::V5a: return level == 0;
            case KnVariant::V5b:
            case KnVariant::V5c: return level == 1 || level == 2;
            case KnVariant::V5d: return true;
        }
        return false;
    };
    auto hub_ok = [variant](int hub) {
        if (hub == 0) return true;
        if (variant == KnVariant::V5b) return hub == 1 || hub == 2;
        if (variant == KnVariant::V5c) return hub == 3;
        return false;
    };

    auto graph = std::make_shared<LazyGraph>();
    switch (variant) {
        case KnVariant::V5a: graph->root = vid(0, 0); break;
        case KnVariant::V5b: graph->root = VertexId("x1"); break;
        case KnVariant::V5c: graph->root = VertexId("x"); break;
        case KnVariant::V5d: graph->root = vid(0, 0); break;
    }

    graph->neighbor_prefix = [variant, b, in_range, hub_ok](const VertexId& v, std::size_t k) {
        auto p = parse(v.token);
        if (!p || !hub_ok(p->hub) || (p->hub == 0 && !in_range(p->level)) ||
            (p->hub == 0 && b > 0 && p->index >= b))
            throw InvalidConfigError("kn-chain: bad token " + v.token);
        std::vector<VertexId> ns;
        auto emit_level = [&](long long level, long long index) {
            if (!in_range(level)) return;
            if (b > 0 && index >= b) return;
            ns.push_back(vid(level, index));
        };
        if (p->hub != 0) {
            if (variant == KnVariant::V5b) {
                ns.push_back(VertexId(p->hub == 1 ? "x2" : "x1"));
                for (long long i = 0; ns.size() < k && (b == 0 || i < b); ++i)
                    emit_level(p->hub, i);
            } else { // 5c hub x
                for (long long i = 0; ns.size() < k && (b == 0 || i < b); ++i) {
                    emit_level(1, i);
                    if (ns.size() < k) emit_level(2, i);
                }
            }
            if (ns.size() > k) ns.resize(k);
            return ns;
        }
        // Level vertex: its hub first (5b/5c), then rounds over indices of
        // its own and the adjacent levels.
        if (variant == KnVariant::V5b) ns.push_back(VertexId(p->level == 1 ? "x1" : "x2"));
        if (variant == KnVariant::V5c) ns.push_back(VertexId("x"));
        for (long long i = 0; ns.size() < k && (b == 0 || i < b); ++i) {
            if (i != p->index) emit_level(p->level, i);
            if (variant == KnVariant::V5d) {
                if (ns.size() < k) emit_level(p->level - 1, i);
                if (ns.size() < k) emit_level(p->level + 1, i);
            }
        }
        if (ns.size() > k) ns.resize(k);
        return ns;
    };

    graph->is_adjacent = [variant, b, in_range, hub_ok](const VertexId& x, const VertexId& y) {
        auto pa = parse(x.token), pb = parse(y.token);
        if (!pa || !pb || x.token == y.token) return false;
        if (!hub_ok(pa->hub) || !hub_ok(pb->hub)) return false;
        if (pa->hub == 0 && (!in_range(pa->level) || (b > 0 && pa->index >= b))) return false;
        if (pb->hub == 0 && (!in_range(pb->level) || (b > 0 && pb->index >= b))) return false;
        if (pa->hub != 0 && pb->hub != 0)
            return variant == KnVariant::V5b; // x1 ~ x2
        if (pa->hub != 0 || pb->hub != 0) {
            const auto& hub = pa->hub != 0 ? pa : pb;
            const auto& lv = pa->hub != 0 ? pb : pa;
            if (variant == KnVariant::V5b) return lv->level == hub->hub;
            return variant == KnVariant::V5c;
        }
        if (pa->level == pb->level) return true;
        return variant == KnVariant::V5d && std::llabs(pa->level - pb->level) == 1;
    };

    graph->degree_hint = [variant, b](const VertexId& v) {
        if (b == 0) return DegreeHint::infinite();
        auto p = parse(v.token);
        if (!p) return DegreeHint::unknown();
        if (p->hub != 0)
            return DegreeHint::finite(static_cast<std::size_t>(
                variant == KnVariant::V5b ? b + 1 : 2 * b));
        long long deg = b - 1;
        if (variant == KnVariant::V5b || variant == KnVariant::V5c) deg += 1;
        if (variant == KnVariant::V5d) deg += 2 * b;
        return DegreeHint::finite(static_cast<std::size_t>(deg));
    };

    graph->exact_metric = [variant](const VertexId& x, const VertexId& y) -> std::optional<int> {
        auto pa = parse(x.token), pb = parse(y.token);
        if (!pa || !pb) return std::nullopt;
        if (x.token == y.token) return 0;
        if (pa->hub != 0 && pb->hub != 0) return 1;  // x1-x2 in 5b
        if (pa->hub != 0 || pb->hub != 0) {
            const auto& hub = pa->hub != 0 ? pa : pb;
            const auto& lv = pa->hub != 0 ? pb : pa;
            if (variant == KnVariant::V5c) return 1;
            return lv->level == hub->hub ? 1 : 2;
        }
        if (pa->level == pb->level) return 1;
        if (variant == KnVariant::V5d) return static_cast<int>(std::llabs(pa->level - pb->level));
        if (variant == KnVariant::V5c) return 2; // through the hub
        return 3;                                // 5b: through both hubs
    };

    GalleryGraph g;
    g.graph = graph;
    g.oracle = std::make_shared<kn_detail::Oracle>(variant, level_size);
    g.truth.stabilization_depth = 6;
    using O = Verdict::Outcome;
    switch (variant) {
        case KnVariant::V5a: {
            g.tag = "kn-chain:variant=5a";
            Ray idx = make_ray("idx", [](int i) { return vid(0, i); });
            idx.metricity.kind = Metricity::Kind::NotMetricCertified; // diameter 1
            g.named_rays["idx"] = idx;
            g.named_sequences["distinct"] = [](int i) { return SequenceElement::of(vid(0, i)); };
            g.named_sequences["const-root"] = [](int) { return SequenceElement::of(vid(0, 0)); };
            g.truth.end_counts = {{Notion::VertexEnd, 1}, {Notion::EdgeEnd, 1},
                                  {Notion::MetricEnd, 0}};
            break;
        }
        case KnVariant::V5b: {
            g.tag = "kn-chain:variant=5b";
            Ray k1 = make_ray("K1", [](int i) { return vid(1, i); });
            Ray k2 = make_ray("K2", [](int i) { return vid(2, i); });
            k1.metricity.kind = Metricity::Kind::NotMetricCertified;
            k2.metricity.kind = Metricity::Kind::NotMetricCertified;
            g.named_rays["K1"] = k1;
            g.named_rays["K2"] = k2;
            g.truth.end_counts = {{Notion::VertexEnd, 2}, {Notion::EdgeEnd, 2},
                                  {Notion::MetricEnd, 0}};
            g.truth.expected_verdicts = {
                {"K1", "K2", Notion::VertexEnd, O::Separated, false},
                {"K1", "K2", Notion::EdgeEnd, O::Separated, false},
            };
            break;
        }
        case KnVariant::V5c: {
            g.tag = "kn-chain:variant=5c";
            Ray k1 = make_ray("K1", [](int i) { return vid(1, i); });
            Ray k2 = make_ray("K2", [](int i) { return vid(2, i); });
            k1.metricity.kind = Metricity::Kind::NotMetricCertified;
            k2.metricity.kind = Metricity::Kind::NotMetricCertified;
            g.named_rays["K1"] = k1;
            g.named_rays["K2"] = k2;
            g.truth.end_counts = {{Notion::VertexEnd, 2}, {Notion::EdgeEnd, 1},
                                  {Notion::MetricEnd, 0}};
            g.truth.expected_verdicts = {
                {"K1", "K2", Notion::VertexEnd, O::Separated, false},
                {"K1", "K2", Notion::EdgeEnd, O::EquivalentCertified, false},
            };
            break;
        }
        case KnVariant::V5d: {
            g.tag = "kn-chain:variant=5d";
            g.named_rays["right"] = make_ray("right", [](int i) { return vid(i, 0); });
            g.named_rays["left"] = make_ray("left", [](int i) { return vid(-i, 0); });
            g.named_rays["right-alt"] = make_ray("right-alt", [](int i) { return vid(i, 1); });
            g.named_sequences["const-root"] = [](int) { return SequenceElement::of(vid(0, 0)); };
            if (level_size == 0) {
                g.truth.end_counts = {{Notion::VertexEnd, 1}, {Notion::EdgeEnd, 1},
                                      {Notion::MetricEnd, 2}};
                g.truth.expected_verdicts = {
                    {"right", "left", Notion::VertexEnd, O::EquivalentCertified, false},
                    {"right", "left", Notion::EdgeEnd, O::EquivalentCertified, false},
                    {"right", "left", Notion::MetricEnd, O::Separated, false},
                    {"right", "right-alt", Notion::MetricEnd, O::EquivalentCertified, false},
                };
            } else {
                // Finite levels make the chain locally finite and ladder-like.
                g.truth.end_counts = {{Notion::VertexEnd, 2}, {Notion::EdgeEnd, 2},
                                      {Notion::MetricEnd, 2}};
                g.truth.expected_verdicts = {
                    {"right", "left", Notion::VertexEnd, O::Separated, false},
                    {"right", "left", Notion::EdgeEnd, O::Separated, false},
                    {"right", "left", Notion::MetricEnd, O::Separated, false},
                };
            }
            if (level_size > 0) g.tag += ",b=" + std::to_string(level_size);
            break;
        }
    }
    return g;
}

} // namespace endscope::gallery
