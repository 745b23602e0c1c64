// gallery/x_graphs.hpp — the graphs X1 and X2.
//
// X1: two adjacent hubs x1, x2, with x_j joined to every vertex of a ray
// L_j. Tokens "x1", "x2", "<j>:<n>" (j in {1,2}, n >= 0). Two vertex-ends
// and two edge-ends; no metric rays (every ray tail has diameter <= 3).
//
// X2: one hub x joined to every vertex of both rays. Tokens "x", "<j>:<n>".
// Two vertex-ends but only one edge-end; no metric rays.
#pragma once

#include <cstdlib>

#include "endscope/gallery/common.hpp"

namespace endscope::gallery {

namespace x_detail {

struct Pos {
    int hub = 0;  // 1 = x1, 2 = x2, 3 = x (X2); 0 = ray vertex
    long long j = 0, n = 0;
};

inline std::optional<Pos> parse(const std::string& token) {
    if (token == "x1") return Pos{1, 0, 0};
    if (token == "x2") return Pos{2, 0, 0};
    if (token == "x") return Pos{3, 0, 0};
    auto colon = token.find(':');
    if (colon == std::string::npos) return std::nullopt;
    auto j = parse_int(token.substr(0, colon));
    auto n = parse_int(token.substr(colon + 1));
    if (!j || !n || (*j != 1 && *j != 2) || *n < 0) return std::nullopt;
    return Pos{0, *j, *n};
}

inline VertexId rv(long long j, long long n) {
    return VertexId(std::to_string(j) + ":" + std::to_string(n));
}

// Shared oracle for both graphs; `two_hubs` distinguishes X1 from X2.
class Oracle final : public GalleryOracle {
  public:
    explicit Oracle(bool two_hubs) : two_hubs_(two_hubs) {}

    std::optional<bool> shape_contains(const Carrier& c, const VertexId& v) const override {
        auto p = parse(v.token);
        if (!p) return std::nullopt;
        const long long side = c.param;
        if (c.shape == "side-tail") // the ray L_side alone
            return p->hub == 0 && p->j == side;
        if (c.shape == "side-closed") // L_side plus its hub (X1 only)
            return (p->hub == 0 && p->j == side) || p->hub == side;
        if (c.shape == "side-rest") // complement of side-tail
            return !(p->hub == 0 && p->j == side);
        return std::nullopt;
    }

    std::optional<CutTruth> certify(const Carrier& c) const override {
        if (c.kind != Carrier::Kind::Shape) return std::nullopt;
        if (c.shape == "side-tail") {
            // θ = {hub}: a vertex-cut and a metric cut; δ has one edge per
            // tail vertex, so never an edge-cut.
            return CutTruth{Cert::YesCertified, Cert::NoCertified, Cert::YesCertified};
        }
        if (c.shape == "side-closed" && two_hubs_) {
            // θ = {other hub}, δ = {x1-x2}.
            return CutTruth{Cert::YesCertified, Cert::YesCertified, Cert::YesCertified};
        }
        if (c.shape == "side-rest") {
            // θ = the whole other ray: infinite but of diameter <= 2.
            return CutTruth{Cert::NoCertified, Cert::NoCertified, Cert::YesCertified};
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
            if (c.shape == "side-tail" || c.shape == "side-closed") return *side == c.param;
            if (c.shape == "side-rest") return *side != c.param;
            return std::nullopt;
        }
        if (c.kind == Carrier::Kind::BallComplementComponent) {
            auto fp = parse(c.fingerprint);
            if (!fp) return std::nullopt;
            long long comp_side = fp->hub == 0 ? fp->j : fp->hub;
            if (comp_side != 1 && comp_side != 2) return std::nullopt;
            return *side == comp_side;
        }
        return std::nullopt;
    }

    std::optional<bool> equivalent(const Ray& a, const Ray& b, Notion notion) const override {
        auto sa = ray_side(a), sb = ray_side(b);
        if (!sa || !sb) return std::nullopt;
        if (*sa == *sb) return true;
        if (!two_hubs_ && notion == Notion::EdgeEnd) return true; // X2: one edge-end
        return std::nullopt;
    }

    std::vector<Carrier> candidate_cuts(Notion notion, int) const override {
        std::vector<Carrier> out{Carrier::gallery_shape("side-tail", 1),
                                 Carrier::gallery_shape("side-tail", 2)};
        if (two_hubs_ && notion == Notion::EdgeEnd) {
            out.push_back(Carrier::gallery_shape("side-closed", 1));
            out.push_back(Carrier::gallery_shape("side-closed", 2));
        }
        return out;
    }

    std::optional<Carrier> complement_shape(const Carrier& c) const override {
        if (c.kind != Carrier::Kind::Shape) return std::nullopt;
        if (c.shape == "side-tail") return Carrier::gallery_shape("side-rest", c.param);
        if (c.shape == "side-closed" && two_hubs_)
            return Carrier::gallery_shape("side-closed", 3 - c.param);
        return std::nullopt;
    }

    std::optional<Carrier> match_shape(const Window& wnd,
                                       const std::vector<VertexId>& side) const override {
        for (long long j : {1, 2}) {
            for (const char* shape : {"side-tail", "side-closed"}) {
                if (!two_hubs_ && std::string(shape) == "side-closed") continue;
                Carrier c = Carrier::gallery_shape(shape, j);
                bool ok = true;
                for (const auto& v : wnd.vertices()) {
                    bool in = *shape_contains(c, v);
                    bool listed = std::binary_search(side.begin(), side.end(), v);
                    if (in != listed) {
                        ok = false;
                        break;
                    }
                }
                if (ok) return c;
            }
        }
        return std::nullopt;
    }

    bool metric_rays_exist() const override { return false; }

  private:
    static std::optional<long long> ray_side(const Ray& ray) {
        auto p = parse(ray.generator(0).token);
        auto q = parse(ray.generator(1).token);
        for (const auto& pos : {p, q})
            if (pos && pos->hub == 0) return pos->j;
        return std::nullopt;
    }

    bool two_hubs_;
};

} // namespace x_detail

inline GalleryGraph make_x1() {
    using x_detail::parse;
    using x_detail::rv;

    auto graph = std::make_shared<LazyGraph>();
    graph->root = VertexId("x1");
    graph->neighbor_prefix = [](const VertexId& v, std::size_t k) {
        auto p = parse(v.token);
        if (!p || p->hub == 3) throw InvalidConfigError("x1: bad token " + v.token);
        std::vector<VertexId> ns;
        if (p->hub != 0) {
            ns.push_back(VertexId(p->hub == 1 ? "x2" : "x1"));
            for (long long n = 0; ns.size() < k; ++n) ns.push_back(rv(p->hub, n));
            return ns;
        }
        ns.push_back(VertexId(p->j == 1 ? "x1" : "x2"));
        if (p->n > 0) ns.push_back(rv(p->j, p->n - 1));
        ns.push_back(rv(p->j, p->n + 1));
        if (ns.size() > k) ns.resize(k);
        return ns;
    };
    graph->is_adjacent = [](const VertexId& a, const VertexId& b) {
        auto pa = parse(a.token), pb = parse(b.token);
        if (!pa || !pb || pa->hub == 3 || pb->hub == 3) return false;
        if (pa->hub != 0 && pb->hub != 0) return pa->hub != pb->hub;
        if (pa->hub != 0) return pb->j == pa->hub;
        if (pb->hub != 0) return pa->j == pb->hub;
        return pa->j == pb->j && std::llabs(pa->n - pb->n) == 1;
    };
    graph->degree_hint = [](const VertexId& v) {
        auto p = parse(v.token);
        if (!p || p->hub != 0) return DegreeHint::infinite();
        return DegreeHint::finite(p->n == 0 ? 2 : 3);
    };
    graph->exact_metric = [](const VertexId& a, const VertexId& b) -> std::optional<int> {
        auto pa = parse(a.token), pb = parse(b.token);
        if (!pa || !pb) return std::nullopt;
        if (a.token == b.token) return 0;
        if (pa->hub != 0 && pb->hub != 0) return 1;
        if (pa->hub != 0 || pb->hub != 0) {
            const auto& hub = pa->hub != 0 ? pa : pb;
            const auto& ray = pa->hub != 0 ? pb : pa;
            return hub->hub == ray->j ? 1 : 2;
        }
        if (pa->j == pb->j) return static_cast<int>(std::min<long long>(std::llabs(pa->n - pb->n), 2));
        return 3; // across the two rays: through both hubs
    };

    GalleryGraph g;
    g.tag = "x1";
    g.graph = graph;
    g.oracle = std::make_shared<x_detail::Oracle>(true);
    g.named_rays["L1"] = make_ray("L1", [](int i) { return rv(1, i); });
    g.named_rays["L2"] = make_ray("L2", [](int i) { return rv(2, i); });
    for (auto& [name, ray] : g.named_rays)
        ray.metricity.kind = Metricity::Kind::NotMetricCertified; // tails have diameter <= 3

    g.truth.end_counts = {{Notion::VertexEnd, 2}, {Notion::EdgeEnd, 2}, {Notion::MetricEnd, 0}};
    g.truth.stabilization_depth = 6;
    using O = Verdict::Outcome;
    g.truth.expected_verdicts = {
        {"L1", "L2", Notion::VertexEnd, O::Separated, false},
        {"L1", "L2", Notion::EdgeEnd, O::Separated, false},
    };
    return g;
}

inline GalleryGraph make_x2() {
    using x_detail::parse;
    using x_detail::rv;

    auto graph = std::make_shared<LazyGraph>();
    graph->root = VertexId("x");
    graph->neighbor_prefix = [](const VertexId& v, std::size_t k) {
        auto p = parse(v.token);
        if (!p || p->hub == 1 || p->hub == 2) throw InvalidConfigError("x2: bad token " + v.token);
        std::vector<VertexId> ns;
        if (p->hub == 3) {
            for (long long n = 0; ns.size() < k; ++n) {
                ns.push_back(rv(1, n));
                if (ns.size() < k) ns.push_back(rv(2, n));
            }
            return ns;
        }
        ns.push_back(VertexId("x"));
        if (p->n > 0) ns.push_back(rv(p->j, p->n - 1));
        ns.push_back(rv(p->j, p->n + 1));
        if (ns.size() > k) ns.resize(k);
        return ns;
    };
    graph->is_adjacent = [](const VertexId& a, const VertexId& b) {
        auto pa = parse(a.token), pb = parse(b.token);
        if (!pa || !pb || pa->hub == 1 || pa->hub == 2 || pb->hub == 1 || pb->hub == 2)
            return false;
        if (pa->hub == 3 && pb->hub == 3) return false;
        if (pa->hub == 3 || pb->hub == 3) return true;
        return pa->j == pb->j && std::llabs(pa->n - pb->n) == 1;
    };
    graph->degree_hint = [](const VertexId& v) {
        auto p = parse(v.token);
        if (!p || p->hub == 3) return DegreeHint::infinite();
        return DegreeHint::finite(p->n == 0 ? 2 : 3);
    };
    graph->exact_metric = [](const VertexId& a, const VertexId& b) -> std::optional<int> {
        auto pa = parse(a.token), pb = parse(b.token);
        if (!pa || !pb) return std::nullopt;
        if (a.token == b.token) return 0;
        if (pa->hub == 3 || pb->hub == 3) return 1;
        if (pa->j == pb->j) return static_cast<int>(std::min<long long>(std::llabs(pa->n - pb->n), 2));
        return 2; // across the rays: through the hub
    };

    GalleryGraph g;
    g.tag = "x2";
    g.graph = graph;
    g.oracle = std::make_shared<x_detail::Oracle>(false);
    g.named_rays["L1"] = make_ray("L1", [](int i) { return rv(1, i); });
    g.named_rays["L2"] = make_ray("L2", [](int i) { return rv(2, i); });
    for (auto& [name, ray] : g.named_rays)
        ray.metricity.kind = Metricity::Kind::NotMetricCertified; // tails have diameter <= 2

    g.truth.end_counts = {{Notion::VertexEnd, 2}, {Notion::EdgeEnd, 1}, {Notion::MetricEnd, 0}};
    g.truth.stabilization_depth = 6;
    using O = Verdict::Outcome;
    g.truth.expected_verdicts = {
        {"L1", "L2", Notion::VertexEnd, O::Separated, false},
        {"L1", "L2", Notion::EdgeEnd, O::EquivalentCertified, false},
    };
    return g;
}

} // namespace endscope::gallery
