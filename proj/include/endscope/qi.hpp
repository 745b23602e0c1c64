// qi.hpp — quasi-isometries: sampled verification of the axioms, ray
// mapping by geodesic interpolation, A+r fattening and quasi-openness
// evidence.
//
// Verification is falsification-oriented: NoViolationFound is relative to
// the sample, never a proof; a single witnessed violation is final.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "endscope/cuts.hpp"
#include "endscope/ends.hpp"
#include "endscope/errors.hpp"
#include "endscope/gallery/ladder.hpp"
#include "endscope/gallery/line.hpp"
#include "endscope/gallery/tree_plus2.hpp"
#include "endscope/rng.hpp"
#include "endscope/window.hpp"

namespace endscope {

struct QuasiIsometrySpec {
    std::string name;
    std::shared_ptr<const LazyGraph> domain;   // X
    std::shared_ptr<const LazyGraph> codomain; // Y
    std::function<VertexId(const VertexId&)> phi;
    std::function<VertexId(const VertexId&)> psi;
    int a = 1, b = 1, c = 0, d = 0;
};

struct QIViolation {
    std::string axiom; // "Q1".."Q4"
    VertexId w1, w2;
    int measured = 0, bound = 0;
};

struct QIReport {
    int checked_pairs = 0;
    int skipped = 0; // pairs without Exact distances
    std::vector<QIViolation> violations;
    bool no_violation_found() const { return violations.empty(); }
};

namespace detail {

inline std::optional<int> metric_distance(const LazyGraph& g, const VertexId& u,
                                          const VertexId& v) {
    if (u == v) return 0;
    if (g.has_exact_metric()) return g.exact_metric(u, v);
    return std::nullopt;
}

} // namespace detail

// Samples Q1 on X-pairs, Q2 on Y-pairs, Q3 on X-points, Q4 on Y-points.
// Deterministic given the seed; pairs without Exact distances are skipped
// and counted.
inline QIReport qi_verify(const QuasiIsometrySpec& spec, const Window& window_x,
                          const Window& window_y, int samples, std::uint64_t seed) {
    if (samples < 1) throw InvalidConfigError("qi_verify: samples must be >= 1");
    QIReport rep;
    auto xs = window_x.vertices();
    auto ys = window_y.vertices();
    if (xs.empty() || ys.empty()) throw InvalidConfigError("qi_verify: empty sample pool");
    CounterRng rng(seed);

    auto dist_or_skip = [&](const LazyGraph& g, const VertexId& u,
                            const VertexId& v) -> std::optional<int> {
        auto d = detail::metric_distance(g, u, v);
        if (!d) ++rep.skipped;
        return d;
    };

    for (int i = 0; i < samples; ++i) {
        const VertexId& x1 = xs[rng.next_below(xs.size())];
        const VertexId& x2 = xs[rng.next_below(xs.size())];
        const VertexId& y1 = ys[rng.next_below(ys.size())];
        const VertexId& y2 = ys[rng.next_below(ys.size())];

        if (auto dx = dist_or_skip(*spec.domain, x1, x2)) {
            auto dy = dist_or_skip(*spec.codomain, spec.phi(x1), spec.phi(x2));
            if (dy) {
                ++rep.checked_pairs;
                if (*dy > spec.a * *dx)
                    rep.violations.push_back({"Q1", x1, x2, *dy, spec.a * *dx});
            }
        }
        if (auto dy = dist_or_skip(*spec.codomain, y1, y2)) {
            auto dx = dist_or_skip(*spec.domain, spec.psi(y1), spec.psi(y2));
            if (dx) {
                ++rep.checked_pairs;
                if (*dx > spec.b * *dy)
                    rep.violations.push_back({"Q2", y1, y2, *dx, spec.b * *dy});
            }
        }
        if (auto dq3 = dist_or_skip(*spec.domain, spec.psi(spec.phi(x1)), x1)) {
            ++rep.checked_pairs;
            if (*dq3 > spec.c) rep.violations.push_back({"Q3", x1, x1, *dq3, spec.c});
        }
        if (auto dq4 = dist_or_skip(*spec.codomain, spec.phi(spec.psi(y1)), y1)) {
            ++rep.checked_pairs;
            if (*dq4 > spec.d) rep.violations.push_back({"Q4", y1, y1, *dq4, spec.d});
        }
    }
    return rep;
}

// Maps a metric ray into the codomain: connect the phi-images of adjacent
// ray vertices by geodesics of length <= a, then loop-erase the walk into a
// ray prefix. Needs an exact metric on the codomain to steer the geodesics.
inline Ray qi_map_ray(const QuasiIsometrySpec& spec, Ray ray, int depth) {
    if (!spec.codomain->has_exact_metric())
        throw InvalidConfigError("qi_map_ray: codomain needs an exact metric");
    compute_metricity(ray, *spec.domain, depth);
    if (ray.metricity.kind != Metricity::Kind::MetricRayEvidence)
        throw NotMetricRayError("qi_map_ray: the construction is defined on metric rays");

    const int inspect = std::max(ray.verified_prefix, 8 * depth + 16);
    verify_ray(ray, *spec.domain, inspect);

    auto geodesic_step = [&](const VertexId& from, const VertexId& to) {
        // Greedy descent: any neighbor strictly closer to the target.
        std::vector<VertexId> seg;
        VertexId at = from;
        while (!(at == to)) {
            int d = *spec.codomain->exact_metric(at, to);
            std::size_t budget = 16;
            bool advanced = false;
            while (!advanced && budget <= 4096) {
                for (const auto& n : spec.codomain->neighbor_prefix(at, budget)) {
                    if (*spec.codomain->exact_metric(n, to) < d) {
                        at = n;
                        seg.push_back(n);
                        advanced = true;
                        break;
                    }
                }
                budget *= 4;
            }
            if (!advanced)
                throw NotExploredError("qi_map_ray: no geodesic step toward " + to.token);
        }
        return seg;
    };

    // The interpolated walk.
    std::vector<VertexId> walk{spec.phi(ray.at(0))};
    for (int i = 1; i < ray.verified_prefix; ++i) {
        VertexId prev = walk.back();
        VertexId next = spec.phi(ray.at(i));
        auto gap = spec.codomain->exact_metric(prev, next);
        if (!gap) throw NotExploredError("qi_map_ray: image distance unavailable");
        if (*gap > spec.a)
            throw InvalidConfigError("qi_map_ray: interpolation gap " + std::to_string(*gap) +
                                     " exceeds a=" + std::to_string(spec.a) +
                                     " (spec violation)");
        for (const auto& v : geodesic_step(prev, next)) walk.push_back(v);
    }

    // Loop erasure: keep the first visit of every vertex, dropping the loop
    // whenever the walk revisits one.
    std::vector<VertexId> path;
    std::unordered_map<std::string, std::size_t> where;
    for (const auto& v : walk) {
        auto it = where.find(v.token);
        if (it != where.end()) {
            while (path.size() > it->second + 1) {
                where.erase(path.back().token);
                path.pop_back();
            }
            continue;
        }
        where.emplace(v.token, path.size());
        path.push_back(v);
    }

    Ray out;
    out.name = "";
    auto shared = std::make_shared<std::vector<VertexId>>(std::move(path));
    out.generator = [shared](int i) {
        if (i < 0 || static_cast<std::size_t>(i) >= shared->size())
            throw InvalidRayError("qi_map_ray image: index beyond the constructed prefix");
        return (*shared)[static_cast<std::size_t>(i)];
    };
    out.verified_prefix = static_cast<int>(shared->size());
    compute_metricity(out, *spec.codomain, depth);
    return out;
}

// ---- A+r fattening -----------------------------------------------------------

struct FattenResult {
    std::vector<VertexId> vertices;
    std::vector<std::string> end_tags; // carried through unchanged
    Certainty certainty = Certainty::Exact;
};

// {x in window : d(x, A) <= r}, ends carried along. Flagged LowerBound when
// a non-Complete vertex sits within r-1 of A: unexplored vertices could
// still join the fattening.
inline FattenResult fatten(const Window& wnd, const std::vector<VertexId>& a_vertices,
                           const std::vector<std::string>& end_tags, int r) {
    if (r < 0) throw InvalidConfigError("fatten: r must be >= 0");
    FattenResult out;
    out.end_tags = end_tags;
    std::vector<int> dist(wnd.vertex_count(), -1);
    std::deque<int> queue;
    for (const auto& v : a_vertices) {
        int i = wnd.index_of(v);
        if (dist[i] < 0) {
            dist[i] = 0;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (dist[v] >= r) continue;
        for (int u : wnd.adjacency_at(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    for (std::size_t i = 0; i < wnd.vertex_count(); ++i) {
        if (dist[i] >= 0 && dist[i] <= r) out.vertices.emplace_back(wnd.token_at(static_cast<int>(i)));
        if (dist[i] >= 0 && dist[i] <= r - 1 && !wnd.complete_at(static_cast<int>(i)))
            out.certainty = Certainty::LowerBound;
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

// ---- quasi-openness (Theorem-7 style evidence) --------------------------------

struct QuasiOpenEvidence {
    enum class Verdict { OpenEvidence, Unknown };
    Verdict verdict = Verdict::Unknown;
    int theta_size = 0;
    DiameterEstimate theta_diameter;
    int containment_checked = 0;
    int containment_violations = 0;
    int containment_bound = 0;
    std::string hint; // set when Unknown
};

// Computes θ(φ(e)+d+1) in the codomain window, its diameter estimate, and
// checks ψ(θ(φ(e)+d+1)) against θe + b(d+2)+c-1 on the boundary vertices.
inline QuasiOpenEvidence quasi_open_check(const QuasiIsometrySpec& spec, const Carrier& e,
                                          int depth, const GalleryOracle* oracle_x = nullptr,
                                          BudgetSchedule budget = default_budget()) {
    Window wx = explore(spec.domain, depth, budget);
    Window wy = explore(spec.codomain, depth, budget);
    QuasiOpenEvidence out;
    out.containment_bound = spec.b * (spec.d + 2) + spec.c - 1;

    CutCandidate cc = classify_cut(wx, e, oracle_x);
    if (cc.metric_kind.cert != Cert::YesCertified)
        throw InvalidConfigError("quasi_open_check: e must be metric-certified");

    // phi(e) within the codomain window.
    std::vector<VertexId> image;
    {
        std::unordered_set<std::string> seen;
        auto rc = detail::resolve(wx, e, oracle_x);
        for (std::size_t i = 0; i < rc.in_e.size(); ++i) {
            if (!rc.in_e[i]) continue;
            VertexId y = spec.phi(VertexId(wx.token_at(static_cast<int>(i))));
            if (wy.contains(y) && seen.insert(y.token).second) image.push_back(y);
        }
    }
    if (image.empty()) {
        out.hint = "phi(e) missed the codomain window; explore deeper";
        return out;
    }

    auto fat = fatten(wy, image, {}, spec.d + 1);
    auto bnd = boundaries(wy, Carrier::explicit_finite(fat.vertices));
    out.theta_size = static_cast<int>(bnd.theta.size());
    out.theta_diameter = wy.set_diameter(bnd.theta);

    // Containment check from the Theorem-7 proof bound.
    for (const auto& y : bnd.theta) {
        VertexId px = spec.psi(y);
        int best = -1;
        for (const auto& t : cc.boundaries.theta) {
            auto d = detail::metric_distance(*spec.domain, px, t);
            if (d && (best < 0 || *d < best)) best = *d;
        }
        if (best < 0) continue;
        ++out.containment_checked;
        if (best > out.containment_bound) ++out.containment_violations;
    }

    if (out.theta_diameter.certainty == Certainty::Exact && out.containment_violations == 0 &&
        !bnd.theta.empty()) {
        out.verdict = QuasiOpenEvidence::Verdict::OpenEvidence;
    } else if (bnd.theta.empty()) {
        // The fattened image swallowed the whole explored window.
        out.hint = "empty boundary at depth " + std::to_string(depth) +
                   "; a deeper window is needed";
    } else {
        out.hint = "boundary diameter not Exact at depth " + std::to_string(depth);
    }
    return out;
}

// Lemma-11 transfer on samples: diam phi(A) <= a * diam A for sampled
// finite sets with Exact diameters.
struct Lemma11Report {
    int checked_sets = 0;
    int violations = 0;
};

inline Lemma11Report lemma11_check(const QuasiIsometrySpec& spec, const Window& window_x,
                                   int sets, std::uint64_t seed) {
    Lemma11Report rep;
    auto xs = window_x.vertices();
    CounterRng rng(seed);
    for (int i = 0; i < sets; ++i) {
        std::size_t size = 2 + rng.next_below(5);
        std::vector<VertexId> a;
        for (std::size_t j = 0; j < size; ++j) a.push_back(xs[rng.next_below(xs.size())]);
        int da = -1, dfa = -1;
        bool ok = true;
        for (std::size_t p = 0; p < a.size() && ok; ++p)
            for (std::size_t q = p + 1; q < a.size() && ok; ++q) {
                auto d1 = detail::metric_distance(*spec.domain, a[p], a[q]);
                auto d2 = detail::metric_distance(*spec.codomain, spec.phi(a[p]), spec.phi(a[q]));
                if (!d1 || !d2) {
                    ok = false;
                    break;
                }
                da = std::max(da, *d1);
                dfa = std::max(dfa, *d2);
            }
        if (!ok) continue;
        ++rep.checked_sets;
        if (dfa > spec.a * da) ++rep.violations;
    }
    return rep;
}

// ---- gallery presets -----------------------------------------------------------

struct QIPreset {
    QuasiIsometrySpec spec;
    gallery::GalleryGraph x, y;
    // Ray pairs for the end-correspondence check, with the expected metric
    // verdict in both spaces.
    std::vector<std::tuple<std::string, std::string, Verdict::Outcome>> ray_pairs;
};

inline QIPreset qi_preset(const std::string& name) {
    using gallery::make_ladder;
    using gallery::make_line;
    using gallery::make_tree;
    using gallery::make_tree_plus2;
    QIPreset p;
    if (name == "tree2-identity") {
        p.x = make_tree(0);
        p.y = make_tree_plus2(0);
        p.spec.name = name;
        p.spec.domain = p.x.graph;
        p.spec.codomain = p.y.graph;
        p.spec.phi = [](const VertexId& v) { return v; };
        p.spec.psi = [](const VertexId& v) { return v; };
        p.spec.a = 1;
        p.spec.b = 2;
        p.spec.c = 0;
        p.spec.d = 0;
        p.ray_pairs = {{"cone-1", "cone-2", Verdict::Outcome::Separated},
                       {"cone-1", "cone-3", Verdict::Outcome::Separated}};
        return p;
    }
    if (name == "ladder-line") {
        p.x = make_ladder();
        p.y = make_line();
        p.spec.name = name;
        p.spec.domain = p.x.graph;
        p.spec.codomain = p.y.graph;
        p.spec.phi = [](const VertexId& v) {
            auto colon = v.token.find(':');
            return VertexId(v.token.substr(0, colon));
        };
        p.spec.psi = [](const VertexId& v) { return VertexId(v.token + ":t"); };
        p.spec.a = 1;
        p.spec.b = 1;
        p.spec.c = 1;
        p.spec.d = 0;
        p.ray_pairs = {{"right-top", "left-top", Verdict::Outcome::Separated},
                       {"right-top", "right-bottom", Verdict::Outcome::EquivalentCertified}};
        return p;
    }
    throw InvalidConfigError("unknown qi preset: " + name);
}

} // namespace endscope
