// cuts.hpp — vertex/inner/edge boundaries and three-valued cut
// classification, star-ball scoring, infinite-diameter witnesses.
//
// Certification semantics (monotone under deeper exploration):
//   YesCertified  — established from Complete explored evidence, a
//                   structural bound, or the gallery oracle; never revoked.
//   NoCertified   — only from an exhaustive finite argument or the oracle.
//   Unknown       — depth-stamped; may later become certified.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endscope/carrier.hpp"
#include "endscope/errors.hpp"
#include "endscope/oracle.hpp"
#include "endscope/window.hpp"

namespace endscope {

struct KindVerdict {
    Cert cert = Cert::Unknown;
    int depth = 0; // window radius the judgement was made at
};

struct Boundaries {
    std::vector<VertexId> theta;       // vertices of e* adjacent to e
    std::vector<VertexId> inner_theta; // theta of e*, i.e. vertices of e adjacent to e*
    std::vector<std::pair<VertexId, VertexId>> delta; // crossing edges as (e-side, e*-side)
    bool delta_growing = false; // a frontier/truncated vertex could add edges
};

struct CutCandidate {
    Carrier carrier;
    Boundaries boundaries;
    KindVerdict vertex_kind, edge_kind, metric_kind;

    const KindVerdict& kind(Notion n) const {
        switch (n) {
            case Notion::VertexEnd: return vertex_kind;
            case Notion::EdgeEnd: return edge_kind;
            case Notion::MetricEnd: return metric_kind;
        }
        return vertex_kind;
    }
};

namespace detail {

struct ResolvedCarrier {
    std::vector<char> in_e;  // per window vertex index
    bool e_side_final = false;     // every true member of e is explored and Complete
    bool estar_side_final = false; // every true member of e* is explored and Complete
    std::size_t members_in_window = 0;
};

inline ResolvedCarrier resolve(const Window& wnd, const Carrier& carrier,
                               const GalleryOracle* oracle) {
    ResolvedCarrier r;
    r.in_e.assign(wnd.vertex_count(), 0);
    switch (carrier.kind) {
        case Carrier::Kind::ExplicitFinite: {
            bool all_complete = true;
            for (const auto& v : carrier.set) {
                int i = wnd.index_of(v); // throws NotExploredError when missing
                r.in_e[i] = 1;
                if (!wnd.complete_at(i)) all_complete = false;
            }
            r.e_side_final = all_complete;
            r.estar_side_final = wnd.fully_explored();
            break;
        }
        case Carrier::Kind::ComplementOfFinite: {
            std::vector<char> in_s(wnd.vertex_count(), 0);
            bool all_complete = true;
            for (const auto& v : carrier.set) {
                int i = wnd.index_of(v);
                in_s[i] = 1;
                if (!wnd.complete_at(i)) all_complete = false;
            }
            for (std::size_t i = 0; i < r.in_e.size(); ++i) r.in_e[i] = in_s[i] ? 0 : 1;
            r.estar_side_final = all_complete;
            r.e_side_final = wnd.fully_explored();
            break;
        }
        case Carrier::Kind::BallComplementComponent: {
            auto ball = wnd.ball(carrier.center, carrier.radius);
            auto lab = wnd.components_of_complement(ball);
            auto open_it = lab.open.find(carrier.fingerprint);
            if (open_it == lab.open.end())
                throw NotExploredError("ball component not present: " + carrier.describe());
            for (const auto& [v, fp] : lab.labels)
                if (fp == carrier.fingerprint) r.in_e[wnd.index_of(v)] = 1;
            r.e_side_final = !open_it->second; // Closed component = true component
            r.estar_side_final = wnd.fully_explored();
            break;
        }
        case Carrier::Kind::Shape: {
            if (!oracle)
                throw InvalidConfigError("shape carrier needs a gallery oracle: " +
                                         carrier.describe());
            for (std::size_t i = 0; i < r.in_e.size(); ++i) {
                auto m = oracle->shape_contains(carrier, VertexId(wnd.token_at(static_cast<int>(i))));
                if (!m)
                    throw InvalidConfigError("oracle does not know shape: " + carrier.describe());
                r.in_e[i] = *m ? 1 : 0;
            }
            // Shapes denote structurally defined (usually infinite) sets;
            // window-side finality would need the oracle anyway.
            r.e_side_final = false;
            r.estar_side_final = false;
            break;
        }
    }
    for (char c : r.in_e) r.members_in_window += c;
    return r;
}

} // namespace detail

// θe, Iθe and δe restricted to explored adjacency. δ (and with it θ/Iθ) is
// flagged GrowingWithBudget unless one side of the cut is fully explored
// and Complete — every crossing edge is incident to that side, so nothing
// new can appear at greater depth.
inline Boundaries boundaries(const Window& wnd, const Carrier& carrier,
                             const GalleryOracle* oracle = nullptr) {
    auto rc = detail::resolve(wnd, carrier, oracle);
    Boundaries b;
    std::vector<char> is_theta(wnd.vertex_count(), 0), is_inner(wnd.vertex_count(), 0);
    for (std::size_t i = 0; i < rc.in_e.size(); ++i) {
        if (!rc.in_e[i]) continue;
        for (int j : wnd.adjacency_at(static_cast<int>(i))) {
            if (rc.in_e[j]) continue;
            is_theta[j] = 1;
            is_inner[i] = 1;
            b.delta.emplace_back(VertexId(wnd.token_at(static_cast<int>(i))),
                                 VertexId(wnd.token_at(j)));
        }
    }
    for (std::size_t i = 0; i < is_theta.size(); ++i) {
        if (is_theta[i]) b.theta.emplace_back(wnd.token_at(static_cast<int>(i)));
        if (is_inner[i]) b.inner_theta.emplace_back(wnd.token_at(static_cast<int>(i)));
    }
    std::sort(b.theta.begin(), b.theta.end());
    std::sort(b.inner_theta.begin(), b.inner_theta.end());
    std::sort(b.delta.begin(), b.delta.end(), [](const auto& x, const auto& y) {
        return std::tie(x.first.token, x.second.token) < std::tie(y.first.token, y.second.token);
    });
    b.delta_growing = !(rc.e_side_final || rc.estar_side_final);
    return b;
}

// Classifies e as vertex-, edge- and metric-cut with three-valued certainty.
//
// Window certification: when one side of the cut is fully explored and
// Complete, every crossing edge is known, so θe and δe are final and finite
// (vertex and edge Yes); θe finite in a connected graph has finite diameter
// (metric Yes). Ball complement components get metric Yes structurally:
// their true θ lies inside the ball, so diam θ <= 2·radius; when the whole
// ball is certified (membership exact, members Complete and finite) θ and δ
// are final too. Everything else needs the oracle; NoCertified only ever
// comes from the oracle or an exhaustively explored graph.
inline CutCandidate classify_cut(const Window& wnd, const Carrier& carrier,
                                 const GalleryOracle* oracle = nullptr) {
    auto rc = detail::resolve(wnd, carrier, oracle);
    if (rc.members_in_window == 0 && carrier.kind == Carrier::Kind::ExplicitFinite &&
        carrier.set.empty())
        throw InvalidConfigError("classify_cut: cuts are nonempty sets");

    CutCandidate cc;
    cc.carrier = carrier;
    cc.boundaries = boundaries(wnd, carrier, oracle);
    const int at = wnd.radius();
    cc.vertex_kind = {Cert::Unknown, at};
    cc.edge_kind = {Cert::Unknown, at};
    cc.metric_kind = {Cert::Unknown, at};

    if (rc.e_side_final || rc.estar_side_final) {
        cc.vertex_kind.cert = Cert::YesCertified;
        cc.edge_kind.cert = Cert::YesCertified;
        cc.metric_kind.cert = Cert::YesCertified;
    }

    if (carrier.kind == Carrier::Kind::BallComplementComponent) {
        // True θ is contained in the (true) ball: diam θ <= 2·radius.
        if (wnd.graph().has_exact_metric() ||
            wnd.bfs_from(wnd.index_of(carrier.center)).complete_prefix + 1 >= carrier.radius)
            cc.metric_kind.cert = Cert::YesCertified;
        if (wnd.ball_certified(carrier.center, carrier.radius)) {
            cc.vertex_kind.cert = Cert::YesCertified;
            cc.edge_kind.cert = Cert::YesCertified;
        }
    }

    if (oracle) {
        if (auto truth = oracle->certify(carrier)) {
            auto merge = [](KindVerdict& k, Cert oracle_cert) {
                if (oracle_cert != Cert::Unknown) k.cert = oracle_cert;
            };
            merge(cc.vertex_kind, truth->vertex);
            merge(cc.edge_kind, truth->edge);
            merge(cc.metric_kind, truth->metric);
        }
    }

    // Hierarchy closure: |θe| <= |δe| makes every edge-cut a vertex-cut, and
    // a finite θ in a connected graph has finite diameter.
    if (cc.edge_kind.cert == Cert::YesCertified) cc.vertex_kind.cert = Cert::YesCertified;
    if (cc.vertex_kind.cert == Cert::YesCertified) cc.metric_kind.cert = Cert::YesCertified;
    if (cc.metric_kind.cert == Cert::NoCertified) cc.vertex_kind.cert = Cert::NoCertified;
    if (cc.vertex_kind.cert == Cert::NoCertified) cc.edge_kind.cert = Cert::NoCertified;
    return cc;
}

// Intersection of carriers, where it stays representable. Used by the
// Lemma-2 closure checks.
inline std::optional<Carrier> intersect_carriers(const Carrier& a, const Carrier& b) {
    using K = Carrier::Kind;
    auto sorted = [](std::vector<VertexId> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (a.kind == K::ExplicitFinite && b.kind == K::ExplicitFinite) {
        auto sa = sorted(a.set), sb = sorted(b.set);
        std::vector<VertexId> out;
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
        return Carrier::explicit_finite(std::move(out));
    }
    if (a.kind == K::ComplementOfFinite && b.kind == K::ComplementOfFinite) {
        auto sa = sorted(a.set), sb = sorted(b.set);
        std::vector<VertexId> out;
        std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
        return Carrier::complement_of_finite(std::move(out));
    }
    if (a.kind == K::ExplicitFinite && b.kind == K::ComplementOfFinite) {
        auto sa = sorted(a.set), sb = sorted(b.set);
        std::vector<VertexId> out;
        std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
        return Carrier::explicit_finite(std::move(out));
    }
    if (a.kind == K::ComplementOfFinite && b.kind == K::ExplicitFinite)
        return intersect_carriers(b, a);
    return std::nullopt;
}

// ---- star balls -----------------------------------------------------------

struct StarReport {
    VertexId center;
    int radius = 0;
    // sup of Exact diameters over Closed (certified finite) components of
    // the ball complement; a sound lower bound for the true supremum.
    int score = 0;
    int open_component_count = 0;
    int closed_component_count = 0;
    enum class Verdict { StarBallEvidence, RefutedAtDepth, Unknown };
    Verdict verdict = Verdict::Unknown;
    int depth = 0;
};

struct StarBallPolicy {
    // Evidence once the score reaches window_radius - ball_radius - slack;
    // the bar keeps growing across depths, so bounded graphs fall off.
    int slack = 2;
};

inline StarReport star_ball_score(const Window& wnd, const VertexId& center, int radius,
                                  StarBallPolicy policy = {}) {
    if (radius > wnd.radius())
        throw InvalidConfigError("star_ball_score: ball radius exceeds window radius");
    StarReport rep;
    rep.center = center;
    rep.radius = radius;
    rep.depth = wnd.radius();
    auto ball = wnd.ball(center, radius);
    auto lab = wnd.components_of_complement(ball);
    for (const auto& [fp, open] : lab.open) {
        if (open) {
            ++rep.open_component_count;
            continue;
        }
        ++rep.closed_component_count;
        auto de = wnd.set_diameter(lab.members.at(fp));
        if (de.certainty == Certainty::Exact) rep.score = std::max(rep.score, de.value);
    }
    const int threshold = std::max(1, wnd.radius() - radius - policy.slack);
    if (rep.score >= threshold) {
        rep.verdict = StarReport::Verdict::StarBallEvidence;
    } else if (wnd.fully_explored()) {
        rep.verdict = StarReport::Verdict::RefutedAtDepth; // sup is exactly rep.score, finite
    } else if (rep.closed_component_count == 0) {
        rep.verdict = StarReport::Verdict::RefutedAtDepth; // C0 empty at this depth
    } else {
        rep.verdict = StarReport::Verdict::Unknown;
    }
    return rep;
}

// ---- infinite-diameter witnesses (the Lemma-1 dichotomy) -------------------

struct DiameterWitness {
    enum class Kind { MetricRayPrefix, StarBallWitness, BoundedCertified, Unknown };
    Kind kind = Kind::Unknown;
    std::vector<VertexId> path; // MetricRayPrefix: strictly increasing checkpoints
    std::optional<StarReport> star;
    int bounded_diameter = 0; // BoundedCertified
    int depth = 0;
};

// Searches, in this order: an escaping geodesic prefix that reaches the
// requested depth and can still continue (its endpoint is not Complete);
// a star ball among K(root, r), r <= depth; full exploration; Unknown.
inline DiameterWitness infinite_diameter_witness(std::shared_ptr<const LazyGraph> graph, int depth,
                                                 BudgetSchedule budget = default_budget()) {
    if (depth < 1) throw InvalidConfigError("infinite_diameter_witness: depth must be >= 1");
    Window wnd = explore(graph, depth, std::move(budget));
    DiameterWitness w;
    w.depth = depth;

    // 1) A geodesic prefix to distance == depth whose endpoint exploration
    //    has not exhausted: evidence for a ray of unbounded diameter. The
    //    true distances along such a geodesic are exactly 0..depth.
    std::optional<VertexId> endpoint;
    for (const auto& v : wnd.vertices()) {
        if (wnd.is_complete(v)) continue;
        auto d = wnd.distance(wnd.origin(), v);
        if (d.certainty == Certainty::Exact && d.value == depth)
            if (!endpoint || v < *endpoint) endpoint = v;
    }
    if (endpoint) {
        w.kind = DiameterWitness::Kind::MetricRayPrefix;
        w.path = wnd.window_geodesic(wnd.origin(), *endpoint);
        return w;
    }

    // 2) Star-ball evidence around the root.
    for (int r = 0; r <= depth; ++r) {
        auto rep = star_ball_score(wnd, wnd.origin(), r);
        if (rep.verdict == StarReport::Verdict::StarBallEvidence) {
            w.kind = DiameterWitness::Kind::StarBallWitness;
            w.star = rep;
            return w;
        }
    }

    // 3) Fully explored graphs have a certified diameter.
    if (wnd.fully_explored()) {
        auto de = wnd.set_diameter(wnd.vertices());
        if (de.certainty == Certainty::Exact) {
            w.kind = DiameterWitness::Kind::BoundedCertified;
            w.bounded_diameter = de.value;
            return w;
        }
    }
    w.kind = DiameterWitness::Kind::Unknown;
    return w;
}

} // namespace endscope
