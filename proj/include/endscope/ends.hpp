// ends.hpp — tail containment, separation verdicts, end approximants,
// sequence classification and end counting.
//
// All judgements are depth-stamped and monotone: Separated and
// EquivalentCertified outcomes never change under deeper exploration,
// NotSeparatedAtDepth(d) can only resolve at depth > d.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "endscope/cuts.hpp"
#include "endscope/maxflow.hpp"
#include "endscope/oracle.hpp"
#include "endscope/rays.hpp"
#include "endscope/window.hpp"

namespace endscope {

// ---- tail containment -------------------------------------------------------

struct TailResult {
    enum class Value { Yes, No, Unknown };
    Value value = Value::Unknown;
    int from_index = 0; // Yes: all inspected indices >= from_index lie in e
    int depth = 0;
};

namespace detail {

// Membership of a single vertex in a carrier, evaluated against the window
// (and oracle for shapes). nullopt when the vertex is outside the window
// and the carrier has no exact membership.
inline std::optional<bool> carrier_contains(const Window& wnd, const Carrier& c,
                                            const VertexId& v, const GalleryOracle* oracle) {
    switch (c.kind) {
        case Carrier::Kind::ExplicitFinite:
            return std::find(c.set.begin(), c.set.end(), v) != c.set.end();
        case Carrier::Kind::ComplementOfFinite:
            return std::find(c.set.begin(), c.set.end(), v) == c.set.end();
        case Carrier::Kind::Shape:
            if (oracle) return oracle->shape_contains(c, v);
            return std::nullopt;
        case Carrier::Kind::BallComplementComponent: {
            if (!wnd.contains(v)) return std::nullopt;
            auto ball = wnd.ball(c.center, c.radius);
            auto lab = wnd.components_of_complement(ball);
            auto it = lab.labels.find(v);
            if (it == lab.labels.end()) return false; // v is inside the ball
            return it->second == c.fingerprint;
        }
    }
    return std::nullopt;
}

// Whether membership in the carrier is stable under deeper exploration.
inline bool carrier_stable(const Window& wnd, const Carrier& c, const GalleryOracle* oracle) {
    switch (c.kind) {
        case Carrier::Kind::ExplicitFinite:
        case Carrier::Kind::ComplementOfFinite:
            return true;
        case Carrier::Kind::Shape:
            return oracle != nullptr; // oracle membership is exact by contract
        case Carrier::Kind::BallComplementComponent: {
            auto ball = wnd.ball(c.center, c.radius);
            auto lab = wnd.components_of_complement(ball);
            auto it = lab.open.find(c.fingerprint);
            if (it != lab.open.end() && !it->second) return true; // Closed
            return oracle && oracle->ball_components_stable(c.center, c.radius);
        }
    }
    return false;
}

} // namespace detail

// Decides whether all but finitely many ray vertices lie in e.
//
// Finite carriers (explicit sets, Closed components) give a certified No:
// a ray's vertices are pairwise distinct, so a finite set meets at most
// |e| of them. Complement-of-finite carriers give a certified Yes the same
// way. Stable carriers (gallery shapes, oracle-stable components) are
// judged from the inspected prefix, with the oracle's eventual-membership
// answer taking precedence; anything else is Unknown at depth.
inline TailResult tail_in(Ray& ray, const Carrier& carrier, const Window& wnd,
                          const GalleryOracle* oracle = nullptr) {
    TailResult out;
    out.depth = wnd.radius();
    const int want = std::max(ray.verified_prefix, wnd.radius() + 1);
    verify_ray(ray, wnd.graph(), want);
    const int n = ray.verified_prefix;

    // Certified answers from finiteness.
    if (carrier.kind == Carrier::Kind::ExplicitFinite) {
        out.value = TailResult::Value::No;
        return out;
    }
    if (carrier.kind == Carrier::Kind::ComplementOfFinite) {
        int last_out = -1;
        for (int i = 0; i < n; ++i) {
            auto m = detail::carrier_contains(wnd, carrier, ray.at(i), oracle);
            if (m && !*m) last_out = i;
        }
        out.value = TailResult::Value::Yes;
        out.from_index = last_out + 1;
        return out;
    }
    if (carrier.kind == Carrier::Kind::BallComplementComponent) {
        auto ball = wnd.ball(carrier.center, carrier.radius);
        auto lab = wnd.components_of_complement(ball);
        auto it = lab.open.find(carrier.fingerprint);
        if (it != lab.open.end() && !it->second) {
            out.value = TailResult::Value::No; // Closed components are finite
            return out;
        }
    }

    if (oracle) {
        if (auto ev = oracle->ray_eventually_in(ray, carrier)) {
            if (*ev) {
                int last_out = -1;
                for (int i = 0; i < n; ++i) {
                    auto m = detail::carrier_contains(wnd, carrier, ray.at(i), oracle);
                    if (m && !*m) last_out = i;
                }
                out.value = TailResult::Value::Yes;
                out.from_index = last_out + 1;
            } else {
                out.value = TailResult::Value::No;
            }
            return out;
        }
    }

    if (!detail::carrier_stable(wnd, carrier, oracle)) return out; // Unknown

    // Inspected-prefix judgement over a stable carrier: look at the last
    // quarter of the verified prefix.
    const int tail_start = n - std::max(1, n / 4);
    bool tail_all_in = true, tail_all_out = true;
    int last_out = -1;
    int known = 0;
    for (int i = 0; i < n; ++i) {
        auto m = detail::carrier_contains(wnd, carrier, ray.at(i), oracle);
        if (!m) continue;
        ++known;
        if (!*m) last_out = i;
        if (i >= tail_start) {
            if (*m) tail_all_out = false;
            else tail_all_in = false;
        }
    }
    if (known == 0) return out;
    if (tail_all_in) {
        out.value = TailResult::Value::Yes;
        out.from_index = last_out + 1;
    } else if (tail_all_out) {
        out.value = TailResult::Value::No;
    }
    return out;
}

// ---- separation verdicts ----------------------------------------------------

struct Verdict {
    Notion notion = Notion::VertexEnd;
    enum class Outcome { Separated, EquivalentCertified, NotSeparatedAtDepth, Unknown };
    Outcome outcome = Outcome::Unknown;
    int depth = 0;
    std::optional<CutCandidate> certificate; // Separated
    std::string note;                        // oracle tag / passthrough note
};

inline const char* to_string(Verdict::Outcome o) {
    switch (o) {
        case Verdict::Outcome::Separated: return "Separated";
        case Verdict::Outcome::EquivalentCertified: return "EquivalentCertified";
        case Verdict::Outcome::NotSeparatedAtDepth: return "NotSeparatedAtDepth";
        case Verdict::Outcome::Unknown: return "Unknown";
    }
    return "?";
}

namespace detail {

inline std::optional<int> anchor_index(const Ray& ray, const Window& wnd) {
    for (int i = ray.verified_prefix - 1; i >= 0; --i)
        if (wnd.contains(ray.generator(i))) return i;
    return std::nullopt;
}

// r1's tail lies in e and r2's tail lies in e*.
inline bool tails_separated(Ray& r1, Ray& r2, const Carrier& c, const Window& wnd,
                            const GalleryOracle* oracle) {
    if (tail_in(r1, c, wnd, oracle).value != TailResult::Value::Yes) return false;
    // Positive containment of r2 in the complement.
    if (oracle) {
        if (auto ev = oracle->ray_eventually_in(r2, c)) return !*ev;
        if (auto comp = oracle->complement_shape(c))
            if (tail_in(r2, *comp, wnd, oracle).value == TailResult::Value::Yes) return true;
    }
    if (c.kind == Carrier::Kind::ComplementOfFinite)
        return false; // every ray tail lies in a cofinite set; never separates
    if (c.kind == Carrier::Kind::BallComplementComponent) {
        // r2's own component at the same ball is disjoint from c.
        auto a2 = anchor_index(r2, wnd);
        if (!a2) return false;
        auto ball = wnd.ball(c.center, c.radius);
        auto lab = wnd.components_of_complement(ball);
        auto it = lab.labels.find(r2.generator(*a2));
        if (it == lab.labels.end() || it->second == c.fingerprint) return false;
        Carrier other = Carrier::ball_component(c.center, c.radius, it->second);
        return tail_in(r2, other, wnd, oracle).value == TailResult::Value::Yes;
    }
    if (c.kind == Carrier::Kind::Shape) {
        // Without a complement shape, a certified-stable No is enough only
        // when the oracle judged it; the inspected-prefix No is not a
        // positive containment in e*, so stay conservative.
        return false;
    }
    return false;
}

inline bool same_inspected_prefix(const Ray& a, const Ray& b) {
    int n = std::min(a.verified_prefix, b.verified_prefix);
    if (n == 0) return false;
    for (int i = 0; i < n; ++i)
        if (a.generator(i) != b.generator(i)) return false;
    return true;
}

} // namespace detail

// Searches candidate cuts — ball complement components around the root for
// every notion, oracle shape candidates, and (edge notion) window min-cut
// sides recognized by the oracle — and returns the first certified
// separation. EquivalentCertified comes from the oracle or from literally
// identical rays; otherwise the rays are NotSeparatedAtDepth.
inline Verdict separation_verdict(Ray& r1, Ray& r2, Notion notion, int depth,
                                  std::shared_ptr<const LazyGraph> graph,
                                  const GalleryOracle* oracle = nullptr,
                                  BudgetSchedule budget = default_budget()) {
    if (depth < 1) throw InvalidConfigError("separation_verdict: depth must be >= 1");
    Window wnd = explore(graph, depth, budget);
    verify_ray(r1, *graph, depth + 1);
    verify_ray(r2, *graph, depth + 1);
    if (notion == Notion::MetricEnd) {
        compute_metricity(r1, *graph, depth);
        compute_metricity(r2, *graph, depth);
        for (const Ray* r : {&r1, &r2})
            if (r->metricity.kind != Metricity::Kind::MetricRayEvidence)
                throw NotMetricRayError(
                    "metric separation needs metric rays; '" +
                    (r->name.empty() ? std::string("<anonymous>") : r->name) +
                    "' carries no metric-ray evidence");
    }

    Verdict v;
    v.notion = notion;
    v.depth = depth;

    if (r1.name.empty() ? detail::same_inspected_prefix(r1, r2) : r1.name == r2.name) {
        v.outcome = Verdict::Outcome::EquivalentCertified;
        v.note = "identical rays";
        return v;
    }

    std::vector<Carrier> candidates;
    auto a1 = detail::anchor_index(r1, wnd);
    auto a2 = detail::anchor_index(r2, wnd);
    if (a1 && a2) {
        for (int k = 0; k < depth; ++k) {
            auto ball = wnd.ball(wnd.origin(), k);
            auto lab = wnd.components_of_complement(ball);
            auto i1 = lab.labels.find(r1.generator(*a1));
            auto i2 = lab.labels.find(r2.generator(*a2));
            if (i1 == lab.labels.end() || i2 == lab.labels.end()) continue;
            if (i1->second == i2->second) continue;
            candidates.push_back(Carrier::ball_component(wnd.origin(), k, i1->second));
            candidates.push_back(Carrier::ball_component(wnd.origin(), k, i2->second));
        }
    }
    if (oracle) {
        auto shapes = oracle->candidate_cuts(notion, depth);
        candidates.insert(candidates.end(), shapes.begin(), shapes.end());
    }
    if (notion == Notion::EdgeEnd && oracle && a1 && a2) {
        auto mc = window_min_edge_cut(wnd, r1.generator(*a1), r2.generator(*a2));
        if (auto shape = oracle->match_shape(wnd, mc.source_side)) candidates.push_back(*shape);
    }

    for (const Carrier& c : candidates) {
        CutCandidate cc;
        try {
            cc = classify_cut(wnd, c, oracle);
        } catch (const Error&) {
            continue; // candidate not resolvable at this depth
        }
        if (cc.kind(notion).cert != Cert::YesCertified) continue;
        if (detail::tails_separated(r1, r2, c, wnd, oracle) ||
            detail::tails_separated(r2, r1, c, wnd, oracle)) {
            v.outcome = Verdict::Outcome::Separated;
            v.certificate = cc;
            return v;
        }
    }

    if (oracle) {
        auto eq = oracle->equivalent(r1, r2, notion);
        if (eq && *eq) {
            v.outcome = Verdict::Outcome::EquivalentCertified;
            v.note = "oracle";
            return v;
        }
    }
    v.outcome = Verdict::Outcome::NotSeparatedAtDepth;
    return v;
}

// Lemma-7 coarsening: an edge-cut certificate is a vertex-cut certificate.
inline Verdict coarsen(const Verdict& edge_verdict) {
    Verdict v = edge_verdict;
    if (edge_verdict.notion != Notion::EdgeEnd) {
        v.note = "coarsen: input was not an edge verdict; passthrough";
        return v;
    }
    if (edge_verdict.outcome != Verdict::Outcome::Separated) {
        v.note = "coarsen: non-separated input; passthrough";
        return v;
    }
    v.notion = Notion::VertexEnd;
    v.note = "coarsened from edge certificate";
    return v;
}

// ---- end approximants (the Lemma-3 descent) ---------------------------------

struct EndApproximant {
    struct Link {
        int radius = 0;
        std::string fingerprint;
        bool open = true;
    };
    std::vector<Link> chain; // strictly increasing radii, nested components
    std::vector<VertexId> witness_path;
    int depth = 0;
};

namespace detail {

// Builds the witness path through e_r \ e_{r+1}: start at an inner-boundary
// vertex of the first component, walk inside the current component until
// first entering the next one, repeat.
inline std::vector<VertexId> witness_through_chain(
    const Window& wnd, const std::vector<std::vector<VertexId>>& comps) {
    if (comps.empty()) return {};
    auto member_set = [&](const std::vector<VertexId>& vs) {
        std::vector<char> in(wnd.vertex_count(), 0);
        for (const auto& v : vs) in[wnd.index_of(v)] = 1;
        return in;
    };
    std::vector<VertexId> path;
    auto cur = member_set(comps[0]);
    // Entry vertex: minimal-token member of the first component adjacent to
    // its outside (the inner boundary).
    std::optional<int> start;
    for (const auto& v : comps[0]) {
        int i = wnd.index_of(v);
        for (int j : wnd.adjacency_at(i))
            if (!cur[j]) {
                if (!start || wnd.token_at(i) < wnd.token_at(*start)) start = i;
                break;
            }
    }
    if (!start)
        throw ClassificationRedirect("end_approximant: component has no inner boundary");
    int at = *start;
    path.emplace_back(wnd.token_at(at));
    for (std::size_t step = 1; step < comps.size(); ++step) {
        auto next = member_set(comps[step]);
        // BFS inside the current component until the first next-component
        // vertex is reached; the prefix stays in e_r \ e_{r+1}.
        std::vector<int> parent(wnd.vertex_count(), -2);
        std::deque<int> queue{at};
        parent[at] = -1;
        int entry = -1;
        while (!queue.empty() && entry < 0) {
            int v = queue.front();
            queue.pop_front();
            if (next[v]) {
                entry = v;
                break;
            }
            for (int j : wnd.adjacency_at(v)) {
                if (!cur[j] || parent[j] != -2) continue;
                parent[j] = v;
                queue.push_back(j);
            }
        }
        if (entry < 0)
            throw ClassificationRedirect("end_approximant: chain segment not connected in window");
        std::vector<int> seg;
        for (int v = entry; v != at && v != -1; v = parent[v]) seg.push_back(v);
        std::reverse(seg.begin(), seg.end());
        for (int v : seg) path.emplace_back(wnd.token_at(v));
        at = entry;
        cur = std::move(next);
    }
    return path;
}

} // namespace detail

// The nested component chain a ray's tail selects at radii 1..depth, plus a
// witness path built segment by segment through consecutive differences.
inline EndApproximant end_approximant(Ray& ray, std::shared_ptr<const LazyGraph> graph, int depth,
                                      BudgetSchedule budget = default_budget()) {
    if (depth < 1) throw InvalidConfigError("end_approximant: depth must be >= 1");
    Window wnd = explore(graph, depth, budget);
    verify_ray(ray, *graph, std::max(ray.verified_prefix, 4 * depth + 4));

    EndApproximant out;
    out.depth = depth;
    std::vector<std::vector<VertexId>> comps;
    std::string prev_fp;
    std::vector<char> prev_members;
    for (int r = 0; r < depth; ++r) {
        auto ball = wnd.ball(wnd.origin(), r);
        auto lab = wnd.components_of_complement(ball);
        // First ray index after which the inspected prefix stays outside the ball.
        int escape_at = -1;
        for (int i = ray.verified_prefix - 1; i >= 0; --i) {
            VertexId v = ray.at(i);
            if (!wnd.contains(v)) continue;
            if (lab.labels.count(v) == 0) { // inside the ball
                escape_at = i;
                break;
            }
        }
        int pick = escape_at + 1;
        VertexId anchor;
        bool found = false;
        for (int i = pick; i < ray.verified_prefix; ++i) {
            VertexId v = ray.at(i);
            if (wnd.contains(v) && lab.labels.count(v)) {
                anchor = v;
                found = true;
                break;
            }
        }
        if (!found)
            throw ClassificationRedirect(
                "end_approximant: ray does not escape K(root," + std::to_string(r) +
                ") within the verified prefix; classify_sequence applies");
        const std::string fp = lab.labels.at(anchor);
        const auto& members = lab.members.at(fp);
        std::vector<char> mem(wnd.vertex_count(), 0);
        for (const auto& m : members) mem[wnd.index_of(m)] = 1;
        if (r > 0) {
            for (std::size_t i = 0; i < mem.size(); ++i)
                if (mem[i] && !prev_members[i])
                    throw ClassificationRedirect("end_approximant: chain not nested at radius " +
                                                 std::to_string(r));
        }
        out.chain.push_back({r, fp, lab.open.at(fp)});
        comps.push_back(members);
        prev_fp = fp;
        prev_members = std::move(mem);
    }
    out.witness_path = detail::witness_through_chain(wnd, comps);
    return out;
}

// ---- Theorem-5 sequence classification --------------------------------------

struct SequenceElement {
    bool is_vertex = true;
    VertexId vertex;
    std::string end_token; // for improper-end elements in mixed sequences

    static SequenceElement of(VertexId v) { return {true, std::move(v), {}}; }
    static SequenceElement end(std::string token) { return {false, {}, std::move(token)}; }
};

struct SequenceClassification {
    enum class Case { VertexLimit, LocalEnd, ProperMetricEnd, StarEnd };
    Case kind = Case::VertexLimit;
    VertexId limit_vertex;                    // VertexLimit
    std::optional<EndApproximant> approximant; // ProperMetricEnd
    int depth = 0;
    std::string evidence;
};

inline const char* to_string(SequenceClassification::Case c) {
    using Case = SequenceClassification::Case;
    switch (c) {
        case Case::VertexLimit: return "VertexLimit";
        case Case::LocalEnd: return "LocalEnd";
        case Case::ProperMetricEnd: return "ProperMetricEnd";
        case Case::StarEnd: return "StarEnd";
    }
    return "?";
}

struct ClassifyOptions {
    int inspect_factor = 8;     // inspected prefix length = factor*depth + 16
    int multiplicity_limit = 0; // 0 = use depth
};

// Decides which of the four convergence cases the inspected prefix
// supports. Only vertex elements contribute geometry; improper-end tokens
// in mixed sequences are passed over.
inline SequenceClassification classify_sequence(
    const std::function<SequenceElement(int)>& seq, std::shared_ptr<const LazyGraph> graph,
    int depth, BudgetSchedule budget = default_budget(), ClassifyOptions opts = {}) {
    if (depth < 1) throw InvalidConfigError("classify_sequence: depth must be >= 1");
    Window wnd = explore(graph, depth, budget);
    const int inspect = opts.inspect_factor * depth + 16;
    const int mult_limit = opts.multiplicity_limit > 0 ? opts.multiplicity_limit : depth;

    struct Item {
        int index;
        VertexId v;
    };
    std::vector<Item> items;
    for (int i = 0; i < inspect; ++i) {
        SequenceElement el = seq(i);
        if (el.is_vertex) items.push_back({i, el.vertex});
    }
    SequenceClassification out;
    out.depth = depth;
    if (items.empty())
        throw ConflictingEvidenceError("classify_sequence: no vertex elements inspected");

    // Case 1: eventually constant, or a vertex with unbounded multiplicity.
    std::unordered_map<std::string, int> mult;
    for (const auto& it : items) ++mult[it.v.token];
    {
        const VertexId& last = items.back().v;
        int const_tail = 0;
        for (auto it = items.rbegin(); it != items.rend() && it->v == last; ++it) ++const_tail;
        if (const_tail >= std::max(4, static_cast<int>(items.size()) / 2)) {
            out.kind = SequenceClassification::Case::VertexLimit;
            out.limit_vertex = last;
            out.evidence = "constant on the inspected tail";
            return out;
        }
        for (const auto& [tok, m] : mult)
            if (m > mult_limit) {
                out.kind = SequenceClassification::Case::VertexLimit;
                out.limit_vertex = VertexId(tok);
                out.evidence = "multiplicity " + std::to_string(m) + " exceeds limit " +
                               std::to_string(mult_limit);
                return out;
            }
    }

    // Distances from the root: exact metric when available, window BFS as a
    // fallback for explored vertices; unexplored vertices without a metric
    // cannot be located.
    auto dist_to_root = [&](const VertexId& v) -> std::optional<int> {
        if (wnd.graph().has_exact_metric())
            if (auto m = wnd.graph().exact_metric(wnd.origin(), v)) return m;
        if (wnd.contains(v)) return wnd.distance(wnd.origin(), v).value;
        return std::nullopt;
    };

    // Case 2: cofinitely many inspected elements in some ball K(root,k).
    const int half = static_cast<int>(items.size()) / 2;
    for (int k = 1; k <= depth; ++k) {
        int last_outside = -1;
        bool all_known = true;
        for (std::size_t idx = 0; idx < items.size(); ++idx) {
            auto d = dist_to_root(items[idx].v);
            if (!d) {
                all_known = false;
                break;
            }
            if (*d > k) last_outside = static_cast<int>(idx);
        }
        if (!all_known) break;
        if (last_outside < half) {
            out.kind = SequenceClassification::Case::LocalEnd;
            out.evidence = "inspected tail lies in K(root," + std::to_string(k) +
                           ") with bounded multiplicity";
            return out;
        }
    }

    // Escaping: for each radius with enough located elements to be
    // informative, decide whether one component dominates (case 3) or the
    // elements disperse over many components (case 4).
    bool single_everywhere = true, dispersed_everywhere = true;
    int informative_radii = 0;
    for (int r = 0; r < depth; ++r) {
        auto ball = wnd.ball(wnd.origin(), r);
        auto lab = wnd.components_of_complement(ball);
        std::map<std::string, int> per_comp;
        int located = 0;
        std::string last_comp;
        for (const auto& it : items) {
            if (!wnd.contains(it.v)) continue;
            auto li = lab.labels.find(it.v);
            if (li == lab.labels.end()) continue; // inside the ball
            ++located;
            ++per_comp[li->second];
            last_comp = li->second;
        }
        if (located < 4) continue; // too few located elements to judge
        ++informative_radii;
        int max_per = 0;
        std::string max_comp;
        for (const auto& [fp, cnt] : per_comp)
            if (cnt > max_per) {
                max_per = cnt;
                max_comp = fp;
            }
        const bool single = max_comp == last_comp && max_per >= located - located / 4;
        const bool dispersed = !single && per_comp.size() >= 2 && max_per <= mult_limit;
        if (!single) single_everywhere = false;
        if (!dispersed) dispersed_everywhere = false;
    }
    if (informative_radii == 0)
        throw ConflictingEvidenceError(
            "classify_sequence: escaping sequence but too few elements located in the window at "
            "depth " +
            std::to_string(depth));

    if (single_everywhere) {
        // Case 3: the chain the located elements select at each radius.
        EndApproximant app;
        app.depth = depth;
        std::vector<std::vector<VertexId>> comps;
        for (int r = 0; r < depth; ++r) {
            auto ball = wnd.ball(wnd.origin(), r);
            auto lab = wnd.components_of_complement(ball);
            std::string fp;
            for (auto it = items.rbegin(); it != items.rend(); ++it) {
                if (!wnd.contains(it->v)) continue;
                auto li = lab.labels.find(it->v);
                if (li != lab.labels.end()) {
                    fp = li->second;
                    break;
                }
            }
            if (fp.empty()) continue;
            app.chain.push_back({r, fp, lab.open.at(fp)});
            comps.push_back(lab.members.at(fp));
        }
        if (!comps.empty()) app.witness_path = detail::witness_through_chain(wnd, comps);
        out.kind = SequenceClassification::Case::ProperMetricEnd;
        out.approximant = std::move(app);
        out.evidence = "single escaping component chain";
        return out;
    }

    if (dispersed_everywhere) {
        // Case 4 needs star-cut evidence at some radius.
        for (int r = 0; r <= depth; ++r) {
            auto rep = star_ball_score(wnd, wnd.origin(), r);
            if (rep.verdict == StarReport::Verdict::StarBallEvidence) {
                out.kind = SequenceClassification::Case::StarEnd;
                out.evidence = "escaping with <= " + std::to_string(mult_limit) +
                               " elements per component; star evidence at radius " +
                               std::to_string(r);
                return out;
            }
        }
        throw ConflictingEvidenceError(
            "classify_sequence: dispersed escape but no star-cut evidence at depth " +
            std::to_string(depth));
    }

    throw ConflictingEvidenceError(
        "classify_sequence: conflicting evidence at depth " + std::to_string(depth) +
        " (escaping but neither a single-component chain nor dispersed)");
}

// ---- end counting ------------------------------------------------------------

struct EndCount {
    Notion notion = Notion::VertexEnd;
    int lower_bound = 0;
    enum class Status { StabilizedCertified, GrowingLowerBound, InfiniteCertified };
    Status status = Status::GrowingLowerBound;
    int depth = 0;
};

inline const char* to_string(EndCount::Status s) {
    switch (s) {
        case EndCount::Status::StabilizedCertified: return "StabilizedCertified";
        case EndCount::Status::GrowingLowerBound: return "GrowingLowerBound";
        case EndCount::Status::InfiniteCertified: return "InfiniteCertified";
    }
    return "?";
}

// lower_bound is the size of the largest family of pairwise-Separated
// representatives found at this depth; the status is certified only against
// the registry's ground truth (truth: count, or -1 for infinite).
inline EndCount count_ends_at_depth(std::shared_ptr<const LazyGraph> graph,
                                    const GalleryOracle* oracle, std::vector<Ray> representatives,
                                    std::optional<int> truth, Notion notion, int depth,
                                    BudgetSchedule budget = default_budget()) {
    EndCount out;
    out.notion = notion;
    out.depth = depth;

    std::vector<Ray> reps;
    for (auto& r : representatives) {
        verify_ray(r, *graph, depth + 1);
        if (notion == Notion::MetricEnd) {
            compute_metricity(r, *graph, depth);
            if (r.metricity.kind != Metricity::Kind::MetricRayEvidence) continue;
        }
        reps.push_back(std::move(r));
    }
    const int n = static_cast<int>(reps.size());
    std::vector<std::vector<char>> sep(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Verdict v = separation_verdict(reps[i], reps[j], notion, depth, graph, oracle, budget);
            sep[i][j] = sep[j][i] = v.outcome == Verdict::Outcome::Separated ? 1 : 0;
        }
    // Largest pairwise-separated family (n is tiny; brute force).
    int best = n > 0 ? 1 : 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        bool ok = true;
        int size = 0;
        for (int i = 0; i < n && ok; ++i) {
            if (!(mask & (1u << i))) continue;
            ++size;
            for (int j = i + 1; j < n && ok; ++j)
                if ((mask & (1u << j)) && !sep[i][j]) ok = false;
        }
        if (ok) best = std::max(best, size);
    }
    out.lower_bound = best;

    if (truth) {
        if (*truth < 0)
            out.status = EndCount::Status::InfiniteCertified;
        else if (*truth == out.lower_bound)
            out.status = EndCount::Status::StabilizedCertified;
        else
            out.status = EndCount::Status::GrowingLowerBound;
    }
    return out;
}

} // namespace endscope
