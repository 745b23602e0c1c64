// gallery/tree_plus2.hpp — a rooted tree T and the graph X obtained from it
// by adding edges between all pairs of vertices at tree-distance two.
//
// Tokens are integer-sequence addresses: the root is "o", the k-th child of
// a vertex appends ".k" (so "o.2.1" is the first child of the root's second
// child). Branching is either a finite b >= 2 or countably infinite, exposed
// through budgeted enumeration: child k exists for every k and is revealed
// once the budget reaches its enumeration slot.
//
// d_T comes from longest-common-prefix arithmetic; in X an edge covers two
// tree edges, so d_X = ceil(d_T / 2).
#pragma once

#include <cstdlib>

#include "endscope/gallery/common.hpp"

namespace endscope::gallery {

namespace tree_detail {

using Addr = std::vector<long long>;

inline std::optional<Addr> parse(const std::string& token) {
    if (token == "o") return Addr{};
    if (token.size() < 3 || token[0] != 'o' || token[1] != '.') return std::nullopt;
    Addr out;
    std::size_t i = 2;
    while (i <= token.size()) {
        std::size_t j = token.find('.', i);
        if (j == std::string::npos) j = token.size();
        auto k = parse_int(token.substr(i, j - i));
        if (!k || *k < 1) return std::nullopt;
        out.push_back(*k);
        i = j + 1;
    }
    return out;
}

inline VertexId vid(const Addr& a) {
    std::string t = "o";
    for (long long k : a) t += "." + std::to_string(k);
    return VertexId(t);
}

inline std::size_t lcp(const Addr& a, const Addr& b) {
    std::size_t n = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < n && a[i] == b[i]) ++i;
    return i;
}

inline int tree_distance(const Addr& a, const Addr& b) {
    return static_cast<int>(a.size() + b.size() - 2 * lcp(a, b));
}

inline Addr repeat(long long k, int n) { return Addr(static_cast<std::size_t>(n), k); }

// Shared oracle; `plus2` selects X over T, branching 0 means infinite.
class Oracle final : public GalleryOracle {
  public:
    Oracle(bool plus2, long long branching) : plus2_(plus2), branching_(branching) {}

    std::optional<bool> shape_contains(const Carrier& c, const VertexId& v) const override {
        auto root = parse(c.sparam);
        auto a = parse(v.token);
        if (!root || !a) return std::nullopt;
        bool in_cone = root->size() <= a->size() && lcp(*root, *a) == root->size();
        if (c.shape == "cone") return in_cone;
        if (c.shape == "cone-rest") return !in_cone;
        return std::nullopt;
    }

    std::optional<CutTruth> certify(const Carrier& c) const override {
        if (c.kind != Carrier::Kind::Shape) return std::nullopt;
        auto root = parse(c.sparam);
        if (!root || root->empty()) return std::nullopt;
        if (c.shape == "cone") {
            if (!plus2_ || branching_ > 0)
                return CutTruth{Cert::YesCertified, Cert::YesCertified, Cert::YesCertified};
            // θ(cone) in X with infinite branching contains all siblings of
            // the cone root: never a vertex- or edge-cut, but its diameter
            // is at most 2.
            return CutTruth{Cert::NoCertified, Cert::NoCertified, Cert::YesCertified};
        }
        if (c.shape == "cone-rest") {
            if (!plus2_ || branching_ > 0)
                return CutTruth{Cert::YesCertified, Cert::YesCertified, Cert::YesCertified};
            // θ(rest) = cone root plus its (infinitely many) children.
            return CutTruth{Cert::NoCertified, Cert::NoCertified, Cert::YesCertified};
        }
        return std::nullopt;
    }

    bool ball_components_stable(const VertexId& center, int) const override {
        return center.token == "o";
    }

    std::optional<bool> ray_eventually_in(const Ray& ray, const Carrier& c) const override {
        auto k = descent_index(ray);
        if (!k) return std::nullopt;
        if (c.kind == Carrier::Kind::Shape) {
            auto root = parse(c.sparam);
            if (!root) return std::nullopt;
            bool on_spine = *root == repeat(*k, static_cast<int>(root->size()));
            if (c.shape == "cone") return on_spine;
            if (c.shape == "cone-rest") return !on_spine;
            return std::nullopt;
        }
        if (c.kind == Carrier::Kind::BallComplementComponent) {
            auto fp = parse(c.fingerprint);
            if (!fp) return std::nullopt;
            // Components of K(o,R)* group by the address prefix of length
            // 2R (X) or R+1 (T); the descent k^n shares that prefix iff it
            // is a power of k.
            std::size_t plen = plus2_ ? static_cast<std::size_t>(2 * c.radius)
                                      : static_cast<std::size_t>(c.radius + 1);
            if (fp->size() < plen) return std::nullopt;
            Addr prefix(fp->begin(), fp->begin() + static_cast<long>(plen));
            return prefix == repeat(*k, static_cast<int>(plen));
        }
        return std::nullopt;
    }

    std::optional<bool> equivalent(const Ray& a, const Ray& b, Notion notion) const override {
        auto ka = descent_index(a), kb = descent_index(b);
        if (!ka || !kb) return std::nullopt;
        if (*ka == *kb) return true;
        // With infinite branching the vertex- and edge-topologies of X are
        // indiscrete: every two rays are equivalent.
        if (plus2_ && branching_ == 0 && notion != Notion::MetricEnd) return true;
        return std::nullopt;
    }

    std::vector<Carrier> candidate_cuts(Notion, int depth) const override {
        std::vector<Carrier> out;
        long long kmax = std::min<long long>(4, std::max<long long>(2, depth));
        if (branching_ > 0) kmax = std::min(kmax, branching_);
        for (long long k = 1; k <= kmax; ++k) {
            out.push_back(Carrier::gallery_shape("cone", 0, vid(repeat(k, 1)).token));
            out.push_back(Carrier::gallery_shape("cone", 0, vid(repeat(k, 2)).token));
        }
        return out;
    }

    std::optional<Carrier> complement_shape(const Carrier& c) const override {
        if (c.kind != Carrier::Kind::Shape) return std::nullopt;
        if (c.shape == "cone") return Carrier::gallery_shape("cone-rest", 0, c.sparam);
        if (c.shape == "cone-rest") return Carrier::gallery_shape("cone", 0, c.sparam);
        return std::nullopt;
    }

  private:
    // Named rays descend through a fixed child index: "cone-<k>".
    static std::optional<long long> descent_index(const Ray& ray) {
        if (ray.name.rfind("cone-", 0) != 0) return std::nullopt;
        return parse_int(ray.name.substr(5));
    }

    bool plus2_;
    long long branching_;
};

} // namespace tree_detail

// Plain tree T (used as the quasi-isometry partner of tree+2).
inline GalleryGraph make_tree(long long branching /* 0 = infinite */) {
    using namespace tree_detail;
    if (branching < 0 || branching == 1)
        throw InvalidConfigError("tree: branching must be 0 (infinite) or >= 2");

    auto graph = std::make_shared<LazyGraph>();
    graph->root = VertexId("o");
    graph->neighbor_prefix = [branching](const VertexId& v, std::size_t k) {
        auto a = parse(v.token);
        if (!a) throw InvalidConfigError("tree: bad token " + v.token);
        std::vector<VertexId> ns;
        if (!a->empty()) {
            Addr p(a->begin(), a->end() - 1);
            ns.push_back(vid(p));
        }
        for (long long c = 1; ns.size() < k && (branching == 0 || c <= branching); ++c) {
            Addr child = *a;
            child.push_back(c);
            ns.push_back(vid(child));
        }
        return ns;
    };
    graph->is_adjacent = [](const VertexId& x, const VertexId& y) {
        auto a = parse(x.token), b = parse(y.token);
        return a && b && tree_distance(*a, *b) == 1;
    };
    graph->degree_hint = [branching](const VertexId& v) {
        if (branching == 0) return DegreeHint::infinite();
        auto a = parse(v.token);
        return DegreeHint::finite(static_cast<std::size_t>(branching + (a && !a->empty() ? 1 : 0)));
    };
    graph->exact_metric = [](const VertexId& x, const VertexId& y) -> std::optional<int> {
        auto a = parse(x.token), b = parse(y.token);
        if (!a || !b) return std::nullopt;
        return tree_distance(*a, *b);
    };

    GalleryGraph g;
    g.tag = branching == 0 ? "tree:b=inf" : "tree:b=" + std::to_string(branching);
    g.graph = graph;
    g.oracle = std::make_shared<Oracle>(false, branching);
    g.probe_budget = [](int d) { return static_cast<std::size_t>(std::min(std::max(d, 1), 4)); };
    long long rays = branching == 0 ? 4 : std::min<long long>(4, branching);
    for (long long k = 1; k <= rays; ++k) {
        std::string name = "cone-" + std::to_string(k);
        g.named_rays[name] = make_ray(name, [k](int i) { return vid(repeat(k, i)); });
    }
    g.truth.end_counts = {{Notion::VertexEnd, -1}, {Notion::EdgeEnd, -1}, {Notion::MetricEnd, -1}};
    g.truth.stabilization_depth = 6;
    return g;
}

// X = T plus all distance-two edges.
inline GalleryGraph make_tree_plus2(long long branching /* 0 = infinite */) {
    using namespace tree_detail;
    if (branching < 0 || branching == 1)
        throw InvalidConfigError("treeplus2: branching must be 0 (infinite) or >= 2");

    auto graph = std::make_shared<LazyGraph>();
    graph->root = VertexId("o");
    graph->neighbor_prefix = [branching](const VertexId& v, std::size_t want) {
        auto a = parse(v.token);
        if (!a) throw InvalidConfigError("treeplus2: bad token " + v.token);
        std::vector<VertexId> ns;
        auto emit = [&](const Addr& w) { ns.push_back(vid(w)); };
        const std::size_t depth = a->size();
        Addr parent = depth >= 1 ? Addr(a->begin(), a->end() - 1) : Addr{};
        if (depth >= 1) emit(parent);
        if (depth >= 2) emit(Addr(a->begin(), a->end() - 2));
        auto child = [&](long long c) {
            Addr w = *a;
            w.push_back(c);
            return w;
        };
        auto grandchild = [&](long long c1, long long c2) {
            Addr w = *a;
            w.push_back(c1);
            w.push_back(c2);
            return w;
        };
        auto sibling = [&](long long slot) -> std::optional<Addr> {
            if (depth == 0) return std::nullopt;
            long long own = a->back();
            long long idx = slot < own ? slot : slot + 1; // skip self
            if (branching > 0 && idx > branching) return std::nullopt;
            Addr w = parent;
            w.push_back(idx);
            return w;
        };
        if (branching > 0) {
            for (long long c = 1; c <= branching; ++c) emit(child(c));
            for (long long c1 = 1; c1 <= branching; ++c1)
                for (long long c2 = 1; c2 <= branching; ++c2) emit(grandchild(c1, c2));
            for (long long s = 1; s <= branching - 1; ++s)
                if (auto w = sibling(s)) emit(*w);
            if (ns.size() > want) ns.resize(want);
            return ns;
        }
        // Infinite branching: dovetail children, siblings and grandchildren
        // in rounds so every neighbor has a fixed enumeration slot.
        for (long long round = 1; ns.size() < want; ++round) {
            emit(child(round));
            if (ns.size() >= want) break;
            if (auto w = sibling(round)) {
                emit(*w);
                if (ns.size() >= want) break;
            }
            for (long long i = 1; i < round && ns.size() < want; ++i) emit(grandchild(i, round));
            for (long long j = 1; j <= round && ns.size() < want; ++j) emit(grandchild(round, j));
        }
        if (ns.size() > want) ns.resize(want);
        return ns;
    };
    graph->is_adjacent = [](const VertexId& x, const VertexId& y) {
        auto a = parse(x.token), b = parse(y.token);
        if (!a || !b) return false;
        int d = tree_distance(*a, *b);
        return d == 1 || d == 2;
    };
    graph->degree_hint = [branching](const VertexId& v) {
        if (branching == 0) return DegreeHint::infinite();
        auto a = parse(v.token);
        if (!a) return DegreeHint::unknown();
        const long long b = branching;
        std::size_t depth = a->size();
        long long deg = b + b * b;                 // children + grandchildren
        if (depth >= 1) deg += 1 + (b - 1);        // parent + siblings
        if (depth >= 2) deg += 1;                  // grandparent
        return DegreeHint::finite(static_cast<std::size_t>(deg));
    };
    graph->exact_metric = [](const VertexId& x, const VertexId& y) -> std::optional<int> {
        auto a = parse(x.token), b = parse(y.token);
        if (!a || !b) return std::nullopt;
        return (tree_distance(*a, *b) + 1) / 2;
    };

    GalleryGraph g;
    g.tag = branching == 0 ? "treeplus2:b=inf" : "treeplus2:b=" + std::to_string(branching);
    g.graph = graph;
    g.oracle = std::make_shared<Oracle>(true, branching);
    g.probe_budget = [](int d) { return static_cast<std::size_t>(std::min(std::max(d, 1), 4)); };
    long long rays = branching == 0 ? 3 : std::min<long long>(3, branching);
    for (long long k = 1; k <= rays; ++k) {
        std::string name = "cone-" + std::to_string(k);
        g.named_rays[name] = make_ray(name, [k](int i) { return vid(repeat(k, i)); });
    }
    if (branching == 0) {
        g.truth.end_counts = {{Notion::VertexEnd, 1}, {Notion::EdgeEnd, 1}, {Notion::MetricEnd, -1}};
        using O = Verdict::Outcome;
        g.truth.expected_verdicts = {
            {"cone-1", "cone-2", Notion::VertexEnd, O::EquivalentCertified, false},
            {"cone-1", "cone-2", Notion::EdgeEnd, O::EquivalentCertified, false},
            {"cone-1", "cone-2", Notion::MetricEnd, O::Separated, false},
        };
        g.truth.stabilization_depth = 2;
    } else {
        // The finite-branching variant is locally finite: all three end
        // structures agree with the tree's and are infinite. Its degree
        // hints are Finite, so windows enumerate full neighborhoods and
        // balls grow like b^(2·radius): no expected verdicts are stored,
        // deep recomputation would leave desk scale.
        g.truth.end_counts = {{Notion::VertexEnd, -1}, {Notion::EdgeEnd, -1}, {Notion::MetricEnd, -1}};
        g.truth.stabilization_depth = 2;
    }
    return g;
}

} // namespace endscope::gallery
