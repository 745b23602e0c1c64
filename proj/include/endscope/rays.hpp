// rays.hpp — rays (one-way infinite paths) with verified prefixes.
#pragma once

#include <functional>
#include <string>
#include <unordered_set>

#include "endscope/errors.hpp"
#include "endscope/lazy_graph.hpp"
#include "endscope/vertex.hpp"

namespace endscope {

// The three end notions, ordered by the cuts allowed to separate rays.
enum class Notion { VertexEnd, EdgeEnd, MetricEnd };

inline const char* to_string(Notion n) {
    switch (n) {
        case Notion::VertexEnd: return "vertex";
        case Notion::EdgeEnd: return "edge";
        case Notion::MetricEnd: return "metric";
    }
    return "?";
}

// Metric-ray evidence: the inspected tail of the ray keeps distance
// >= evidence_level from the root and has reached the requested depth.
// NotMetricCertified is an oracle-grade judgement (the tail is bounded for
// good); a finite prefix alone can never certify it.
struct Metricity {
    enum class Kind { MetricRayEvidence, NotMetricCertified, Unknown };
    Kind kind = Kind::Unknown;
    int evidence_level = 0;
};

struct Ray {
    std::function<VertexId(int)> generator;
    int verified_prefix = 0;
    Metricity metricity;
    std::string name; // gallery-issued name; empty for ad-hoc rays

    VertexId at(int i) const { return generator(i); }
};

// Extends the verified prefix to `upto` indices: checks pairwise
// distinctness and adjacency of consecutive vertices via is_adjacent.
inline void verify_ray(Ray& ray, const LazyGraph& graph, int upto) {
    if (upto <= ray.verified_prefix) return;
    std::unordered_set<std::string> seen;
    for (int i = 0; i < ray.verified_prefix; ++i) seen.insert(ray.at(i).token);
    for (int i = ray.verified_prefix; i < upto; ++i) {
        VertexId v = ray.at(i);
        if (!seen.insert(v.token).second)
            throw InvalidRayError("ray repeats vertex " + v.token + " at index " +
                                  std::to_string(i));
        if (i > 0) {
            VertexId prev = ray.at(i - 1);
            if (!graph.is_adjacent(prev, v))
                throw InvalidRayError("ray vertices not adjacent at index " + std::to_string(i) +
                                      ": " + prev.token + " !~ " + v.token);
        }
    }
    ray.verified_prefix = upto;
}

// Escape-distance checkpoints against the graph root. Needs an exact metric
// (all gallery graphs ship one); without it the judgement stays Unknown.
// Evidence requires the second half of the inspected prefix to stay away
// from the root and the ray to have actually reached distance `depth`.
// Verification is extended as needed, up to 8*depth + 16 indices: rays that
// escape more slowly than that stay Unknown at this depth.
inline void compute_metricity(Ray& ray, const LazyGraph& graph, int depth) {
    if (ray.metricity.kind == Metricity::Kind::NotMetricCertified) return;
    if (!graph.has_exact_metric()) return;
    const int cap = 8 * depth + 16;
    int inspect = std::max(ray.verified_prefix, depth + 1);
    while (true) {
        verify_ray(ray, graph, inspect);
        int reach = 0;
        for (int i = 0; i < ray.verified_prefix; ++i) {
            auto d = graph.exact_metric(graph.root, ray.at(i));
            if (!d) return;
            reach = std::max(reach, *d);
        }
        if (reach >= depth || inspect >= cap) break;
        inspect = std::min(cap, inspect * 2);
    }
    int reach = 0, tail_min = -1;
    for (int i = 0; i < ray.verified_prefix; ++i) {
        auto d = graph.exact_metric(graph.root, ray.at(i));
        if (!d) return;
        reach = std::max(reach, *d);
        if (i >= ray.verified_prefix / 2 && (tail_min < 0 || *d < tail_min)) tail_min = *d;
    }
    if (tail_min >= 1 && reach >= depth) {
        ray.metricity.kind = Metricity::Kind::MetricRayEvidence;
        ray.metricity.evidence_level = tail_min;
    } else {
        // Not enough escape on the inspected prefix; leave kind as is
        // (Unknown unless an oracle stamped NotMetricCertified).
        ray.metricity.evidence_level = tail_min < 0 ? 0 : tail_min;
    }
}

} // namespace endscope
