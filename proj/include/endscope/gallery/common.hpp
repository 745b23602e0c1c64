// gallery/common.hpp — shared types for the gallery of example graphs.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "endscope/ends.hpp"
#include "endscope/lazy_graph.hpp"
#include "endscope/oracle.hpp"
#include "endscope/rays.hpp"

namespace endscope::gallery {

struct ExpectedVerdict {
    std::string ray_a, ray_b;
    Notion notion = Notion::VertexEnd;
    Verdict::Outcome outcome = Verdict::Outcome::Unknown;
    // When set, the verdict is evaluated without the oracle: the honest
    // window-only answer, used by depth-monotonicity checks.
    bool oracle_blind = false;
};

// End counts per notion; -1 encodes "infinitely many".
struct GroundTruth {
    std::map<Notion, int> end_counts;
    std::vector<ExpectedVerdict> expected_verdicts;
    std::vector<std::pair<std::string, int>> star_ball_examples; // (center token, radius)
    int stabilization_depth = 6; // depth at which expected verdicts resolve
};

struct GalleryGraph {
    std::string tag;
    std::shared_ptr<const LazyGraph> graph;
    std::shared_ptr<const GalleryOracle> oracle;
    GroundTruth truth;
    std::map<std::string, Ray> named_rays;
    std::map<std::string, std::function<SequenceElement(int)>> named_sequences;
    // Budget schedule for deep probing (verdict recomputation at d+8 and
    // the like). Graphs whose balls grow exponentially cap it so windows
    // stay desk-scale; everything certified remains certified under any
    // larger budget.
    BudgetSchedule probe_budget = default_budget();

    Ray ray(const std::string& name) const {
        auto it = named_rays.find(name);
        if (it == named_rays.end())
            throw InvalidConfigError("unknown ray '" + name + "' for graph " + tag);
        return it->second;
    }

    std::function<SequenceElement(int)> sequence(const std::string& name) const {
        auto it = named_sequences.find(name);
        if (it == named_sequences.end())
            throw InvalidConfigError("unknown sequence '" + name + "' for graph " + tag);
        return it->second;
    }
};

// Convenience: a named generator-backed ray.
inline Ray make_ray(std::string name, std::function<VertexId(int)> gen) {
    Ray r;
    r.name = std::move(name);
    r.generator = std::move(gen);
    return r;
}

inline std::optional<long long> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (...) {
        return std::nullopt;
    }
    if (pos != s.size()) return std::nullopt;
    return v;
}

} // namespace endscope::gallery
