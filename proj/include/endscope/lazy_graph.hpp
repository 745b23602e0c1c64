// lazy_graph.hpp — generatively defined infinite graphs.
//
// A LazyGraph is a pure description: a deterministic neighbor stream, an
// adjacency predicate, a basepoint, degree hints and (optionally) an exact
// metric. Nothing is materialized until explore() builds a Window.
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "endscope/vertex.hpp"

namespace endscope {

struct DegreeHint {
    enum class Kind { Finite, Infinite, Unknown };
    Kind kind = Kind::Unknown;
    std::size_t count = 0; // meaningful for Finite only

    static DegreeHint finite(std::size_t n) { return {Kind::Finite, n}; }
    static DegreeHint infinite() { return {Kind::Infinite, 0}; }
    static DegreeHint unknown() { return {Kind::Unknown, 0}; }
};

// Contract for neighbor_prefix(v, k): return the first min(deg(v), k)
// neighbors of v in a fixed deterministic order. The prefix must be stable:
// asking for more never reorders what was already enumerated. Must never
// contain v itself (no loops) and must be symmetric with is_adjacent.
struct LazyGraph {
    std::function<std::vector<VertexId>(const VertexId&, std::size_t)> neighbor_prefix;
    std::function<bool(const VertexId&, const VertexId&)> is_adjacent;
    VertexId root;
    std::function<DegreeHint(const VertexId&)> degree_hint;
    // When present, must equal the true graph distance d_X. Lazily explored
    // windows can only ever over-estimate distances, so a closed form is the
    // one way to get Exact certainty near the frontier.
    std::function<std::optional<int>(const VertexId&, const VertexId&)> exact_metric;

    bool has_exact_metric() const { return static_cast<bool>(exact_metric); }
};

// Per-vertex enumeration budget as a function of exploration depth. Must be
// >= 1 and non-decreasing; the default grows linearly so that every neighbor
// of every vertex is eventually enumerated as depth grows (dovetailing).
using BudgetSchedule = std::function<std::size_t(int depth)>;

inline BudgetSchedule default_budget() {
    return [](int depth) { return static_cast<std::size_t>(depth < 1 ? 1 : depth); };
}

inline BudgetSchedule constant_budget(std::size_t b) {
    return [b](int) { return b; };
}

} // namespace endscope
