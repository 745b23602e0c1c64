// tests/support/finite_graphs.hpp — small fully explorable LazyGraphs used
// by witness and star-ball tests.
#pragma once

#include <memory>

#include "endscope/lazy_graph.hpp"

namespace testgraphs {

// Path 0 - 1 - ... - n (diameter n), rooted at `root`.
inline std::shared_ptr<endscope::LazyGraph> finite_path(int n, int root) {
    auto g = std::make_shared<endscope::LazyGraph>();
    g->root = endscope::VertexId(std::to_string(root));
    g->neighbor_prefix = [n](const endscope::VertexId& v, std::size_t k) {
        int i = std::stoi(v.token);
        std::vector<endscope::VertexId> ns;
        if (i > 0) ns.emplace_back(std::to_string(i - 1));
        if (i < n) ns.emplace_back(std::to_string(i + 1));
        if (ns.size() > k) ns.resize(k);
        return ns;
    };
    g->is_adjacent = [](const endscope::VertexId& a, const endscope::VertexId& b) {
        return std::abs(std::stoi(a.token) - std::stoi(b.token)) == 1;
    };
    g->degree_hint = [n](const endscope::VertexId& v) {
        int i = std::stoi(v.token);
        return endscope::DegreeHint::finite(i == 0 || i == n ? 1 : 2);
    };
    return g;
}

// Cycle of length n, rooted at 0.
inline std::shared_ptr<endscope::LazyGraph> cycle(int n) {
    auto g = std::make_shared<endscope::LazyGraph>();
    g->root = endscope::VertexId("0");
    g->neighbor_prefix = [n](const endscope::VertexId& v, std::size_t k) {
        int i = std::stoi(v.token);
        std::vector<endscope::VertexId> ns{endscope::VertexId(std::to_string((i + n - 1) % n)),
                                           endscope::VertexId(std::to_string((i + 1) % n))};
        if (ns.size() > k) ns.resize(k);
        return ns;
    };
    g->is_adjacent = [n](const endscope::VertexId& a, const endscope::VertexId& b) {
        int d = std::abs(std::stoi(a.token) - std::stoi(b.token));
        return d == 1 || d == n - 1;
    };
    g->degree_hint = [](const endscope::VertexId&) { return endscope::DegreeHint::finite(2); };
    return g;
}

// Triangle (complete graph on 3 vertices).
inline std::shared_ptr<endscope::LazyGraph> triangle() { return cycle(3); }

} // namespace testgraphs
