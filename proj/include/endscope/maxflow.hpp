// maxflow.hpp — unit-capacity max-flow / min-edge-cut inside a window.
//
// Plain Edmonds-Karp on the explored adjacency, undirected edges modelled
// as arc pairs of capacity one. Window min-cuts are candidate edge-cuts
// only: a cut that is minimal in the window may be reconnected outside it,
// so global validity is always a matter for the oracle.
#pragma once

#include <deque>
#include <vector>

#include "endscope/window.hpp"

namespace endscope {

struct WindowMinCut {
    int flow_value = 0;
    std::vector<std::pair<VertexId, VertexId>> cut_edges;
    std::vector<VertexId> source_side; // residual-reachable from s
};

inline WindowMinCut window_min_edge_cut(const Window& wnd, const VertexId& s, const VertexId& t) {
    const int n = static_cast<int>(wnd.vertex_count());
    const int is = wnd.index_of(s), it = wnd.index_of(t);

    struct Arc {
        int to, rev, cap;
    };
    std::vector<std::vector<Arc>> arcs(n);
    auto add_edge = [&](int a, int b) {
        arcs[a].push_back({b, static_cast<int>(arcs[b].size()), 1});
        arcs[b].push_back({a, static_cast<int>(arcs[a].size()) - 1, 1});
    };
    for (int v = 0; v < n; ++v)
        for (int u : wnd.adjacency_at(v))
            if (u > v) add_edge(v, u);

    WindowMinCut out;
    while (true) {
        std::vector<int> prev_vertex(n, -1), prev_arc(n, -1);
        std::deque<int> queue{is};
        prev_vertex[is] = is;
        while (!queue.empty() && prev_vertex[it] < 0) {
            int v = queue.front();
            queue.pop_front();
            for (std::size_t ai = 0; ai < arcs[v].size(); ++ai) {
                const Arc& a = arcs[v][ai];
                if (a.cap > 0 && prev_vertex[a.to] < 0) {
                    prev_vertex[a.to] = v;
                    prev_arc[a.to] = static_cast<int>(ai);
                    queue.push_back(a.to);
                }
            }
        }
        if (prev_vertex[it] < 0) break;
        for (int v = it; v != is; v = prev_vertex[v]) {
            Arc& a = arcs[prev_vertex[v]][prev_arc[v]];
            a.cap -= 1;
            arcs[v][a.rev].cap += 1;
        }
        ++out.flow_value;
    }

    std::vector<char> reach(n, 0);
    std::deque<int> queue{is};
    reach[is] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const Arc& a : arcs[v])
            if (a.cap > 0 && !reach[a.to]) {
                reach[a.to] = 1;
                queue.push_back(a.to);
            }
    }
    for (int v = 0; v < n; ++v) {
        if (reach[v]) out.source_side.emplace_back(wnd.token_at(v));
        for (int u : wnd.adjacency_at(v))
            if (u > v && reach[v] != reach[u]) {
                int a = reach[v] ? v : u, b = reach[v] ? u : v;
                out.cut_edges.emplace_back(VertexId(wnd.token_at(a)), VertexId(wnd.token_at(b)));
            }
    }
    std::sort(out.source_side.begin(), out.source_side.end());
    return out;
}

} // namespace endscope
