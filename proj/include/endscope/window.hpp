// window.hpp — finite exploration windows over lazy graphs.
//
// A Window is the induced subgraph explored so far: a BFS ball of a given
// radius around the root, built under a per-vertex enumeration budget so
// that infinite-degree vertices are handled by dovetailing. Once built a
// window is immutable; all queries are const and safe to run concurrently.
//
// Soundness conventions:
//   * every recorded edge is a true edge, so window distances are upper
//     bounds on d_X and can only shrink under deeper exploration;
//   * a vertex is Complete when its whole neighborhood is known and inside
//     the window, so anything certified from Complete vertices only (Exact
//     distances, Closed components) is final and never changes at greater
//     depth.
#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "endscope/errors.hpp"
#include "endscope/lazy_graph.hpp"
#include "endscope/vertex.hpp"

namespace endscope {

enum class Certainty { Exact, LowerBound, UpperBound };

struct DiameterEstimate {
    int value = 0;
    bool is_infinite = false; // set only by oracle-grade arguments
    Certainty certainty = Certainty::UpperBound;

    static DiameterEstimate exact(int v) { return {v, false, Certainty::Exact}; }
    static DiameterEstimate upper(int v) { return {v, false, Certainty::UpperBound}; }
};

enum class VertexStatus { Complete, Truncated };

struct ComponentLabeling {
    // fingerprint (minimal token of the component) per labeled vertex
    std::unordered_map<VertexId, std::string, VertexIdHash> labels;
    // Closed components contain only Complete vertices: their global
    // identity is certified and they never merge or grow at greater depth.
    std::map<std::string, bool> open; // fingerprint -> is Open
    std::map<std::string, std::vector<VertexId>> members; // sorted by token

    std::size_t component_count() const { return open.size(); }
};

class Window {
  public:
    Window(std::shared_ptr<const LazyGraph> graph, int radius, BudgetSchedule budget)
        : graph_(std::move(graph)), radius_(radius), budget_(std::move(budget)) {
        if (radius_ < 0) throw InvalidConfigError("explore: radius must be >= 0");
        for (int d = 0; d <= radius_; ++d) {
            if (budget_(d) == 0)
                throw InvalidConfigError("explore: budget schedule of zero is rejected");
        }
        build();
    }

    const LazyGraph& graph() const { return *graph_; }
    std::shared_ptr<const LazyGraph> graph_ptr() const { return graph_; }
    const VertexId& origin() const { return graph_->root; }
    int radius() const { return radius_; }
    const BudgetSchedule& budget() const { return budget_; }

    std::size_t vertex_count() const { return tokens_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    bool contains(const VertexId& v) const { return index_.count(v.token) != 0; }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        out.reserve(tokens_.size());
        for (const auto& t : tokens_) out.emplace_back(t);
        return out;
    }

    VertexStatus status(const VertexId& v) const {
        return complete_[require(v)] ? VertexStatus::Complete : VertexStatus::Truncated;
    }

    // Enumerated-neighbor count for Truncated vertices (the "k" of
    // TruncatedAt(k)); for Complete vertices the full degree.
    std::size_t enumerated(const VertexId& v) const { return adj_[require(v)].size(); }

    bool is_complete(const VertexId& v) const { return complete_[require(v)]; }

    // BFS layer from the origin at discovery time.
    int layer(const VertexId& v) const { return layer_[require(v)]; }

    std::vector<VertexId> frontier() const {
        std::vector<VertexId> out;
        for (std::size_t i = 0; i < tokens_.size(); ++i)
            if (!complete_[i]) out.emplace_back(tokens_[i]);
        return out;
    }

    std::vector<VertexId> neighbors_in_window(const VertexId& v) const {
        std::vector<VertexId> out;
        for (int u : adj_[require(v)]) out.emplace_back(tokens_[u]);
        return out;
    }

    bool has_window_edge(const VertexId& a, const VertexId& b) const {
        int ia = require(a), ib = require(b);
        const auto& na = adj_[ia];
        return std::find(na.begin(), na.end(), ib) != na.end();
    }

    std::vector<std::pair<VertexId, VertexId>> edges() const {
        std::vector<std::pair<VertexId, VertexId>> out;
        out.reserve(edge_count_);
        for (std::size_t i = 0; i < adj_.size(); ++i)
            for (int j : adj_[i])
                if (static_cast<std::size_t>(j) > i)
                    out.emplace_back(VertexId(tokens_[i]), VertexId(tokens_[j]));
        return out;
    }

    // ---- distance -------------------------------------------------------

    // BFS distance within the window, Exact when the graph ships an exact
    // metric or when every vertex strictly closer than d-1 to x is Complete
    // (then no unexplored shortcut can exist). Upper bound otherwise.
    DiameterEstimate distance(const VertexId& x, const VertexId& y) const {
        int ix = require(x), iy = require(y);
        if (ix == iy) return DiameterEstimate::exact(0);
        if (graph_->has_exact_metric()) {
            if (auto m = graph_->exact_metric(x, y)) return DiameterEstimate::exact(*m);
        }
        auto bfs = bfs_from(ix);
        int d = bfs.dist[iy];
        if (d < 0) throw NotExploredError("distance: window unexpectedly disconnected");
        bool exact = d <= bfs.complete_prefix + 2;
        return exact ? DiameterEstimate::exact(d) : DiameterEstimate::upper(d);
    }

    // Max pairwise distance over S with the weakest certainty of any pair.
    // Empty and singleton sets have diameter 0, Exact, by convention.
    DiameterEstimate set_diameter(const std::vector<VertexId>& s) const {
        if (s.size() <= 1) return DiameterEstimate::exact(0);
        std::vector<int> ids;
        ids.reserve(s.size());
        for (const auto& v : s) ids.push_back(require(v));
        int best = 0;
        bool all_exact = true;
        if (graph_->has_exact_metric()) {
            for (std::size_t i = 0; i < ids.size(); ++i)
                for (std::size_t j = i + 1; j < ids.size(); ++j) {
                    auto m = graph_->exact_metric(VertexId(tokens_[ids[i]]), VertexId(tokens_[ids[j]]));
                    if (m) {
                        best = std::max(best, *m);
                    } else {
                        all_exact = false;
                    }
                }
            if (all_exact) return DiameterEstimate::exact(best);
        }
        best = 0;
        all_exact = true;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            auto bfs = bfs_from(ids[i]);
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                int d = bfs.dist[ids[j]];
                if (d < 0) throw NotExploredError("set_diameter: disconnected window");
                best = std::max(best, d);
                if (d > bfs.complete_prefix + 2) all_exact = false;
            }
        }
        return all_exact ? DiameterEstimate::exact(best) : DiameterEstimate::upper(best);
    }

    // Geodesic inside the window (for witness paths). BFS parents from x.
    std::vector<VertexId> window_geodesic(const VertexId& x, const VertexId& y) const {
        int ix = require(x), iy = require(y);
        std::vector<int> parent(tokens_.size(), -2);
        std::deque<int> queue;
        parent[ix] = -1;
        queue.push_back(ix);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (v == iy) break;
            for (int u : adj_[v])
                if (parent[u] == -2) {
                    parent[u] = v;
                    queue.push_back(u);
                }
        }
        if (parent[iy] == -2) throw NotExploredError("window_geodesic: no path in window");
        std::vector<VertexId> path;
        for (int v = iy; v != -1; v = parent[v]) path.emplace_back(tokens_[v]);
        std::reverse(path.begin(), path.end());
        return path;
    }

    // ---- components of a complement --------------------------------------

    // Union-find labeling of window \ removed. A component is Open when it
    // contains a non-Complete vertex (it may extend or merge beyond the
    // window); otherwise it is Closed and is a true component of X \ removed.
    ComponentLabeling components_of_complement(const std::vector<VertexId>& removed) const {
        std::vector<char> gone(tokens_.size(), 0);
        for (const auto& v : removed) {
            if (auto it = index_.find(v.token); it != index_.end()) gone[it->second] = 1;
        }
        return label_components(gone);
    }

    // Same, with removal given as a membership predicate over tokens.
    ComponentLabeling components_of_complement_pred(
        const std::function<bool(const VertexId&)>& removed) const {
        std::vector<char> gone(tokens_.size(), 0);
        for (std::size_t i = 0; i < tokens_.size(); ++i)
            if (removed(VertexId(tokens_[i]))) gone[i] = 1;
        return label_components(gone);
    }

    // Window ball around any explored center: vertices at window distance
    // <= r. Window distances over-estimate, so this is a subset of the true
    // ball; it equals the true ball (intersected with the window) whenever
    // the metric is exact or the relevant layers are Complete.
    std::vector<VertexId> ball(const VertexId& center, int r) const {
        int ic = require(center);
        std::vector<VertexId> out;
        if (graph_->has_exact_metric()) {
            bool all = true;
            std::vector<VertexId> via_metric;
            for (const auto& t : tokens_) {
                auto m = graph_->exact_metric(center, VertexId(t));
                if (!m) {
                    all = false;
                    break;
                }
                if (*m <= r) via_metric.emplace_back(t);
            }
            if (all) return via_metric;
        }
        auto bfs = bfs_from(ic);
        for (std::size_t i = 0; i < tokens_.size(); ++i)
            if (bfs.dist[i] >= 0 && bfs.dist[i] <= r) out.emplace_back(tokens_[i]);
        return out;
    }

    // True when the whole ball of radius r around center is certified:
    // every vertex at distance <= r is Complete (then the ball, all its
    // edges and the components of its complement are final).
    bool ball_certified(const VertexId& center, int r) const {
        auto b = ball(center, r);
        for (const auto& v : b)
            if (!is_complete(v)) return false;
        // Certified membership also needs exact distances up to r.
        if (graph_->has_exact_metric()) return true;
        auto bfs = bfs_from(require(center));
        return bfs.complete_prefix + 1 >= r;
    }

    bool fully_explored() const {
        for (std::size_t i = 0; i < tokens_.size(); ++i)
            if (!complete_[i]) return false;
        return true;
    }

    // ---- low-level (used by cuts/ends internals and tests) ---------------

    int index_of(const VertexId& v) const { return require(v); }
    const std::string& token_at(int i) const { return tokens_[i]; }
    const std::vector<int>& adjacency_at(int i) const { return adj_[i]; }
    bool complete_at(int i) const { return complete_[i] != 0; }

    struct BfsResult {
        std::vector<int> dist;
        // Largest j such that every vertex at BFS distance <= j is Complete;
        // window distances d <= complete_prefix + 2 are exact.
        int complete_prefix = -1;
    };

    BfsResult bfs_from(int src) const {
        BfsResult r;
        r.dist.assign(tokens_.size(), -1);
        r.dist[src] = 0;
        std::deque<int> queue{src};
        std::vector<std::vector<int>> layers;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (static_cast<std::size_t>(r.dist[v]) >= layers.size()) layers.emplace_back();
            layers[r.dist[v]].push_back(v);
            for (int u : adj_[v])
                if (r.dist[u] < 0) {
                    r.dist[u] = r.dist[v] + 1;
                    queue.push_back(u);
                }
        }
        for (const auto& layer : layers) {
            bool ok = true;
            for (int v : layer)
                if (!complete_[v]) {
                    ok = false;
                    break;
                }
            if (!ok) break;
            ++r.complete_prefix;
        }
        return r;
    }

  private:
    void build() {
        const std::size_t budget_now = budget_(radius_);
        add_vertex(graph_->root.token, 0);
        std::deque<int> queue{0};
        while (!queue.empty()) {
            int vi = queue.front();
            queue.pop_front();
            VertexId v(tokens_[vi]);
            DegreeHint hint = graph_->degree_hint ? graph_->degree_hint(v) : DegreeHint::unknown();
            std::size_t want = budget_now;
            if (hint.kind == DegreeHint::Kind::Finite) want = hint.count;
            auto ns = graph_->neighbor_prefix(v, want);
            if (ns.size() > want)
                throw InvalidConfigError("neighbor_prefix returned more than asked");
            bool enumeration_complete =
                (hint.kind == DegreeHint::Kind::Finite) ? ns.size() == hint.count
                                                        : ns.size() < want;
            bool all_in_window = true;
            const bool expand = layer_[vi] < radius_;
            for (const auto& u : ns) {
                if (u.token == v.token) throw InvalidConfigError("loop edge in neighbor stream");
                auto it = index_.find(u.token);
                if (it == index_.end()) {
                    if (expand) {
                        int ui = add_vertex(u.token, layer_[vi] + 1);
                        queue.push_back(ui);
                        add_edge(vi, ui);
                    } else {
                        all_in_window = false; // neighbor beyond the window
                    }
                } else {
                    add_edge(vi, it->second);
                }
            }
            complete_[vi] = (enumeration_complete && all_in_window) ? 1 : 0;
        }
    }

    int add_vertex(const std::string& token, int layer) {
        int id = static_cast<int>(tokens_.size());
        tokens_.push_back(token);
        layer_.push_back(layer);
        complete_.push_back(0);
        adj_.emplace_back();
        index_.emplace(token, id);
        return id;
    }

    void add_edge(int a, int b) {
        auto& na = adj_[a];
        if (std::find(na.begin(), na.end(), b) != na.end()) return;
        na.push_back(b);
        adj_[b].push_back(a);
        ++edge_count_;
    }

    int require(const VertexId& v) const {
        auto it = index_.find(v.token);
        if (it == index_.end())
            throw NotExploredError("vertex not explored: " + v.token);
        return it->second;
    }

    ComponentLabeling label_components(const std::vector<char>& gone) const {
        std::vector<int> parent(tokens_.size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int a) {
            while (parent[a] != a) {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            return a;
        };
        for (std::size_t i = 0; i < tokens_.size(); ++i) {
            if (gone[i]) continue;
            for (int j : adj_[i]) {
                if (gone[j]) continue;
                int ra = find(static_cast<int>(i)), rb = find(j);
                if (ra != rb) parent[ra] = rb;
            }
        }
        std::unordered_map<int, std::string> fingerprint;
        std::unordered_map<int, bool> is_open;
        for (std::size_t i = 0; i < tokens_.size(); ++i) {
            if (gone[i]) continue;
            int r = find(static_cast<int>(i));
            auto it = fingerprint.find(r);
            if (it == fingerprint.end() || tokens_[i] < it->second) fingerprint[r] = tokens_[i];
            if (!complete_[i]) is_open[r] = true;
        }
        ComponentLabeling out;
        for (std::size_t i = 0; i < tokens_.size(); ++i) {
            if (gone[i]) continue;
            int r = find(static_cast<int>(i));
            const std::string& fp = fingerprint[r];
            out.labels.emplace(VertexId(tokens_[i]), fp);
            out.open[fp] = is_open.count(r) != 0;
            out.members[fp].emplace_back(tokens_[i]);
        }
        for (auto& [fp, mem] : out.members)
            std::sort(mem.begin(), mem.end());
        return out;
    }

    std::shared_ptr<const LazyGraph> graph_;
    int radius_;
    BudgetSchedule budget_;
    std::vector<std::string> tokens_;
    std::vector<int> layer_;
    std::vector<char> complete_;
    std::vector<std::vector<int>> adj_;
    std::unordered_map<std::string, int> index_;
    std::size_t edge_count_ = 0;
};

// BFS window of the given radius from the graph root under a budget
// schedule. Every vertex at distance < radius with a Finite degree hint is
// Complete; infinite/unknown degrees enumerate budget(radius) neighbors.
inline Window explore(std::shared_ptr<const LazyGraph> graph, int radius,
                      BudgetSchedule budget = default_budget()) {
    return Window(std::move(graph), radius, std::move(budget));
}

} // namespace endscope
