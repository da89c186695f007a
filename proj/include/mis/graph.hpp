#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mis/errors.hpp"

namespace mis {

// --- VertexSet helpers (sorted ascending, unique) ---------------------------

inline VertexSet sorted_unique(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool set_contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Deterministic "best solution" order: larger first, lexicographic tie-break.
inline bool better_set(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

// --- Graph ------------------------------------------------------------------

// Simple undirected graph over dense vertex ids 0..n-1. Adjacency lists are
// sorted vertex sets, so every iteration order downstream is deterministic.
// Graphs are treated as immutable once built; all algorithms take const refs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n)) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw Error("self-loop on vertex " + std::to_string(u));
        insert_sorted(adj_[static_cast<size_t>(u)], v);
        insert_sorted(adj_[static_cast<size_t>(v)], u);
    }

    int n() const { return n_; }

    long long m() const {
        long long deg_sum = 0;
        for (const auto& a : adj_) deg_sum += static_cast<long long>(a.size());
        return deg_sum / 2;
    }

    const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<size_t>(v)]; }

    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    bool has_edge(Vertex u, Vertex v) const {
        if (u == v) return false;
        const auto& a = adj_[static_cast<size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    VertexSet vertices() const {
        VertexSet all(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v) all[static_cast<size_t>(v)] = v;
        return all;
    }

    // Label map back to the graph this one was induced from. Empty when this
    // graph is not an induced subgraph (ids are their own labels).
    bool has_labels() const { return !labels_.empty(); }
    const VertexSet& labels() const { return labels_; }
    Vertex label_of(Vertex v) const {
        return labels_.empty() ? v : labels_[static_cast<size_t>(v)];
    }
    void set_labels(VertexSet labels) { labels_ = std::move(labels); }

    // Open/closed neighborhoods of a vertex set.
    VertexSet open_neighborhood(const VertexSet& s) const {
        std::vector<char> in_s(static_cast<size_t>(n_), 0), seen(static_cast<size_t>(n_), 0);
        for (Vertex v : s) in_s[static_cast<size_t>(v)] = 1;
        VertexSet out;
        for (Vertex v : s)
            for (Vertex u : neighbors(v))
                if (!in_s[static_cast<size_t>(u)] && !seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = 1;
                    out.push_back(u);
                }
        std::sort(out.begin(), out.end());
        return out;
    }

    VertexSet closed_neighborhood(const VertexSet& s) const {
        return set_union(s, open_neighborhood(s));
    }

    bool is_independent_set(const VertexSet& s) const {
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (has_edge(s[i], s[j])) return false;
        return true;
    }

    bool is_clique(const VertexSet& s) const {
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j)
                if (!has_edge(s[i], s[j])) return false;
        return true;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex id " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
    }

    static void insert_sorted(VertexSet& a, Vertex v) {
        auto it = std::lower_bound(a.begin(), a.end(), v);
        if (it == a.end() || *it != v) a.insert(it, v);
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
    VertexSet labels_;
};

// --- Traversal primitives ----------------------------------------------------

// BFS distance of every vertex from a source set; -1 for unreachable.
inline std::vector<int> bfs_depths(const Graph& g, const VertexSet& source) {
    std::vector<int> depth(static_cast<size_t>(g.n()), -1);
    std::deque<Vertex> queue;
    for (Vertex v : source) {
        depth[static_cast<size_t>(v)] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex u : g.neighbors(v))
            if (depth[static_cast<size_t>(u)] < 0) {
                depth[static_cast<size_t>(u)] = depth[static_cast<size_t>(v)] + 1;
                queue.push_back(u);
            }
    }
    return depth;
}

struct Layering {
    VertexSet source;                 // L0
    std::vector<VertexSet> layers;    // L1..Lq
    VertexSet unreachable;            // vertices at no finite distance from L0

    int depth() const { return static_cast<int>(layers.size()); }
};

inline bool is_connected_within(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    std::vector<char> in_s(static_cast<size_t>(g.n()), 0);
    for (Vertex v : s) in_s[static_cast<size_t>(v)] = 1;
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    std::deque<Vertex> queue{s.front()};
    seen[static_cast<size_t>(s.front())] = 1;
    size_t reached = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex u : g.neighbors(v))
            if (in_s[static_cast<size_t>(u)] && !seen[static_cast<size_t>(u)]) {
                seen[static_cast<size_t>(u)] = 1;
                ++reached;
                queue.push_back(u);
            }
    }
    return reached == s.size();
}

// BFS layering from a connected source set. Vertices of layer i are at
// distance exactly i from the source; unreachable vertices are reported
// separately rather than silently dropped.
inline Layering bfs_layering(const Graph& g, const VertexSet& source) {
    if (source.empty()) throw DisconnectedSourceError("bfs_layering: empty source set");
    for (Vertex v : source)
        if (v < 0 || v >= g.n()) throw std::out_of_range("bfs_layering: source vertex out of range");
    if (!is_connected_within(g, source))
        throw DisconnectedSourceError("bfs_layering: source set does not induce a connected subgraph");

    std::vector<int> depth = bfs_depths(g, source);
    Layering out;
    out.source = source;
    int max_depth = 0;
    for (int v = 0; v < g.n(); ++v) max_depth = std::max(max_depth, depth[static_cast<size_t>(v)]);
    out.layers.assign(static_cast<size_t>(max_depth), {});
    for (int v = 0; v < g.n(); ++v) {
        int d = depth[static_cast<size_t>(v)];
        if (d < 0)
            out.unreachable.push_back(v);
        else if (d > 0)
            out.layers[static_cast<size_t>(d - 1)].push_back(v);
    }
    return out;
}

// Independent re-check of a layering: membership equals recomputed BFS
// distance and no edge skips a layer.
inline std::vector<std::string> validate_layering(const Graph& g, const Layering& lay) {
    std::vector<std::string> violations;
    std::vector<int> depth = bfs_depths(g, lay.source);
    std::vector<int> claimed(static_cast<size_t>(g.n()), -2);
    for (Vertex v : lay.source) claimed[static_cast<size_t>(v)] = 0;
    for (size_t i = 0; i < lay.layers.size(); ++i)
        for (Vertex v : lay.layers[i]) claimed[static_cast<size_t>(v)] = static_cast<int>(i) + 1;
    for (Vertex v : lay.unreachable) claimed[static_cast<size_t>(v)] = -1;
    for (int v = 0; v < g.n(); ++v) {
        if (claimed[static_cast<size_t>(v)] == -2)
            violations.push_back("vertex " + std::to_string(v) + " missing from layering");
        else if (claimed[static_cast<size_t>(v)] != depth[static_cast<size_t>(v)])
            violations.push_back("vertex " + std::to_string(v) + " claims layer " +
                                 std::to_string(claimed[static_cast<size_t>(v)]) + " but BFS depth is " +
                                 std::to_string(depth[static_cast<size_t>(v)]));
    }
    for (auto [u, v] : g.edges()) {
        int du = depth[static_cast<size_t>(u)], dv = depth[static_cast<size_t>(v)];
        if (du >= 0 && dv >= 0 && std::abs(du - dv) > 1)
            violations.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                 " skips a layer");
    }
    return violations;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        VertexSet comp;
        std::deque<Vertex> queue{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (Vertex u : g.neighbors(v))
                if (!seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = 1;
                    queue.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.n() == 0 || connected_components(g).size() == 1;
}

// Induced subgraph with dense relabeling. The label map points one level up,
// to ids of g, so nested inductions compose by lifting level by level.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s_in) {
    VertexSet s = sorted_unique(s_in);
    for (Vertex v : s)
        if (v < 0 || v >= g.n())
            throw std::out_of_range("induced_subgraph: vertex id " + std::to_string(v) +
                                    " out of range");
    std::vector<int> local(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < s.size(); ++i) local[static_cast<size_t>(s[i])] = static_cast<int>(i);
    Graph sub(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i)
        for (Vertex u : g.neighbors(s[i])) {
            int lu = local[static_cast<size_t>(u)];
            if (lu > static_cast<int>(i)) sub.add_edge(static_cast<int>(i), lu);
        }
    sub.set_labels(std::move(s));
    return sub;
}

// Map a vertex set of an induced subgraph back to the parent graph's ids.
inline VertexSet lift(const Graph& sub, const VertexSet& s) {
    VertexSet out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(sub.label_of(v));
    std::sort(out.begin(), out.end());
    return out;
}

// --- Degree-1 reduction -------------------------------------------------------

struct ReduceResult {
    Graph reduced;     // no vertices of degree <= 1; labels point back to g
    VertexSet forced;  // vertices (ids of g) committed to the solution
};

// Repeatedly commit a vertex of degree <= 1 and delete its closed
// neighborhood. Safe: MIS(g) = |forced| + MIS(reduced), and forced extends to
// a maximum independent set. Isolated vertices are committed as well.
inline ReduceResult reduce_degree_one(const Graph& g) {
    std::vector<char> alive(static_cast<size_t>(g.n()), 1);
    std::vector<int> deg(static_cast<size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v) deg[static_cast<size_t>(v)] = g.degree(v);

    VertexSet forced;
    auto remove_vertex = [&](Vertex v) {
        alive[static_cast<size_t>(v)] = 0;
        for (Vertex u : g.neighbors(v))
            if (alive[static_cast<size_t>(u)]) --deg[static_cast<size_t>(u)];
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 0; v < g.n(); ++v) {
            if (!alive[static_cast<size_t>(v)] || deg[static_cast<size_t>(v)] > 1) continue;
            forced.push_back(v);
            remove_vertex(v);
            for (Vertex u : g.neighbors(v))
                if (alive[static_cast<size_t>(u)]) remove_vertex(u);
            progress = true;
        }
    }

    VertexSet rest;
    for (int v = 0; v < g.n(); ++v)
        if (alive[static_cast<size_t>(v)]) rest.push_back(v);
    std::sort(forced.begin(), forced.end());
    return ReduceResult{induced_subgraph(g, rest), std::move(forced)};
}

}  // namespace mis
