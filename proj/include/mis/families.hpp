#pragma once

#include "mis/graph.hpp"

namespace mis {

inline Graph make_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph make_cycle(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline Graph make_complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph make_complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline Graph make_star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline Graph make_edgeless(int n) { return Graph(n); }

inline Graph make_petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);      // outer cycle
        g.add_edge(i, i + 5);            // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n() + b.n());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
    return g;
}

inline Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) g.add_edge(u, a.n() + v);
    return g;
}

// t disjoint triangles.
inline Graph make_t_triangles(int t) {
    Graph g(3 * t);
    for (int i = 0; i < t; ++i) {
        g.add_edge(3 * i, 3 * i + 1);
        g.add_edge(3 * i + 1, 3 * i + 2);
        g.add_edge(3 * i, 3 * i + 2);
    }
    return g;
}

// t disjoint edges, fully joined to one apex vertex (id 2t).
inline Graph make_k1_tk2(int t) {
    Graph g(2 * t + 1);
    for (int i = 0; i < t; ++i) g.add_edge(2 * i, 2 * i + 1);
    for (int v = 0; v < 2 * t; ++v) g.add_edge(2 * t, v);
    return g;
}

// t disjoint triangles plus a disjoint 4-cycle (on the last 4 vertices).
inline Graph make_tc3_c4(int t) {
    Graph g(3 * t + 4);
    for (int i = 0; i < t; ++i) {
        g.add_edge(3 * i, 3 * i + 1);
        g.add_edge(3 * i + 1, 3 * i + 2);
        g.add_edge(3 * i, 3 * i + 2);
    }
    int b = 3 * t;
    g.add_edge(b, b + 1);
    g.add_edge(b + 1, b + 2);
    g.add_edge(b + 2, b + 3);
    g.add_edge(b + 3, b);
    return g;
}

// t disjoint edges.
inline Graph make_tk2(int t) {
    Graph g(2 * t);
    for (int i = 0; i < t; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

}  // namespace mis
