#pragma once

// Test-only brute-force oracles. Everything here enumerates subsets directly
// and stays independent of the library's algorithmic paths, so frozen
// expected values and property checks do not share code with what they test.

#include <cstdint>
#include <vector>

#include "mis/graph.hpp"

namespace brute {

using mis::Graph;
using mis::Vertex;
using mis::VertexSet;

inline VertexSet mask_to_set(uint64_t m) {
    VertexSet s;
    for (int v = 0; m; ++v, m >>= 1)
        if (m & 1) s.push_back(v);
    return s;
}

inline bool independent(const Graph& g, uint64_t m) {
    VertexSet s = mask_to_set(m);
    return g.is_independent_set(s);
}

// exhaustive over all subsets; n <= ~20
inline int mis_size(const Graph& g) {
    int best = 0;
    for (uint64_t m = 0; m < (uint64_t{1} << g.n()); ++m)
        if (std::popcount(m) > best && independent(g, m)) best = std::popcount(m);
    return best;
}

// lexicographically least maximum independent set, by direct comparison
inline VertexSet mis_lexmin(const Graph& g) {
    VertexSet best;
    bool have = false;
    for (uint64_t m = 0; m < (uint64_t{1} << g.n()); ++m) {
        if (!independent(g, m)) continue;
        VertexSet s = mask_to_set(m);
        if (!have || mis::better_set(s, best)) {
            best = s;
            have = true;
        }
    }
    return best;
}

inline std::vector<VertexSet> all_maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for (uint64_t m = 0; m < (uint64_t{1} << g.n()); ++m) {
        if (!independent(g, m)) continue;
        bool maximal = true;
        for (int v = 0; v < g.n() && maximal; ++v)
            if (!(m & (uint64_t{1} << v)) && independent(g, m | (uint64_t{1} << v))) maximal = false;
        if (maximal) out.push_back(mask_to_set(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// does some 2t-subset induce exactly t disjoint edges?
inline bool has_tk2(const Graph& g, int t) {
    int n = g.n();
    for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
        if (std::popcount(m) != 2 * t) continue;
        VertexSet s = mask_to_set(m);
        int edges = 0;
        bool deg_ok = true;
        for (size_t i = 0; i < s.size() && deg_ok; ++i) {
            int d = 0;
            for (size_t j = 0; j < s.size(); ++j)
                if (i != j && g.has_edge(s[i], s[j])) ++d;
            if (d != 1) deg_ok = false;
            for (size_t j = i + 1; j < s.size(); ++j)
                if (g.has_edge(s[i], s[j])) ++edges;
        }
        if (deg_ok && edges == t) return true;
    }
    return false;
}

inline bool is_forest(const Graph& g) {
    std::vector<int> parent(static_cast<size_t>(g.n()), -2);
    for (int s = 0; s < g.n(); ++s) {
        if (parent[static_cast<size_t>(s)] != -2) continue;
        parent[static_cast<size_t>(s)] = -1;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v)) {
                if (u == parent[static_cast<size_t>(v)]) continue;
                if (parent[static_cast<size_t>(u)] != -2) return false;
                parent[static_cast<size_t>(u)] = v;
                stack.push_back(u);
            }
        }
    }
    return true;
}

// any induced cycle of length in [4, max_len], by subset enumeration
inline bool has_hole_up_to(const Graph& g, int max_len) {
    int n = g.n();
    for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
        int size = std::popcount(m);
        if (size < 4 || size > max_len) continue;
        VertexSet s = mask_to_set(m);
        bool two_regular = true;
        for (size_t i = 0; i < s.size() && two_regular; ++i) {
            int d = 0;
            for (size_t j = 0; j < s.size(); ++j)
                if (i != j && g.has_edge(s[i], s[j])) ++d;
            two_regular = (d == 2);
        }
        if (two_regular && mis::is_connected_within(g, s)) return true;
    }
    return false;
}

inline bool is_chordal(const Graph& g) { return !has_hole_up_to(g, g.n()); }

}  // namespace brute
