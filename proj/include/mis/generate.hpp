#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "mis/detectors.hpp"
#include "mis/families.hpp"
#include "mis/graph.hpp"

namespace mis {

// Thin deterministic RNG: raw mt19937_64 draws only, no std::distributions,
// so a seed pins the exact instance across platforms and library versions.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // uniform in [lo, hi] inclusive
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    bool chance(double p) {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }

private:
    std::mt19937_64 eng_;
};

inline Graph gen_gnp(int n, double p, Rng& rng) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(p)) g.add_edge(i, j);
    return g;
}

// Uniform attachment tree: each vertex links to a random earlier one.
inline Graph gen_tree(int n, Rng& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, rng.uniform(0, v - 1));
    return g;
}

// A forest: a tree with a random subset of its edges dropped by splitting
// vertices into independent root groups.
inline Graph gen_forest(int n, double keep_p, Rng& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        if (rng.chance(keep_p)) g.add_edge(v, rng.uniform(0, v - 1));
    return g;
}

// Chordal by construction: every new vertex attaches to a clique (greedily
// grown inside a random earlier vertex's neighborhood), so the reverse
// insertion order is a perfect elimination ordering.
inline Graph gen_chordal(int n, int max_clique, Rng& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        int anchor = rng.uniform(0, v - 1);
        VertexSet clique{anchor};
        VertexSet candidates = g.neighbors(anchor);
        // deterministic shuffle
        for (size_t i = candidates.size(); i > 1; --i)
            std::swap(candidates[i - 1], candidates[static_cast<size_t>(rng.uniform(0, static_cast<int>(i) - 1))]);
        int want = rng.uniform(1, std::max(1, max_clique));
        for (Vertex c : candidates) {
            if (static_cast<int>(clique.size()) >= want) break;
            bool ok = true;
            for (Vertex w : clique)
                if (!g.has_edge(c, w)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(c);
        }
        for (Vertex w : clique) g.add_edge(v, w);
    }
    return g;
}

inline Graph gen_long_cycle(int n) { return make_cycle(n); }

// Random bipartite graph on a random split.
inline Graph gen_bipartite(int n, double p, Rng& rng) {
    Graph g(n);
    std::vector<char> side(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) side[static_cast<size_t>(v)] = rng.chance(0.5) ? 1 : 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (side[static_cast<size_t>(i)] != side[static_cast<size_t>(j)] && rng.chance(p))
                g.add_edge(i, j);
    return g;
}

struct RejectionResult {
    Graph graph;
    int rejections = 0;
};

// Draw G(n,p) until the pattern is not an induced minor; the accepted graph
// is certified in class by the exhaustive oracle.
inline RejectionResult gen_in_class_rejection(const Graph& pattern, int n, double p, Rng& rng,
                                              int max_attempts = 5000,
                                              const InducedMinorCaps& caps = {}) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g = gen_gnp(n, p, rng);
        if (!has_induced_minor(g, pattern, caps))
            return RejectionResult{std::move(g), attempt};
    }
    throw Error("gen_in_class_rejection: rejection budget exhausted after " +
                std::to_string(max_attempts) + " attempts");
}

}  // namespace mis
