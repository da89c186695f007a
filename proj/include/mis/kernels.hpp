#pragma once

#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <vector>

#include "mis/detectors.hpp"
#include "mis/graph.hpp"

namespace mis {

inline constexpr int kDefaultOracleCap = 24;

// Deterministic maximal (not maximum) independent set: sweep ids ascending.
inline VertexSet greedy_maximal_is(const Graph& g) {
    std::vector<char> blocked(static_cast<size_t>(g.n()), 0);
    VertexSet out;
    for (int v = 0; v < g.n(); ++v) {
        if (blocked[static_cast<size_t>(v)]) continue;
        out.push_back(v);
        for (Vertex u : g.neighbors(v)) blocked[static_cast<size_t>(u)] = 1;
    }
    return out;
}

namespace detail {

inline std::vector<uint64_t> adjacency_masks(const Graph& g) {
    std::vector<uint64_t> adj(static_cast<size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v)
        for (Vertex u : g.neighbors(v)) adj[static_cast<size_t>(v)] |= uint64_t{1} << u;
    return adj;
}

// Exhaustive branch-and-bound for alpha over an alive mask. Max-degree
// branching with a greedy seed and degree-<=1 peeling; trustworthy over fast.
class MisBound {
public:
    explicit MisBound(const std::vector<uint64_t>& adj) : adj_(adj) {}

    int alpha(uint64_t alive) {
        best_ = greedy_size(alive);
        search(alive, 0);
        return best_;
    }

private:
    int greedy_size(uint64_t alive) const {
        int size = 0;
        while (alive) {
            int v = std::countr_zero(alive);
            alive &= ~(adj_[static_cast<size_t>(v)] | (uint64_t{1} << v));
            ++size;
        }
        return size;
    }

    void search(uint64_t alive, int cur) {
        // peel vertices of degree <= 1: always safe to take
        while (alive) {
            uint64_t m = alive;
            int pick = -1;
            while (m) {
                int v = std::countr_zero(m);
                m &= m - 1;
                if (std::popcount(adj_[static_cast<size_t>(v)] & alive) <= 1) {
                    pick = v;
                    break;
                }
            }
            if (pick < 0) break;
            ++cur;
            alive &= ~(adj_[static_cast<size_t>(pick)] | (uint64_t{1} << pick));
        }
        if (!alive) {
            if (cur > best_) best_ = cur;
            return;
        }
        if (cur + std::popcount(alive) <= best_) return;

        int v = -1, vdeg = -1;
        for (uint64_t m = alive; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            int d = std::popcount(adj_[static_cast<size_t>(u)] & alive);
            if (d > vdeg) {
                vdeg = d;
                v = u;
            }
        }
        search(alive & ~(adj_[static_cast<size_t>(v)] | (uint64_t{1} << v)), cur + 1);
        search(alive & ~(uint64_t{1} << v), cur);
    }

    const std::vector<uint64_t>& adj_;
    int best_ = 0;
};

// Greedy canonicalization: the lexicographically least maximum independent
// set, built by forcing each vertex in id order whenever taking it keeps the
// optimum reachable. alpha must be exact on induced subgraphs of g.
template <typename AlphaFn>
VertexSet lex_min_max_is(const Graph& g, AlphaFn&& alpha) {
    VertexSet taken;
    VertexSet avail = g.vertices();
    int remaining = alpha(induced_subgraph(g, avail));
    for (int v = 0; v < g.n() && remaining > 0; ++v) {
        if (!set_contains(avail, v)) continue;
        VertexSet rest = set_minus(avail, g.closed_neighborhood(VertexSet{v}));
        if (alpha(induced_subgraph(g, rest)) + 1 == remaining) {
            taken.push_back(v);
            avail = std::move(rest);
            --remaining;
        }
    }
    return taken;
}

}  // namespace detail

// --- Exhaustive oracle ----------------------------------------------------------

inline int mis_oracle_size(const Graph& g, int cap = kDefaultOracleCap) {
    if (g.n() > cap) throw CapExceededError("mis_oracle: graph exceeds cap", cap, g.n());
    if (g.n() > 62) throw CapExceededError("mis_oracle: graph too large", 62, g.n());
    if (g.n() == 0) return 0;
    auto adj = detail::adjacency_masks(g);
    uint64_t all = (g.n() == 64) ? ~uint64_t{0} : ((uint64_t{1} << g.n()) - 1);
    return detail::MisBound(adj).alpha(all);
}

// Maximum independent set by exhaustive branch-and-bound; returns the
// lexicographically least optimum.
inline VertexSet mis_oracle(const Graph& g, int cap = kDefaultOracleCap) {
    if (g.n() > cap) throw CapExceededError("mis_oracle: graph exceeds cap", cap, g.n());
    return detail::lex_min_max_is(g, [cap](const Graph& sub) { return mis_oracle_size(sub, cap); });
}

// --- Maximal-IS enumeration (Tsukiyama) ------------------------------------------

// Enumerates every maximal independent set exactly once, by extending maximal
// sets of the first k vertices to the first k+1 with a parent test that kills
// duplicates. Throws once more than cap sets have been produced: callers use
// the cap to detect violated counting assumptions rather than truncate.
inline std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g, long long cap) {
    int n = g.n();
    if (n > 62) throw CapExceededError("enumerate_maximal_independent_sets: graph too large", 62, n);
    auto adj = detail::adjacency_masks(g);

    auto below = [](int k) { return (k >= 64) ? ~uint64_t{0} : ((uint64_t{1} << k) - 1); };
    auto is_maximal = [&](int k, uint64_t s) {
        for (int y = 0; y < k; ++y)
            if (!(s & (uint64_t{1} << y)) && (adj[static_cast<size_t>(y)] & s) == 0) return false;
        return true;
    };
    auto greedy_complete = [&](int k, uint64_t s) {
        for (int y = 0; y < k; ++y)
            if (!(s & (uint64_t{1} << y)) && (adj[static_cast<size_t>(y)] & s) == 0)
                s |= uint64_t{1} << y;
        return s;
    };

    std::vector<VertexSet> out;
    std::function<void(int, uint64_t)> rec = [&](int k, uint64_t maximal_set) {
        if (k == n) {
            VertexSet s;
            for (uint64_t m = maximal_set; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                s.push_back(v);
            }
            out.push_back(std::move(s));
            if (static_cast<long long>(out.size()) > cap)
                throw CapExceededError("enumerate_maximal_independent_sets: cap exceeded", cap,
                                       static_cast<long long>(out.size()));
            return;
        }
        uint64_t xb = uint64_t{1} << k;
        uint64_t nx = adj[static_cast<size_t>(k)] & below(k);
        if ((maximal_set & nx) == 0) {
            rec(k + 1, maximal_set | xb);
        } else {
            rec(k + 1, maximal_set);
            uint64_t j = (maximal_set & ~nx) | xb;
            if (is_maximal(k + 1, j) && greedy_complete(k, maximal_set & ~nx) == maximal_set)
                rec(k + 1, j);
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// --- Bipartite kernel -------------------------------------------------------------

namespace detail {

// Proper 2-coloring, or an odd cycle on failure.
inline std::vector<int> two_color(const Graph& g) {
    int n = g.n();
    std::vector<int> color(static_cast<size_t>(n), -1), parent(static_cast<size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] >= 0) continue;
        color[static_cast<size_t>(s)] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex u : g.neighbors(v)) {
                if (color[static_cast<size_t>(u)] < 0) {
                    color[static_cast<size_t>(u)] = 1 - color[static_cast<size_t>(v)];
                    parent[static_cast<size_t>(u)] = v;
                    queue.push_back(u);
                } else if (color[static_cast<size_t>(u)] == color[static_cast<size_t>(v)]) {
                    // close the odd cycle through the BFS tree
                    std::vector<char> on_path(static_cast<size_t>(n), 0);
                    VertexSet va;
                    for (Vertex c = v; c != -1; c = parent[static_cast<size_t>(c)]) {
                        on_path[static_cast<size_t>(c)] = 1;
                        va.push_back(c);
                    }
                    Vertex lca = u;
                    VertexSet ub;
                    while (!on_path[static_cast<size_t>(lca)]) {
                        ub.push_back(lca);
                        lca = parent[static_cast<size_t>(lca)];
                    }
                    VertexSet cycle;
                    for (Vertex c : va) {
                        cycle.push_back(c);
                        if (c == lca) break;
                    }
                    std::reverse(cycle.begin(), cycle.end());       // lca .. v
                    cycle.insert(cycle.end(), ub.begin(), ub.end());  // u .. child-of-lca
                    // cycle order: lca..v, edge vu, u..child-of-lca, closing at lca
                    throw NotBipartiteError("graph is not bipartite", cycle);
                }
            }
        }
    }
    return color;
}

inline int hopcroft_karp(const Graph& g, const std::vector<int>& color, std::vector<int>& match) {
    int n = g.n();
    const int kInf = std::numeric_limits<int>::max();
    match.assign(static_cast<size_t>(n), -1);
    VertexSet left;
    for (int v = 0; v < n; ++v)
        if (color[static_cast<size_t>(v)] == 0) left.push_back(v);

    std::vector<int> dist(static_cast<size_t>(n), 0);
    auto bfs = [&]() {
        std::deque<Vertex> queue;
        int reachable_free = kInf;
        for (Vertex u : left) {
            if (match[static_cast<size_t>(u)] < 0) {
                dist[static_cast<size_t>(u)] = 0;
                queue.push_back(u);
            } else {
                dist[static_cast<size_t>(u)] = kInf;
            }
        }
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            if (dist[static_cast<size_t>(u)] >= reachable_free) continue;
            for (Vertex w : g.neighbors(u)) {
                Vertex next = match[static_cast<size_t>(w)];
                if (next < 0) {
                    reachable_free = std::min(reachable_free, dist[static_cast<size_t>(u)] + 1);
                } else if (dist[static_cast<size_t>(next)] == kInf) {
                    dist[static_cast<size_t>(next)] = dist[static_cast<size_t>(u)] + 1;
                    queue.push_back(next);
                }
            }
        }
        return reachable_free != kInf;
    };
    std::function<bool(Vertex)> dfs = [&](Vertex u) {
        for (Vertex w : g.neighbors(u)) {
            Vertex next = match[static_cast<size_t>(w)];
            if (next < 0 ||
                (dist[static_cast<size_t>(next)] == dist[static_cast<size_t>(u)] + 1 && dfs(next))) {
                match[static_cast<size_t>(u)] = w;
                match[static_cast<size_t>(w)] = u;
                return true;
            }
        }
        dist[static_cast<size_t>(u)] = kInf;
        return false;
    };

    int matching = 0;
    while (bfs())
        for (Vertex u : left)
            if (match[static_cast<size_t>(u)] < 0 && dfs(u)) ++matching;
    return matching;
}

}  // namespace detail

inline int max_matching_bipartite(const Graph& g) {
    auto color = detail::two_color(g);
    std::vector<int> match;
    return detail::hopcroft_karp(g, color, match);
}

// Maximum independent set of a bipartite graph: complement of the vertex
// cover extracted from a maximum matching by alternating reachability.
// Canonicalized to the lexicographically least optimum afterwards.
inline VertexSet mis_bipartite(const Graph& g) {
    auto color = detail::two_color(g);  // throws NotBipartiteError with odd cycle
    std::vector<int> match;
    int matching = detail::hopcroft_karp(g, color, match);

    // Z: vertices reachable from unmatched left vertices along alternating
    // paths; cover = (L \ Z) u (R n Z), independent set = complement.
    int n = g.n();
    std::vector<char> in_z(static_cast<size_t>(n), 0);
    std::deque<Vertex> queue;
    for (int v = 0; v < n; ++v)
        if (color[static_cast<size_t>(v)] == 0 && match[static_cast<size_t>(v)] < 0) {
            in_z[static_cast<size_t>(v)] = 1;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        if (color[static_cast<size_t>(v)] == 0) {
            for (Vertex w : g.neighbors(v))
                if (match[static_cast<size_t>(v)] != w && !in_z[static_cast<size_t>(w)]) {
                    in_z[static_cast<size_t>(w)] = 1;
                    queue.push_back(w);
                }
        } else if (match[static_cast<size_t>(v)] >= 0 &&
                   !in_z[static_cast<size_t>(match[static_cast<size_t>(v)])]) {
            in_z[static_cast<size_t>(match[static_cast<size_t>(v)])] = 1;
            queue.push_back(match[static_cast<size_t>(v)]);
        }
    }
    VertexSet konig_is;
    for (int v = 0; v < n; ++v) {
        bool left = color[static_cast<size_t>(v)] == 0;
        if ((left && in_z[static_cast<size_t>(v)]) || (!left && !in_z[static_cast<size_t>(v)]))
            konig_is.push_back(v);
    }
    if (static_cast<int>(konig_is.size()) != n - matching)
        throw Error("mis_bipartite: cover extraction does not match Konig size");

    VertexSet canonical = detail::lex_min_max_is(g, [](const Graph& sub) {
        auto c = detail::two_color(sub);
        std::vector<int> m;
        return sub.n() - detail::hopcroft_karp(sub, c, m);
    });
    if (canonical.size() != konig_is.size())
        throw Error("mis_bipartite: canonicalization changed the optimum");
    return canonical;
}

// --- Chordal kernel ----------------------------------------------------------------

namespace detail {

inline int alpha_chordal(const Graph& g, const std::vector<int>& elimination_order) {
    std::vector<char> blocked(static_cast<size_t>(g.n()), 0);
    int size = 0;
    for (Vertex v : elimination_order) {
        if (blocked[static_cast<size_t>(v)]) continue;
        ++size;
        blocked[static_cast<size_t>(v)] = 1;
        for (Vertex u : g.neighbors(v)) blocked[static_cast<size_t>(u)] = 1;
    }
    return size;
}

}  // namespace detail

// Maximum independent set of a chordal graph: greedy sweep along a perfect
// elimination ordering (take an eliminable vertex, drop its closed
// neighborhood). Canonicalized to the lexicographically least optimum.
inline VertexSet mis_chordal(const Graph& g) {
    ChordalityResult ch = chordality(g);
    if (!ch.chordal())
        throw NotChordalError("mis_chordal: graph has a hole", ch.hole->cycle);
    return detail::lex_min_max_is(g, [](const Graph& sub) {
        ChordalityResult c = chordality(sub);
        if (!c.chordal()) throw NotChordalError("mis_chordal: induced subgraph has a hole", c.hole->cycle);
        return detail::alpha_chordal(sub, *c.elimination_order);
    });
}

}  // namespace mis
