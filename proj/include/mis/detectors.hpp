#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mis/graph.hpp"

namespace mis {

enum class PatternKind { induced_tk2, triangle_collection, hole, induced_minor_model };

// A concrete certificate that a pattern occurs in a graph. parts holds one
// vertex set per pattern vertex (or branch set); holes carry their cyclic
// vertex order instead.
struct PatternWitness {
    PatternKind kind;
    std::vector<VertexSet> parts;
    VertexSet cycle;  // holes only: vertices in cyclic order
};

// --- Witness checkers ---------------------------------------------------------

inline bool verify_tk2_witness(const Graph& g, const PatternWitness& w, int t) {
    if (w.kind != PatternKind::induced_tk2) return false;
    if (static_cast<int>(w.parts.size()) != t) return false;
    VertexSet all;
    for (const VertexSet& e : w.parts) {
        if (e.size() != 2 || !g.has_edge(e[0], e[1])) return false;
        all = set_union(all, e);
    }
    if (static_cast<int>(all.size()) != 2 * t) return false;
    // exactly t edges among the 2t vertices
    long long inside = 0;
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (g.has_edge(all[i], all[j])) ++inside;
    return inside == t;
}

inline bool verify_triangle_collection_witness(const Graph& g, const PatternWitness& w, int t) {
    if (w.kind != PatternKind::triangle_collection) return false;
    if (static_cast<int>(w.parts.size()) != t) return false;
    for (const VertexSet& tri : w.parts)
        if (tri.size() != 3 || !g.is_clique(tri)) return false;
    for (size_t i = 0; i < w.parts.size(); ++i)
        for (size_t j = i + 1; j < w.parts.size(); ++j) {
            if (!set_intersect(w.parts[i], w.parts[j]).empty()) return false;
            for (Vertex u : w.parts[i])
                for (Vertex v : w.parts[j])
                    if (g.has_edge(u, v)) return false;
        }
    return true;
}

inline bool verify_hole_witness(const Graph& g, const PatternWitness& w, int min_len = 4) {
    if (w.kind != PatternKind::hole) return false;
    const VertexSet& c = w.cycle;
    int len = static_cast<int>(c.size());
    if (len < min_len) return false;
    if (sorted_unique(c).size() != c.size()) return false;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.has_edge(c[static_cast<size_t>(i)], c[static_cast<size_t>(j)]) != consecutive)
                return false;
        }
    return true;
}

inline bool verify_induced_minor_witness(const Graph& g, const Graph& h, const PatternWitness& w) {
    if (w.kind != PatternKind::induced_minor_model) return false;
    if (static_cast<int>(w.parts.size()) != h.n()) return false;
    VertexSet all;
    for (const VertexSet& b : w.parts) {
        if (b.empty() || !is_connected_within(g, b)) return false;
        all.insert(all.end(), b.begin(), b.end());
    }
    if (sorted_unique(all).size() != all.size()) return false;  // disjoint
    for (int i = 0; i < h.n(); ++i)
        for (int j = i + 1; j < h.n(); ++j) {
            bool touch = false;
            for (Vertex u : w.parts[static_cast<size_t>(i)]) {
                for (Vertex v : w.parts[static_cast<size_t>(j)])
                    if (g.has_edge(u, v)) {
                        touch = true;
                        break;
                    }
                if (touch) break;
            }
            if (touch != h.has_edge(i, j)) return false;
        }
    return true;
}

// --- Induced tK2 ---------------------------------------------------------------

namespace detail {

// e and f are independent edges: disjoint endpoints and no edge between them.
inline bool edges_independent(const Graph& g, std::pair<int, int> e, std::pair<int, int> f) {
    std::array<int, 2> a{e.first, e.second}, b{f.first, f.second};
    for (int u : a)
        for (int v : b)
            if (u == v || g.has_edge(u, v)) return false;
    return true;
}

}  // namespace detail

// Exhaustive search over t-tuples of pairwise independent edges, in
// lexicographic edge order; the first witness found is the least one.
inline std::optional<PatternWitness> find_induced_tk2(const Graph& g, int t) {
    if (t <= 0) throw std::invalid_argument("find_induced_tk2: t must be positive");
    auto edges = g.edges();
    std::vector<std::pair<int, int>> chosen;
    std::optional<PatternWitness> found;

    std::function<bool(size_t)> rec = [&](size_t start) {
        if (static_cast<int>(chosen.size()) == t) {
            PatternWitness w;
            w.kind = PatternKind::induced_tk2;
            for (auto [u, v] : chosen) w.parts.push_back(VertexSet{u, v});
            found = std::move(w);
            return true;
        }
        for (size_t i = start; i < edges.size(); ++i) {
            bool ok = true;
            for (auto e : chosen)
                if (!detail::edges_independent(g, e, edges[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(edges[i]);
            if (rec(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    rec(0);
    return found;
}

// --- Triangle collections -------------------------------------------------------

namespace detail {

inline std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> tris;
    for (int a = 0; a < g.n(); ++a)
        for (Vertex b : g.neighbors(a)) {
            if (b <= a) continue;
            for (Vertex c : g.neighbors(b)) {
                if (c <= b) continue;
                if (g.has_edge(a, c)) tris.push_back({a, b, c});
            }
        }
    return tris;
}

inline bool triangles_independent(const Graph& g, const std::array<int, 3>& x,
                                  const std::array<int, 3>& y) {
    for (int u : x)
        for (int v : y)
            if (u == v || g.has_edge(u, v)) return false;
    return true;
}

// Visits every vertex set inducing t pairwise independent triangles, once per
// set (a set of 3t vertices whose induced subgraph is exactly t triangles
// decomposes uniquely into its components). Return false from the visitor to
// abort.
template <typename F>
inline void for_each_tc3(const Graph& g, int t, F&& visit) {
    auto tris = all_triangles(g);
    std::vector<size_t> chosen;
    std::function<bool(size_t)> rec = [&](size_t start) {
        if (static_cast<int>(chosen.size()) == t) {
            VertexSet x;
            x.reserve(static_cast<size_t>(3 * t));
            for (size_t i : chosen)
                for (int v : tris[i]) x.push_back(v);
            std::sort(x.begin(), x.end());
            return visit(static_cast<const VertexSet&>(x));
        }
        for (size_t i = start; i < tris.size(); ++i) {
            bool ok = true;
            for (size_t j : chosen)
                if (!triangles_independent(g, tris[j], tris[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(i);
            if (!rec(i + 1)) return false;
            chosen.pop_back();
        }
        return true;
    };
    if (t > 0) rec(0);
}

}  // namespace detail

inline std::optional<PatternWitness> find_triangle_collection(const Graph& g, int t) {
    if (t <= 0) throw std::invalid_argument("find_triangle_collection: t must be positive");
    auto tris = detail::all_triangles(g);
    std::vector<size_t> chosen;
    std::optional<PatternWitness> found;
    std::function<bool(size_t)> rec = [&](size_t start) {
        if (static_cast<int>(chosen.size()) == t) {
            PatternWitness w;
            w.kind = PatternKind::triangle_collection;
            for (size_t i : chosen)
                w.parts.push_back(VertexSet{tris[i][0], tris[i][1], tris[i][2]});
            found = std::move(w);
            return true;
        }
        for (size_t i = start; i < tris.size(); ++i) {
            bool ok = true;
            for (size_t j : chosen)
                if (!detail::triangles_independent(g, tris[j], tris[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(i);
            if (rec(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    rec(0);
    return found;
}

struct Tc3Stats {
    long long count = 0;                 // number of 3t-subsets inducing t independent triangles
    std::vector<long long> hit_counts;   // per vertex v: families meeting N[v]
};

inline Tc3Stats count_tc3_sets(const Graph& g, int t) {
    Tc3Stats stats;
    stats.hit_counts.assign(static_cast<size_t>(g.n()), 0);
    std::vector<char> mark(static_cast<size_t>(g.n()), 0);
    detail::for_each_tc3(g, t, [&](const VertexSet& x) {
        ++stats.count;
        VertexSet hit = x;
        for (Vertex v : x) mark[static_cast<size_t>(v)] = 1;
        for (Vertex v : x)
            for (Vertex u : g.neighbors(v))
                if (!mark[static_cast<size_t>(u)]) {
                    mark[static_cast<size_t>(u)] = 1;
                    hit.push_back(u);
                }
        for (Vertex v : hit) {
            ++stats.hit_counts[static_cast<size_t>(v)];
            mark[static_cast<size_t>(v)] = 0;
        }
        return true;
    });
    return stats;
}

// --- Short holes ----------------------------------------------------------------

// Enumerates vertex subsets of size 4..max_len in lexicographic order (shorter
// sizes first) and reports the first one that induces a cycle. Exact and
// deterministic; intended for small fixed max_len.
inline std::optional<PatternWitness> find_short_hole(const Graph& g, int max_len) {
    if (max_len < 4) throw std::invalid_argument("find_short_hole: max_len must be >= 4");
    int n = g.n();
    std::vector<int> inside_deg(static_cast<size_t>(n), 0);
    VertexSet chosen;

    auto close_cycle = [&]() -> std::optional<VertexSet> {
        for (Vertex v : chosen)
            if (inside_deg[static_cast<size_t>(v)] != 2) return std::nullopt;
        // 2-regular and connected within the subset means a single cycle;
        // the walk must never revisit (rules out unions of smaller cycles)
        std::vector<char> in_s(static_cast<size_t>(n), 0);
        for (Vertex v : chosen) in_s[static_cast<size_t>(v)] = 2;
        VertexSet order{chosen.front()};
        in_s[static_cast<size_t>(chosen.front())] = 1;
        Vertex prev = -1, cur = chosen.front();
        while (order.size() < chosen.size()) {
            Vertex next = -1;
            for (Vertex u : g.neighbors(cur))
                if (in_s[static_cast<size_t>(u)] == 2 && u != prev) {
                    next = u;
                    break;
                }
            if (next < 0) return std::nullopt;
            in_s[static_cast<size_t>(next)] = 1;
            order.push_back(next);
            prev = cur;
            cur = next;
        }
        if (!g.has_edge(order.back(), order.front())) return std::nullopt;  // not one cycle
        return order;
    };

    std::optional<PatternWitness> found;
    std::function<bool(int, int)> rec = [&](int start, int len) {
        if (static_cast<int>(chosen.size()) == len) {
            if (auto cyc = close_cycle()) {
                found = PatternWitness{PatternKind::hole, {}, std::move(*cyc)};
                return true;
            }
            return false;
        }
        int need = len - static_cast<int>(chosen.size());
        for (int v = start; v + need <= n; ++v) {
            int dv = 0;
            bool ok = true;
            for (Vertex u : chosen)
                if (g.has_edge(u, v)) {
                    ++dv;
                    if (dv > 2 || inside_deg[static_cast<size_t>(u)] >= 2) {
                        ok = false;
                        break;
                    }
                }
            if (!ok) continue;
            chosen.push_back(v);
            inside_deg[static_cast<size_t>(v)] = dv;
            for (Vertex u : chosen)
                if (u != v && g.has_edge(u, v)) ++inside_deg[static_cast<size_t>(u)];
            if (rec(v + 1, len)) return true;
            for (Vertex u : chosen)
                if (u != v && g.has_edge(u, v)) --inside_deg[static_cast<size_t>(u)];
            inside_deg[static_cast<size_t>(v)] = 0;
            chosen.pop_back();
        }
        return false;
    };

    for (int len = 4; len <= max_len && len <= n; ++len)
        if (rec(0, len)) break;
    return found;
}

// --- Chordality -----------------------------------------------------------------

struct ChordalityResult {
    std::optional<std::vector<int>> elimination_order;  // eliminate front first
    std::optional<PatternWitness> hole;

    bool chordal() const { return elimination_order.has_value(); }
};

namespace detail {

// Hole through some vertex v and a non-adjacent pair x,y of its neighbors:
// a shortest x-y path avoiding v and N(v)\{x,y} closes an induced cycle of
// length >= 4. A non-chordal graph always yields one such triple.
inline std::optional<VertexSet> hole_from_nonchordal(const Graph& g) {
    int n = g.n();
    for (int v = 0; v < n; ++v) {
        const VertexSet& nb = g.neighbors(v);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                Vertex x = nb[i], y = nb[j];
                if (g.has_edge(x, y)) continue;
                std::vector<char> blocked(static_cast<size_t>(n), 0);
                blocked[static_cast<size_t>(v)] = 1;
                for (Vertex u : nb)
                    if (u != x && u != y) blocked[static_cast<size_t>(u)] = 1;
                std::vector<int> parent(static_cast<size_t>(n), -2);
                std::deque<Vertex> queue{x};
                parent[static_cast<size_t>(x)] = -1;
                while (!queue.empty() && parent[static_cast<size_t>(y)] == -2) {
                    Vertex c = queue.front();
                    queue.pop_front();
                    for (Vertex u : g.neighbors(c))
                        if (!blocked[static_cast<size_t>(u)] && parent[static_cast<size_t>(u)] == -2) {
                            parent[static_cast<size_t>(u)] = c;
                            queue.push_back(u);
                        }
                }
                if (parent[static_cast<size_t>(y)] == -2) continue;
                VertexSet path;
                for (Vertex c = y; c != -1; c = parent[static_cast<size_t>(c)]) path.push_back(c);
                std::reverse(path.begin(), path.end());  // x .. y
                VertexSet cyc{v};
                cyc.insert(cyc.end(), path.begin(), path.end());
                return cyc;
            }
    }
    return std::nullopt;
}

}  // namespace detail

// Maximum-cardinality search; the reverse visit order is a perfect
// elimination ordering iff the graph is chordal. On failure a hole witness is
// extracted instead.
inline ChordalityResult chordality(const Graph& g) {
    int n = g.n();
    std::vector<int> weight(static_cast<size_t>(n), 0);
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::vector<int> visit_order;
    visit_order.reserve(static_cast<size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[static_cast<size_t>(v)] &&
                (best < 0 || weight[static_cast<size_t>(v)] > weight[static_cast<size_t>(best)]))
                best = v;
        visited[static_cast<size_t>(best)] = 1;
        visit_order.push_back(best);
        for (Vertex u : g.neighbors(best))
            if (!visited[static_cast<size_t>(u)]) ++weight[static_cast<size_t>(u)];
    }
    std::vector<int> elim(visit_order.rbegin(), visit_order.rend());
    std::vector<int> pos(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(elim[static_cast<size_t>(i)])] = i;

    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
        Vertex v = elim[static_cast<size_t>(i)];
        VertexSet later;
        for (Vertex u : g.neighbors(v))
            if (pos[static_cast<size_t>(u)] > i) later.push_back(u);
        for (size_t a = 0; a < later.size() && ok; ++a)
            for (size_t b = a + 1; b < later.size(); ++b)
                if (!g.has_edge(later[a], later[b])) {
                    ok = false;
                    break;
                }
    }

    ChordalityResult res;
    if (ok) {
        res.elimination_order = std::move(elim);
    } else {
        auto cyc = detail::hole_from_nonchordal(g);
        if (!cyc) throw Error("chordality: elimination check failed but no hole found");
        res.hole = PatternWitness{PatternKind::hole, {}, std::move(*cyc)};
    }
    return res;
}

// --- Induced-minor oracle --------------------------------------------------------

struct InducedMinorCaps {
    int host_cap = 16;
    int pattern_cap = 8;
};

namespace detail {

inline long long cycle_rank(const Graph& g) {
    return g.m() - g.n() + static_cast<long long>(connected_components(g).size());
}

// Pattern-vertex placement order: component by component, each next vertex
// adjacent to an already ordered one when possible, so touch constraints bind
// as early as possible.
inline std::vector<int> pattern_order(const Graph& h) {
    std::vector<int> order;
    std::vector<char> placed(static_cast<size_t>(h.n()), 0);
    for (const VertexSet& comp : connected_components(h)) {
        Vertex start = comp.front();
        for (Vertex v : comp)
            if (h.degree(v) > h.degree(start)) start = v;
        order.push_back(start);
        placed[static_cast<size_t>(start)] = 1;
        for (size_t filled = 1; filled < comp.size(); ++filled) {
            int best = -1, best_links = -1;
            for (Vertex v : comp) {
                if (placed[static_cast<size_t>(v)]) continue;
                int links = 0;
                for (Vertex u : h.neighbors(v))
                    if (placed[static_cast<size_t>(u)]) ++links;
                if (links > best_links || (links == best_links && best >= 0 && v < best)) {
                    best = v;
                    best_links = links;
                }
            }
            order.push_back(best);
            placed[static_cast<size_t>(best)] = 1;
        }
    }
    return order;
}

}  // namespace detail

// Exhaustive search for an induced-minor model of h in g: disjoint connected
// branch sets whose touch pattern equals E(h) exactly. Exponential; guarded by
// explicit caps. Used as the class-membership oracle at desk scale.
inline std::optional<PatternWitness> has_induced_minor(const Graph& g, const Graph& h,
                                                       const InducedMinorCaps& caps = {}) {
    if (g.n() > caps.host_cap)
        throw CapExceededError("has_induced_minor: host graph exceeds cap", caps.host_cap, g.n());
    if (h.n() > caps.pattern_cap)
        throw CapExceededError("has_induced_minor: pattern graph exceeds cap", caps.pattern_cap,
                               h.n());
    if (g.n() > 62) throw CapExceededError("has_induced_minor: host graph too large", 62, g.n());

    int k = h.n();
    if (k == 0) return PatternWitness{PatternKind::induced_minor_model, {}, {}};
    if (k > g.n()) return std::nullopt;
    // cycle rank never increases under vertex deletion or edge contraction
    if (detail::cycle_rank(h) > detail::cycle_rank(g)) return std::nullopt;

    int n = g.n();
    std::vector<uint64_t> adj(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v)) adj[static_cast<size_t>(v)] |= uint64_t{1} << u;
    const uint64_t full = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);

    std::vector<int> order = detail::pattern_order(h);
    std::vector<uint64_t> branch(static_cast<size_t>(k), 0);       // by order index
    std::vector<uint64_t> branch_nbr(static_cast<size_t>(k), 0);   // open neighborhood masks
    uint64_t avail = full;

    auto open_nbr = [&](uint64_t s) {
        uint64_t nb = 0;
        for (uint64_t m = s; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            nb |= adj[static_cast<size_t>(v)];
        }
        return nb & ~s;
    };

    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == k) return true;
        Vertex hv = order[static_cast<size_t>(i)];
        if (std::popcount(avail) < k - i) return false;
        // any placed set with a still-unplaced pattern neighbor must keep
        // reachable contact vertices
        for (int j = 0; j < i; ++j) {
            bool pending = false;
            for (int jj = i; jj < k && !pending; ++jj)
                if (h.has_edge(order[static_cast<size_t>(j)], order[static_cast<size_t>(jj)]))
                    pending = true;
            if (pending && (branch_nbr[static_cast<size_t>(j)] & avail) == 0) return false;
        }

        uint64_t pool = avail;
        std::vector<int> must;
        for (int j = 0; j < i; ++j) {
            if (h.has_edge(hv, order[static_cast<size_t>(j)]))
                must.push_back(j);
            else
                pool &= ~branch_nbr[static_cast<size_t>(j)];
        }

        // enumerate connected subsets of pool, canonically by minimum vertex
        std::function<bool(uint64_t, uint64_t, uint64_t, uint64_t)> grow =
            [&](uint64_t s, uint64_t cand, uint64_t banned, uint64_t sub) -> bool {
            bool ok = true;
            for (int j : must)
                if ((s & branch_nbr[static_cast<size_t>(j)]) == 0) {
                    ok = false;
                    break;
                }
            if (ok) {
                branch[static_cast<size_t>(i)] = s;
                branch_nbr[static_cast<size_t>(i)] = open_nbr(s);
                avail &= ~s;
                if (place(i + 1)) return true;
                avail |= s;
            }
            uint64_t processed = 0;
            for (uint64_t c = cand; c;) {
                uint64_t vb = c & (~c + 1);
                c &= ~vb;
                int v = std::countr_zero(vb);
                uint64_t next = (c | (adj[static_cast<size_t>(v)] & sub)) & ~(s | vb) &
                                ~(banned | processed);
                if (grow(s | vb, next, banned | processed, sub)) return true;
                processed |= vb;
            }
            return false;
        };

        for (uint64_t seeds = pool; seeds;) {
            uint64_t sb = seeds & (~seeds + 1);
            seeds &= ~sb;
            int seed = std::countr_zero(sb);
            uint64_t sub = pool & ~(sb - 1);
            if (grow(sb, adj[static_cast<size_t>(seed)] & sub & ~sb, 0, sub)) return true;
        }
        return false;
    };

    if (!place(0)) return std::nullopt;

    PatternWitness w;
    w.kind = PatternKind::induced_minor_model;
    w.parts.assign(static_cast<size_t>(k), {});
    for (int i = 0; i < k; ++i) {
        VertexSet part;
        for (uint64_t m = branch[static_cast<size_t>(i)]; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            part.push_back(v);
        }
        w.parts[static_cast<size_t>(order[static_cast<size_t>(i)])] = std::move(part);
    }
    return w;
}

}  // namespace mis
