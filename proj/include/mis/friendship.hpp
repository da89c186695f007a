#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mis/checks.hpp"
#include "mis/detectors.hpp"
#include "mis/graph.hpp"
#include "mis/kernels.hpp"

namespace mis {

// Window length of the layered decomposition.
inline long long f_bound(int t) {
    if (t < 1) throw std::invalid_argument("f_bound: t must be positive");
    long long tt = static_cast<long long>(t) * t;
    return tt * (6 * tt + 2);
}

namespace detail {

inline long long clamped_power(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base > 0 && r > (int64_t{1} << 62) / base) return int64_t{1} << 62;
        r *= base;
    }
    return r;
}

}  // namespace detail

// --- Bounded-layer kernel ---------------------------------------------------------

// Maximum independent set of a graph whose vertices split into consecutive
// BFS layers (edges never skip a layer). Per layer, all maximal independent
// sets are enumerated (their count is polynomially bounded when no t disjoint
// edges fit inside a layer); every tuple of per-layer choices induces a
// bipartite graph by layer parity, solved exactly by matching. Exceeding the
// per-layer counting bound certifies the input violates the class assumption.
inline VertexSet mis_bounded_layers(const Graph& g_sub, const std::vector<VertexSet>& layers,
                                    int t) {
    if (t < 1) throw std::invalid_argument("mis_bounded_layers: t must be positive");
    int n = g_sub.n();
    std::vector<int> layer_of(static_cast<size_t>(n), -1);
    for (size_t j = 0; j < layers.size(); ++j)
        for (Vertex v : layers[j]) {
            if (v < 0 || v >= n || layer_of[static_cast<size_t>(v)] != -1)
                throw std::invalid_argument("mis_bounded_layers: layers must partition the vertices");
            layer_of[static_cast<size_t>(v)] = static_cast<int>(j);
        }
    for (int v = 0; v < n; ++v)
        if (layer_of[static_cast<size_t>(v)] == -1)
            throw std::invalid_argument("mis_bounded_layers: layers must partition the vertices");
    for (auto [u, w] : g_sub.edges())
        if (std::abs(layer_of[static_cast<size_t>(u)] - layer_of[static_cast<size_t>(w)]) > 1)
            throw std::invalid_argument("mis_bounded_layers: an edge skips a layer");

    if (n == 0) return {};

    // per-layer maximal independent sets, already lifted to g_sub ids
    std::vector<std::vector<VertexSet>> choices;
    for (const VertexSet& layer : layers) {
        Graph sub = induced_subgraph(g_sub, layer);
        long long cap = std::max<long long>(
            1, detail::clamped_power(static_cast<long long>(sub.n()), 2 * t - 1));
        std::vector<VertexSet> sets;
        try {
            sets = enumerate_maximal_independent_sets(sub, cap);
        } catch (const CapExceededError& e) {
            throw ClassViolationError(
                "alekseev-layer-bound",
                "a BFS layer has more maximal independent sets than the tK2-free bound allows",
                layer);
        }
        for (VertexSet& s : sets) s = lift(sub, s);
        choices.push_back(std::move(sets));
    }

    VertexSet best;
    std::vector<const VertexSet*> pick(choices.size(), nullptr);
    std::function<void(size_t, size_t)> run = [&](size_t j, size_t total) {
        if (j == choices.size()) {
            if (total <= best.size()) return;  // union can only shrink under matching
            VertexSet all;
            for (const VertexSet* p : pick) all = set_union(all, *p);
            Graph sub = induced_subgraph(g_sub, all);
            VertexSet is = lift(sub, mis_bipartite(sub));
            if (better_set(is, best)) best = is;
            return;
        }
        for (const VertexSet& s : choices[j]) {
            pick[j] = &s;
            run(j + 1, total + s.size());
        }
    };
    run(0, 0);
    return best;
}

// --- X selection (the tK2 cut) ------------------------------------------------------

struct CutSelection {
    VertexSet x;                        // 2t vertices inducing t disjoint edges
    int largest_component_size = 0;     // of g - x, maximized over all candidates
    std::vector<VertexSet> components;  // components of g - x
};

namespace detail {

inline std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed) {
    std::vector<char> dead(static_cast<size_t>(g.n()), 0);
    for (Vertex v : removed) dead[static_cast<size_t>(v)] = 1;
    std::vector<VertexSet> comps;
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (dead[static_cast<size_t>(s)] || seen[static_cast<size_t>(s)]) continue;
        VertexSet comp;
        std::vector<Vertex> stack{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex u : g.neighbors(v))
                if (!dead[static_cast<size_t>(u)] && !seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace detail

// Exhaustively enumerates all vertex sets inducing t disjoint edges and keeps
// one maximizing the largest component of g - X (ties: lexicographically
// least X). Returns nothing when the graph has no t disjoint edges.
inline std::optional<CutSelection> select_x(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("select_x: t must be positive");
    if (!is_connected(g)) throw std::invalid_argument("select_x: graph must be connected");
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) <= 1) throw std::invalid_argument("select_x: graph must be reduced");

    auto edges = g.edges();
    std::vector<std::pair<int, int>> chosen;
    std::optional<VertexSet> best_x;
    int best_size = -1;

    std::function<void(size_t)> rec = [&](size_t start) {
        if (static_cast<int>(chosen.size()) == t) {
            VertexSet x;
            for (auto [u, v] : chosen) {
                x.push_back(u);
                x.push_back(v);
            }
            std::sort(x.begin(), x.end());
            int largest = 0;
            for (const VertexSet& comp : detail::components_without(g, x))
                largest = std::max(largest, static_cast<int>(comp.size()));
            if (largest > best_size || (largest == best_size && (!best_x || x < *best_x))) {
                best_size = largest;
                best_x = std::move(x);
            }
            return;
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
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);

    if (!best_x) return std::nullopt;
    CutSelection sel;
    sel.x = *best_x;
    sel.largest_component_size = best_size;
    sel.components = detail::components_without(g, sel.x);
    return sel;
}

// --- Consequences of a maximal X ----------------------------------------------------

struct CutViolation {
    std::array<int, 2> edge;
    std::string reason;
};

struct CutSelectionReport {
    std::vector<CutViolation> violations;
    long long edges_checked = 0;
};

// For every component C of g - X and every edge e of C avoiding N(X):
// deleting e's endpoints must disconnect C, and every piece must keep a
// vertex of N(X). A counterexample certifies the instance is out of class or
// the selection not maximal.
inline CutSelectionReport verify_cut_selection(const Graph& g, const CutSelection& sel) {
    CutSelectionReport report;
    VertexSet nx = g.open_neighborhood(sel.x);
    for (const VertexSet& comp : detail::components_without(g, sel.x)) {
        Graph c = induced_subgraph(g, comp);
        for (auto [lu, lw] : c.edges()) {
            Vertex u = c.label_of(lu), w = c.label_of(lw);
            if (set_contains(nx, u) || set_contains(nx, w)) continue;
            ++report.edges_checked;
            VertexSet rest = set_minus(comp, VertexSet{std::min(u, w), std::max(u, w)});
            Graph rest_graph = induced_subgraph(g, rest);
            auto pieces = connected_components(rest_graph);
            if (pieces.size() < 2) {
                report.violations.push_back({{u, w}, "removal does not disconnect the component"});
                continue;
            }
            for (const VertexSet& piece : pieces) {
                bool meets = false;
                for (Vertex pv : piece)
                    if (set_contains(nx, rest_graph.label_of(pv))) {
                        meets = true;
                        break;
                    }
                if (!meets) {
                    report.violations.push_back({{u, w}, "a piece avoids N(X) entirely"});
                    break;
                }
            }
        }
    }
    return report;
}

// --- Layer cutsets -------------------------------------------------------------------

struct LayerCutset {
    std::vector<std::array<int, 2>> edges;  // e_1..e_k in construction order

    VertexSet endpoint_set() const {
        VertexSet s;
        for (auto e : edges) {
            s.push_back(e[0]);
            s.push_back(e[1]);
        }
        return sorted_unique(s);
    }
};

namespace detail {

// Deterministic multi-source shortest path: sources and targets given as
// predicates over alive vertices; returns the vertex sequence or empty.
inline std::vector<Vertex> shortest_path_between(const Graph& g, const std::vector<char>& alive,
                                                 const std::vector<Vertex>& sources,
                                                 const std::vector<char>& is_target) {
    std::vector<int> parent(static_cast<size_t>(g.n()), -2);
    std::deque<Vertex> queue;
    for (Vertex s : sources)
        if (alive[static_cast<size_t>(s)] && parent[static_cast<size_t>(s)] == -2) {
            parent[static_cast<size_t>(s)] = -1;
            if (is_target[static_cast<size_t>(s)]) return {s};
            queue.push_back(s);
        }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex u : g.neighbors(v)) {
            if (!alive[static_cast<size_t>(u)] || parent[static_cast<size_t>(u)] != -2) continue;
            parent[static_cast<size_t>(u)] = v;
            if (is_target[static_cast<size_t>(u)]) {
                std::vector<Vertex> path;
                for (Vertex c = u; c != -1; c = parent[static_cast<size_t>(c)]) path.push_back(c);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(u);
        }
    }
    return {};
}

}  // namespace detail

// Iterative edge-picking that separates layer s from layer s+f(t) in c with
// at most t^2 edge deletions (2t^2 vertices). Each round takes a shortest
// surviving path between the two layers and removes the endpoints of its
// first deep-enough edge that avoids N(X). Exceeding t^2 rounds, or a path
// with no qualifying edge, is a class-violation certificate.
inline LayerCutset layer_cutset(const Graph& c, const VertexSet& x_neighbors, Vertex v, int s,
                                int t, CheckLog* log = nullptr) {
    std::vector<int> depth = bfs_depths(c, VertexSet{v});
    int q = 0;
    for (int u = 0; u < c.n(); ++u) {
        if (depth[static_cast<size_t>(u)] < 0)
            throw std::invalid_argument("layer_cutset: component must be connected");
        q = std::max(q, depth[static_cast<size_t>(u)]);
    }
    long long f = f_bound(t);
    if (s < 1 || s + f > q)
        throw std::invalid_argument("layer_cutset: layer span [s, s+f(t)] must fit the depth");

    std::vector<char> in_nx(static_cast<size_t>(c.n()), 0);
    for (Vertex u : x_neighbors) in_nx[static_cast<size_t>(u)] = 1;
    std::vector<char> alive(static_cast<size_t>(c.n()), 1);
    std::vector<Vertex> sources;
    std::vector<char> is_target(static_cast<size_t>(c.n()), 0);
    for (int u = 0; u < c.n(); ++u) {
        if (depth[static_cast<size_t>(u)] == s) sources.push_back(u);
        if (depth[static_cast<size_t>(u)] == s + f) is_target[static_cast<size_t>(u)] = 1;
    }

    auto edge_dist = [&](Vertex a, Vertex b) {
        return std::min(depth[static_cast<size_t>(a)], depth[static_cast<size_t>(b)]);
    };

    LayerCutset cut;
    int last_dist = -1;
    while (true) {
        std::vector<Vertex> path = detail::shortest_path_between(c, alive, sources, is_target);
        if (path.empty()) break;  // the chosen endpoints disconnect the layers

        if (log) {
            long long on_path_in_nx = 0;
            for (Vertex u : path)
                if (in_nx[static_cast<size_t>(u)]) ++on_path_in_nx;
            log->record("path-neighbor-bound", on_path_in_nx < 3LL * t * t, path,
                        "induced path carries " + std::to_string(on_path_in_nx) +
                            " vertices of N(X); bound is " + std::to_string(3LL * t * t));
        }

        int pick = -1;
        if (cut.edges.empty()) {
            // first round: minimize dist(e, v) over edges avoiding N(X)
            int best_dist = -1;
            for (size_t i = 0; i + 1 < path.size(); ++i) {
                Vertex a = path[i], b = path[i + 1];
                if (in_nx[static_cast<size_t>(a)] || in_nx[static_cast<size_t>(b)]) continue;
                int d = edge_dist(a, b);
                if (pick < 0 || d < best_dist) {
                    pick = static_cast<int>(i);
                    best_dist = d;
                }
            }
        } else {
            // later rounds: first edge along the path that is two layers
            // deeper than the previous pick and avoids N(X)
            for (size_t i = 0; i + 1 < path.size(); ++i) {
                Vertex a = path[i], b = path[i + 1];
                if (in_nx[static_cast<size_t>(a)] || in_nx[static_cast<size_t>(b)]) continue;
                if (edge_dist(a, b) >= last_dist + 2) {
                    pick = static_cast<int>(i);
                    break;
                }
            }
        }
        if (pick < 0)
            throw ClassViolationError("layer-cutset-no-edge",
                                      "a surviving path between the layers has no qualifying edge",
                                      sorted_unique(path));
        if (static_cast<long long>(cut.edges.size()) == static_cast<long long>(t) * t) {
            VertexSet witness = cut.endpoint_set();
            throw ClassViolationError("cutset-edge-bound",
                                      "layer cutset construction needs more than t^2 edges",
                                      witness);
        }
        Vertex a = path[static_cast<size_t>(pick)], b = path[static_cast<size_t>(pick) + 1];
        cut.edges.push_back({a, b});
        last_dist = edge_dist(a, b);
        alive[static_cast<size_t>(a)] = 0;
        alive[static_cast<size_t>(b)] = 0;
    }
    if (log)
        log->record("cutset-edge-bound",
                    static_cast<long long>(cut.edges.size()) <= static_cast<long long>(t) * t,
                    cut.endpoint_set(), "k = " + std::to_string(cut.edges.size()));
    return cut;
}

// --- Path decomposition ---------------------------------------------------------------

struct PathDecomposition {
    std::vector<VertexSet> bags;
    std::vector<VertexSet> adhesions;                 // bag i against bag i+1
    std::vector<std::array<int, 2>> layer_windows;    // [lowest, highest] BFS layer per bag
    Vertex root_vertex = 0;
    std::vector<int> depths;                          // BFS depth from root, per vertex
    std::vector<LayerCutset> cutsets;
};

// Independent validity checker: coverage, edge coverage, contiguity, adhesion
// size, and bag layer-window width (layers recomputed from the root).
inline std::vector<std::string> validate_path_decomposition(const Graph& c,
                                                            const PathDecomposition& pd, int t) {
    std::vector<std::string> bad;
    long long f = f_bound(t);
    size_t h = pd.bags.size();
    std::vector<int> first(static_cast<size_t>(c.n()), -1), last(static_cast<size_t>(c.n()), -1);
    std::vector<long long> count(static_cast<size_t>(c.n()), 0);
    for (size_t i = 0; i < h; ++i)
        for (Vertex v : pd.bags[i]) {
            if (first[static_cast<size_t>(v)] < 0) first[static_cast<size_t>(v)] = static_cast<int>(i);
            last[static_cast<size_t>(v)] = static_cast<int>(i);
            ++count[static_cast<size_t>(v)];
        }
    for (int v = 0; v < c.n(); ++v) {
        if (first[static_cast<size_t>(v)] < 0)
            bad.push_back("vertex " + std::to_string(v) + " is in no bag");
        else if (count[static_cast<size_t>(v)] !=
                 last[static_cast<size_t>(v)] - first[static_cast<size_t>(v)] + 1)
            bad.push_back("vertex " + std::to_string(v) + " occurs non-contiguously");
    }
    for (auto [u, w] : c.edges()) {
        bool covered = false;
        for (size_t i = 0; i < h && !covered; ++i)
            covered = set_contains(pd.bags[i], u) && set_contains(pd.bags[i], w);
        if (!covered)
            bad.push_back("edge " + std::to_string(u) + "-" + std::to_string(w) + " is in no bag");
    }
    if (pd.adhesions.size() + 1 != h && !(h == 0 && pd.adhesions.empty()))
        bad.push_back("adhesion count does not match bag count");
    for (size_t i = 0; i + 1 < h; ++i) {
        VertexSet inter = set_intersect(pd.bags[i], pd.bags[i + 1]);
        if (i < pd.adhesions.size() && inter != pd.adhesions[i])
            bad.push_back("recorded adhesion " + std::to_string(i) + " is not the bag intersection");
        if (static_cast<long long>(inter.size()) > 2LL * t * t)
            bad.push_back("adhesion " + std::to_string(i) + " has size " +
                          std::to_string(inter.size()) + " > 2t^2");
    }
    std::vector<int> depth = bfs_depths(c, VertexSet{pd.root_vertex});
    for (size_t i = 0; i < h; ++i) {
        if (pd.bags[i].empty()) {
            bad.push_back("bag " + std::to_string(i) + " is empty");
            continue;
        }
        int lo = depth[static_cast<size_t>(pd.bags[i].front())], hi = lo;
        for (Vertex v : pd.bags[i]) {
            lo = std::min(lo, depth[static_cast<size_t>(v)]);
            hi = std::max(hi, depth[static_cast<size_t>(v)]);
        }
        if (hi - lo + 1 > 2 * f)
            bad.push_back("bag " + std::to_string(i) + " spans " + std::to_string(hi - lo + 1) +
                          " layers > 2 f(t)");
        if (i < pd.layer_windows.size() &&
            (pd.layer_windows[i][0] != lo || pd.layer_windows[i][1] != hi))
            bad.push_back("recorded layer window " + std::to_string(i) + " is wrong");
    }
    return bad;
}

// Builds the layered path decomposition of a connected component c rooted at
// v: one bag per window of f(t) BFS layers (the trailing partial window folds
// into the last bag), with consecutive bags glued along layer cutsets.
inline PathDecomposition build_path_decomposition(const Graph& c, const VertexSet& x_neighbors,
                                                  Vertex v, int t, CheckLog* log = nullptr) {
    PathDecomposition pd;
    pd.root_vertex = v;
    pd.depths = bfs_depths(c, VertexSet{v});
    int q = 0;
    for (int u = 0; u < c.n(); ++u) {
        if (pd.depths[static_cast<size_t>(u)] < 0)
            throw std::invalid_argument("build_path_decomposition: component must be connected");
        q = std::max(q, pd.depths[static_cast<size_t>(u)]);
    }
    long long f = f_bound(t);
    long long h = (q <= f) ? 1 : (q + f - 1) / f;

    if (h == 1) {
        pd.bags.push_back(c.vertices());
        pd.layer_windows.push_back({0, q});
        if (log) {
            auto bad = validate_path_decomposition(c, pd, t);
            log->record("pd-validity", bad.empty(), {}, bad.empty() ? "" : bad.front());
        }
        return pd;
    }

    std::vector<VertexSet> cut_vertices(static_cast<size_t>(h) + 1);  // K_0 and K_h stay empty
    for (long long j = 1; j < h; ++j) {
        int s = static_cast<int>((j - 1) * f + 1);
        LayerCutset cut = layer_cutset(c, x_neighbors, v, s, t, log);
        cut_vertices[static_cast<size_t>(j)] = cut.endpoint_set();
        pd.cutsets.push_back(std::move(cut));
    }

    // chain A_j = (vertices cut off from depth > j f) plus the cut itself
    std::vector<VertexSet> chain(static_cast<size_t>(h) + 1);
    for (long long j = 1; j < h; ++j) {
        VertexSet left;
        for (const VertexSet& comp :
             detail::components_without(c, cut_vertices[static_cast<size_t>(j)])) {
            int hi = 0;
            for (Vertex u : comp) hi = std::max(hi, pd.depths[static_cast<size_t>(u)]);
            if (hi <= j * f) left = set_union(left, comp);
        }
        chain[static_cast<size_t>(j)] = set_union(
            set_union(left, cut_vertices[static_cast<size_t>(j)]), chain[static_cast<size_t>(j - 1)]);
    }
    chain[static_cast<size_t>(h)] = c.vertices();

    for (long long j = 1; j <= h; ++j) {
        VertexSet bag = set_minus(chain[static_cast<size_t>(j)], chain[static_cast<size_t>(j - 1)]);
        bag = set_union(bag, cut_vertices[static_cast<size_t>(j - 1)]);
        if (j < h) bag = set_union(bag, cut_vertices[static_cast<size_t>(j)]);
        int lo = q, hi = 0;
        for (Vertex u : bag) {
            lo = std::min(lo, pd.depths[static_cast<size_t>(u)]);
            hi = std::max(hi, pd.depths[static_cast<size_t>(u)]);
        }
        pd.bags.push_back(std::move(bag));
        pd.layer_windows.push_back({lo, hi});
    }
    for (size_t i = 0; i + 1 < pd.bags.size(); ++i)
        pd.adhesions.push_back(set_intersect(pd.bags[i], pd.bags[i + 1]));

    auto bad = validate_path_decomposition(c, pd, t);
    if (log) log->record("pd-validity", bad.empty(), {}, bad.empty() ? "" : bad.front());
    if (!bad.empty())
        throw ClassViolationError("pd-validity", "constructed decomposition fails validity: " +
                                                     bad.front());
    return pd;
}

// --- Dynamic program over the bags ------------------------------------------------------

// Solves MIS on c restricted to `alive`, sweeping the bags left to right.
// T[i][S] is the best independent set of the first i bags meeting adhesion i
// exactly in S; bag interiors are filled by the bounded-layer kernel using
// the component's own BFS layers.
inline VertexSet dp_over_decomposition(const Graph& c, const PathDecomposition& pd,
                                       const VertexSet& alive, int t, CheckLog* log = nullptr) {
    size_t h = pd.bags.size();
    if (h == 0) return {};

    auto adhesion_at = [&](size_t i) -> VertexSet {  // A_0 = A_h = {}
        if (i == 0 || i >= h) return {};
        return pd.adhesions[i - 1];
    };

    std::map<VertexSet, VertexSet> prev;
    prev[{}] = {};

    for (size_t i = 1; i <= h; ++i) {
        const VertexSet& bag = pd.bags[i - 1];
        VertexSet a_prev = set_intersect(adhesion_at(i - 1), alive);
        VertexSet a_cur = set_intersect(adhesion_at(i), alive);
        VertexSet overlap = set_intersect(a_prev, a_cur);
        VertexSet ground_all =
            set_intersect(set_minus(set_minus(bag, a_prev), a_cur), alive);

        std::map<VertexSet, VertexSet> next;
        size_t combos = size_t{1} << a_cur.size();
        for (size_t mask = 0; mask < combos; ++mask) {
            VertexSet s;
            for (size_t b = 0; b < a_cur.size(); ++b)
                if (mask & (size_t{1} << b)) s.push_back(a_cur[b]);
            if (!c.is_independent_set(s)) continue;

            std::optional<VertexSet> best;
            for (const auto& [s_prev, sol_prev] : prev) {
                if (set_intersect(s_prev, overlap) != set_intersect(s, overlap)) continue;
                VertexSet s_both = set_union(s, s_prev);
                if (!c.is_independent_set(s_both)) continue;
                VertexSet ground = set_minus(ground_all, c.closed_neighborhood(s_both));

                Graph sub = induced_subgraph(c, ground);
                VertexSet inner;
                if (sub.n() > 0) {
                    int lo = pd.depths[static_cast<size_t>(ground.front())], hi = lo;
                    for (Vertex u : ground) {
                        lo = std::min(lo, pd.depths[static_cast<size_t>(u)]);
                        hi = std::max(hi, pd.depths[static_cast<size_t>(u)]);
                    }
                    std::vector<VertexSet> layers(static_cast<size_t>(hi - lo + 1));
                    for (int u = 0; u < sub.n(); ++u)
                        layers[static_cast<size_t>(pd.depths[static_cast<size_t>(sub.label_of(u))] -
                                                    lo)]
                            .push_back(u);
                    inner = lift(sub, mis_bounded_layers(sub, layers, t));
                }

                VertexSet cand = set_union(set_union(sol_prev, inner), s);
                if (log)
                    log->record("dp-entry-consistency",
                                c.is_independent_set(cand) && set_intersect(cand, a_cur) == s, cand,
                                "bag " + std::to_string(i));
                if (!best || better_set(cand, *best)) best = std::move(cand);
            }
            if (best) next[std::move(s)] = std::move(*best);
        }
        prev = std::move(next);
        if (prev.empty()) throw Error("dp_over_decomposition: table emptied unexpectedly");
    }
    return prev.at({});
}

// --- Full pipeline -------------------------------------------------------------------------

struct FriendshipOptions {
    int violation_fallback_cap = kDefaultOracleCap;  // exact rescue below this size
};

struct FriendshipResult {
    VertexSet independent_set;
    CheckLog checks;
    bool class_violation = false;
    std::vector<std::string> violations;
};

namespace detail {

inline VertexSet solve_friendship_component(const Graph& comp, int t, CheckLog& log) {
    std::optional<CutSelection> sel = select_x(comp, t);
    if (!sel) {
        // no t disjoint edges anywhere: the maximal-IS count is polynomially
        // bounded, enumerate directly
        long long cap =
            std::max<long long>(1, clamped_power(static_cast<long long>(comp.n()), 2 * t - 1));
        std::vector<VertexSet> sets;
        try {
            sets = enumerate_maximal_independent_sets(comp, cap);
        } catch (const CapExceededError&) {
            throw ClassViolationError("alekseev-direct-bound",
                                      "tK2-free component exceeded the maximal-IS bound");
        }
        log.record("alekseev-direct-bound", true, {},
                   std::to_string(sets.size()) + " maximal sets");
        VertexSet best;
        for (const VertexSet& s : sets)
            if (better_set(s, best)) best = s;
        return best;
    }

    CutSelectionReport cut_report = verify_cut_selection(comp, *sel);
    log.record("cut-consequences", cut_report.violations.empty(),
               cut_report.violations.empty()
                   ? VertexSet{}
                   : VertexSet{cut_report.violations.front().edge[0],
                               cut_report.violations.front().edge[1]},
               std::to_string(cut_report.edges_checked) + " edges checked");

    VertexSet nx = comp.open_neighborhood(sel->x);

    struct PieceContext {
        Graph graph;  // induced from comp
        PathDecomposition pd;
    };
    std::vector<PieceContext> pieces;
    for (const VertexSet& piece_set : sel->components) {
        Graph piece = induced_subgraph(comp, piece_set);
        VertexSet x_nb_local;
        for (int u = 0; u < piece.n(); ++u)
            if (set_contains(nx, piece.label_of(u))) x_nb_local.push_back(u);
        if (x_nb_local.empty())
            throw Error("solve_friendship: a component of G-X sees no neighbor of X");
        Vertex root = x_nb_local.front();
        PathDecomposition pd = build_path_decomposition(piece, x_nb_local, root, t, &log);
        pieces.push_back(PieceContext{std::move(piece), std::move(pd)});
    }

    // guess the optimum's intersection with X
    VertexSet best;
    size_t combos = size_t{1} << sel->x.size();
    for (size_t mask = 0; mask < combos; ++mask) {
        VertexSet xprime;
        for (size_t b = 0; b < sel->x.size(); ++b)
            if (mask & (size_t{1} << b)) xprime.push_back(sel->x[b]);
        if (!comp.is_independent_set(xprime)) continue;

        VertexSet blocked = comp.open_neighborhood(xprime);
        VertexSet cand = xprime;
        for (const PieceContext& ctx : pieces) {
            VertexSet alive;
            for (int u = 0; u < ctx.graph.n(); ++u)
                if (!set_contains(blocked, ctx.graph.label_of(u))) alive.push_back(u);
            VertexSet sol = dp_over_decomposition(ctx.graph, ctx.pd, alive, t, &log);
            cand = set_union(cand, lift(ctx.graph, sol));
        }
        if (better_set(cand, best)) best = cand;
    }
    return best;
}

}  // namespace detail

// Full pipeline: commit degree-<=1 vertices, then per component pick the cut
// X, guess the optimum's trace on X, and sweep the layered path decomposition
// of each remaining piece. On a class-violation certificate the failed
// component falls back to an exact (capped) or greedy solve and the result is
// flagged unverified.
inline FriendshipResult solve_friendship(const Graph& g, int t,
                                         const FriendshipOptions& opt = {}) {
    if (t < 1) throw std::invalid_argument("solve_friendship: t must be positive");
    FriendshipResult result;
    ReduceResult red = reduce_degree_one(g);
    VertexSet total = red.forced;

    for (const VertexSet& comp_set : connected_components(red.reduced)) {
        Graph comp = induced_subgraph(red.reduced, comp_set);
        VertexSet comp_solution;
        try {
            comp_solution = detail::solve_friendship_component(comp, t, result.checks);
        } catch (const ClassViolationError& e) {
            result.class_violation = true;
            result.violations.push_back(e.check + ": " + e.what());
            result.checks.record(e.check, false, e.witness, e.what());
            comp_solution = comp.n() <= opt.violation_fallback_cap
                                ? mis_oracle(comp, opt.violation_fallback_cap)
                                : greedy_maximal_is(comp);
        }
        total = set_union(total, lift(red.reduced, lift(comp, comp_solution)));
    }

    result.checks.record("solution-independent", g.is_independent_set(total), total);
    result.independent_set = std::move(total);
    return result;
}

}  // namespace mis
