#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mis/checks.hpp"
#include "mis/detectors.hpp"
#include "mis/graph.hpp"
#include "mis/kernels.hpp"

namespace mis {

// --- Quasipolynomial branching on short holes -------------------------------------

using LeafSolver = std::function<VertexSet(const Graph&)>;

struct BranchStats {
    long long nodes = 0;    // recursion nodes visited
    long long branches = 0; // nodes that actually branched
    long long leaves = 0;   // nodes handed to the leaf solver
};

namespace detail {

// One enumeration pass: mu, per-vertex hit counts, and how many triangle
// families touch the closed neighborhood of the current hole.
struct BranchMeasure {
    long long mu = 0;
    std::vector<long long> hits;
    long long covered_by_hole = 0;
};

inline BranchMeasure branch_measure(const Graph& g, int t, const VertexSet& hole_closed_nbhd) {
    BranchMeasure bm;
    bm.hits.assign(static_cast<size_t>(g.n()), 0);
    std::vector<char> mark(static_cast<size_t>(g.n()), 0);
    std::vector<char> in_hole_nbhd(static_cast<size_t>(g.n()), 0);
    for (Vertex v : hole_closed_nbhd) in_hole_nbhd[static_cast<size_t>(v)] = 1;
    for_each_tc3(g, t, [&](const VertexSet& x) {
        ++bm.mu;
        bool covered = false;
        VertexSet hit = x;
        for (Vertex v : x) mark[static_cast<size_t>(v)] = 1;
        for (Vertex v : x)
            for (Vertex u : g.neighbors(v))
                if (!mark[static_cast<size_t>(u)]) {
                    mark[static_cast<size_t>(u)] = 1;
                    hit.push_back(u);
                }
        for (Vertex v : hit) {
            ++bm.hits[static_cast<size_t>(v)];
            if (in_hole_nbhd[static_cast<size_t>(v)]) covered = true;
            mark[static_cast<size_t>(v)] = 0;
        }
        if (covered) ++bm.covered_by_hole;
        return true;
    });
    return bm;
}

}  // namespace detail

// While the graph has both a short hole and a family of t independent
// triangles, branch on the hole vertex whose closed neighborhood meets the
// most triangle families: taking it shrinks the family count by a 1/max_len
// fraction, skipping it shrinks the graph. The branching itself is exhaustive
// either way; in-class assumptions only affect the branching-depth guarantee
// and are recorded as certificates when they fail.
inline VertexSet branch_short_holes(const Graph& g, int t, int max_len, const LeafSolver& leaf,
                                    CheckLog* log = nullptr, BranchStats* stats = nullptr) {
    if (t < 1) throw std::invalid_argument("branch_short_holes: t must be positive");
    if (max_len < 4) throw std::invalid_argument("branch_short_holes: max_len must be >= 4");

    std::function<VertexSet(const Graph&)> rec = [&](const Graph& cur) -> VertexSet {
        if (stats) ++stats->nodes;
        std::optional<PatternWitness> hole = find_short_hole(cur, max_len);
        if (hole) {
            VertexSet hole_nbhd = cur.closed_neighborhood(hole->cycle);
            detail::BranchMeasure bm = detail::branch_measure(cur, t, hole_nbhd);
            if (bm.mu > 0) {
                if (stats) ++stats->branches;
                // in class, N[V(H)] meets every triangle family
                if (log)
                    log->record("hole-coverage", bm.covered_by_hole == bm.mu, hole->cycle,
                                std::to_string(bm.covered_by_hole) + " of " + std::to_string(bm.mu) +
                                    " families touch N[V(H)]");
                Vertex branch_v = hole->cycle.front();
                for (Vertex v : hole->cycle)
                    if (bm.hits[static_cast<size_t>(v)] > bm.hits[static_cast<size_t>(branch_v)] ||
                        (bm.hits[static_cast<size_t>(v)] == bm.hits[static_cast<size_t>(branch_v)] &&
                         v < branch_v))
                        branch_v = v;
                if (log)
                    log->record("measure-decrease",
                                bm.hits[static_cast<size_t>(branch_v)] * max_len >= bm.mu,
                                VertexSet{branch_v},
                                "best vertex hits " +
                                    std::to_string(bm.hits[static_cast<size_t>(branch_v)]) +
                                    " of mu=" + std::to_string(bm.mu));

                // take branch_v
                VertexSet keep =
                    set_minus(cur.vertices(), cur.closed_neighborhood(VertexSet{branch_v}));
                Graph taken = induced_subgraph(cur, keep);
                VertexSet sol_take = lift(taken, rec(taken));
                sol_take = set_union(sol_take, VertexSet{branch_v});

                // skip branch_v
                Graph skipped = induced_subgraph(cur, set_minus(cur.vertices(), VertexSet{branch_v}));
                VertexSet sol_skip = lift(skipped, rec(skipped));

                return better_set(sol_take, sol_skip) ? sol_take : sol_skip;
            }
        }
        if (stats) ++stats->leaves;
        return leaf(cur);
    };
    return rec(g);
}

// --- Minimal separators --------------------------------------------------------------

// Minimal (a,b)-separator in g - forbidden: start from the neighborhood of
// a's component once N[b] is removed, then drop vertices one by one while
// separation survives.
inline VertexSet minimal_separator(const Graph& g, const VertexSet& a, const VertexSet& b,
                                   const VertexSet& forbidden) {
    if (!set_intersect(a, b).empty())
        throw NotSeparableError("minimal_separator: the two sides intersect");
    std::vector<char> dead(static_cast<size_t>(g.n()), 0);
    for (Vertex v : forbidden) dead[static_cast<size_t>(v)] = 1;
    for (Vertex v : a)
        if (dead[static_cast<size_t>(v)])
            throw std::invalid_argument("minimal_separator: side A meets the forbidden set");
    for (Vertex v : b)
        if (dead[static_cast<size_t>(v)])
            throw std::invalid_argument("minimal_separator: side B meets the forbidden set");
    for (Vertex u : a)
        for (Vertex w : b)
            if (g.has_edge(u, w))
                throw NotSeparableError("minimal_separator: the two sides are adjacent");

    auto separated = [&](const std::vector<char>& removed) {
        std::vector<char> seen(static_cast<size_t>(g.n()), 0);
        std::vector<Vertex> stack;
        for (Vertex v : a) {
            stack.push_back(v);
            seen[static_cast<size_t>(v)] = 1;
        }
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v)) {
                if (dead[static_cast<size_t>(u)] || removed[static_cast<size_t>(u)] ||
                    seen[static_cast<size_t>(u)])
                    continue;
                if (set_contains(b, u)) return false;
                seen[static_cast<size_t>(u)] = 1;
                stack.push_back(u);
            }
        }
        return true;
    };

    // initial separator: neighborhood of a's component in (g - forbidden) - N[b]
    VertexSet nb_closed = g.closed_neighborhood(b);
    std::vector<char> blocked = dead;
    for (Vertex v : nb_closed)
        if (!set_contains(a, v)) blocked[static_cast<size_t>(v)] = 1;
    std::vector<char> in_comp(static_cast<size_t>(g.n()), 0);
    std::vector<Vertex> stack;
    for (Vertex v : a) {
        in_comp[static_cast<size_t>(v)] = 1;
        stack.push_back(v);
    }
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v))
            if (!blocked[static_cast<size_t>(u)] && !in_comp[static_cast<size_t>(u)]) {
                in_comp[static_cast<size_t>(u)] = 1;
                stack.push_back(u);
            }
    }
    VertexSet sep;
    std::vector<char> in_sep(static_cast<size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v) {
        if (dead[static_cast<size_t>(v)] || in_comp[static_cast<size_t>(v)] || set_contains(b, v))
            continue;
        bool touches = false;
        for (Vertex u : g.neighbors(v))
            if (in_comp[static_cast<size_t>(u)]) {
                touches = true;
                break;
            }
        if (touches) {
            sep.push_back(v);
            in_sep[static_cast<size_t>(v)] = 1;
        }
    }
    if (!separated(in_sep)) throw Error("minimal_separator: initial separator is not separating");

    // minimalize deterministically
    for (Vertex v : VertexSet(sep)) {
        in_sep[static_cast<size_t>(v)] = 0;
        if (separated(in_sep)) {
            sep.erase(std::find(sep.begin(), sep.end(), v));
        } else {
            in_sep[static_cast<size_t>(v)] = 1;
        }
    }
    return sep;
}

// --- Separator family around a triangle collection --------------------------------------

struct SeparatorFamily {
    std::vector<VertexSet> triangles;                       // t+2 independent triangles
    std::map<std::pair<int, int>, VertexSet> separators;    // S_{i,j}
    std::map<std::pair<int, int>, VertexSet> common_nbhds;  // N_{i,j} = N(T_i) n N(T_j)
    bool cliques_ok = true;
};

inline SeparatorFamily build_separator_family(const Graph& g,
                                              const std::vector<VertexSet>& triangles,
                                              CheckLog* log = nullptr) {
    SeparatorFamily fam;
    fam.triangles = triangles;
    int k = static_cast<int>(triangles.size());
    std::vector<VertexSet> nbhd(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) nbhd[static_cast<size_t>(i)] = g.open_neighborhood(triangles[static_cast<size_t>(i)]);

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            VertexSet forbidden;
            for (int l = 0; l < k; ++l)
                if (l != i && l != j) forbidden = set_union(forbidden, nbhd[static_cast<size_t>(l)]);
            VertexSet sep = minimal_separator(g, triangles[static_cast<size_t>(i)],
                                              triangles[static_cast<size_t>(j)], forbidden);
            bool sep_clique = g.is_clique(sep);
            if (log) log->record("sij-clique", sep_clique, sep);
            VertexSet common = set_intersect(nbhd[static_cast<size_t>(i)], nbhd[static_cast<size_t>(j)]);
            bool common_clique = g.is_clique(common);
            if (log) log->record("nij-clique", common_clique, common);
            fam.cliques_ok = fam.cliques_ok && sep_clique && common_clique;
            fam.separators[{i, j}] = std::move(sep);
            fam.common_nbhds[{i, j}] = std::move(common);
        }
    return fam;
}

// --- The full solver ------------------------------------------------------------------

using FallbackSolver = std::function<VertexSet(const Graph&, int)>;

// Stand-in for the out-of-scope few-independent-cycles black box: exact
// capped search. Any solver with this signature can be plugged in instead.
inline VertexSet default_fallback(const Graph& g, int /*independent_cycle_bound*/,
                                  int cap = kDefaultOracleCap) {
    return mis_oracle(g, cap);
}

struct TrianglesOptions {
    int max_hole_len = 6;
    int fallback_cap = kDefaultOracleCap;
};

struct TrianglesResult {
    VertexSet independent_set;
    CheckLog checks;
    BranchStats branch;
    long long collection_leaves = 0;  // leaves solved via separators + chordal remainder
    long long fallback_leaves = 0;    // leaves without t+2 independent triangles
    long long rescue_leaves = 0;      // leaves rescued after a structural certificate fired
    bool class_violation = false;
};

// Branch away short holes, then per leaf: find t+2 independent triangles; if
// none exist hand the graph to the fallback, otherwise guess the optimum on
// the separator/common-neighborhood cliques and solve the chordal remainder.
inline TrianglesResult solve_triangles_c4(const Graph& g, int t, FallbackSolver fallback = {},
                                          const TrianglesOptions& opt = {}) {
    if (t < 1) throw std::invalid_argument("solve_triangles_c4: t must be positive");
    TrianglesResult result;
    if (!fallback)
        fallback = [&opt](const Graph& h, int c) { return default_fallback(h, c, opt.fallback_cap); };

    LeafSolver leaf = [&](const Graph& cur) -> VertexSet {
        std::optional<PatternWitness> coll = find_triangle_collection(cur, t + 2);
        if (!coll) {
            ++result.fallback_leaves;
            return fallback(cur, t + 2);
        }

        SeparatorFamily fam = build_separator_family(cur, coll->parts, &result.checks);
        if (!fam.cliques_ok) {
            // a separator or common neighborhood is not a clique: out of
            // class, the enumeration argument is void; rescue exactly
            result.class_violation = true;
            ++result.rescue_leaves;
            return fallback(cur, t + 2);
        }

        VertexSet u;
        for (const auto& [key, s] : fam.separators) u = set_union(u, s);
        for (const auto& [key, s] : fam.common_nbhds) u = set_union(u, s);

        // every independent subset of U, at most one vertex per clique
        std::vector<VertexSet> subsets;
        VertexSet current;
        std::function<void(size_t)> enumerate = [&](size_t start) {
            subsets.push_back(current);
            for (size_t i = start; i < u.size(); ++i) {
                bool ok = true;
                for (Vertex w : current)
                    if (cur.has_edge(w, u[i])) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                current.push_back(u[i]);
                enumerate(i + 1);
                current.pop_back();
            }
        };
        enumerate(0);

        VertexSet best;
        bool chordal_ok = true;
        for (const VertexSet& s : subsets) {
            // independence plus the clique structure caps s at one vertex per set
            bool one_per_clique = true;
            for (const auto& [key, sep] : fam.separators)
                one_per_clique = one_per_clique && set_intersect(s, sep).size() <= 1;
            for (const auto& [key, nb] : fam.common_nbhds)
                one_per_clique = one_per_clique && set_intersect(s, nb).size() <= 1;
            result.checks.record("separator-subset-bound", one_per_clique, s);
            VertexSet rest =
                set_minus(set_minus(cur.vertices(), u), cur.closed_neighborhood(s));
            Graph remainder = induced_subgraph(cur, rest);
            ChordalityResult ch = chordality(remainder);
            result.checks.record("remainder-chordal", ch.chordal(),
                                 ch.chordal() ? VertexSet{} : lift(remainder, ch.hole->cycle));
            if (!ch.chordal()) {
                chordal_ok = false;
                break;
            }
            VertexSet inner = lift(remainder, mis_chordal(remainder));
            VertexSet cand = set_union(s, inner);
            if (better_set(cand, best)) best = cand;
        }
        if (!chordal_ok) {
            result.class_violation = true;
            ++result.rescue_leaves;
            return fallback(cur, t + 2);
        }
        ++result.collection_leaves;
        return best;
    };

    result.independent_set =
        branch_short_holes(g, t, opt.max_hole_len, leaf, &result.checks, &result.branch);
    if (!result.checks.all_passed()) result.class_violation = true;
    result.checks.record("solution-independent", g.is_independent_set(result.independent_set),
                         result.independent_set);
    return result;
}

}  // namespace mis
