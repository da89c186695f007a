// Acceptance suite: one structural criterion per section, each printed as a
// single pass/fail line. Run with no arguments for all criteria or with a
// criterion number. Exit code 0 iff everything passed.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mis/families.hpp"
#include "mis/friendship.hpp"
#include "mis/generate.hpp"
#include "mis/io.hpp"
#include "mis/report.hpp"
#include "mis/triangles_c4.hpp"

using namespace mis;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// --- shared instance streams (criteria 7/8/9 replay 1/2 exactly) -------------

void friendship_t1_stream(const std::function<void(const Graph&)>& fn) {
    for (int i = 0; i < 150; ++i) {
        Rng rng(9000 + static_cast<uint64_t>(i));
        int n = 2 + i % 19;  // 2..20
        Graph g = (i % 2 == 0) ? gen_tree(n, rng) : gen_forest(n, 0.8, rng);
        fn(g);
    }
}

void friendship_t2_stream(const std::function<void(const Graph&)>& fn) {
    for (int i = 0; i < 150; ++i) {
        Rng rng(9100 + static_cast<uint64_t>(i));
        int n = 8 + i % 7;  // 8..14
        double p = 0.12 + 0.04 * (i % 3);
        auto res = gen_in_class_rejection(make_k1_tk2(2), n, p, rng, 5000, InducedMinorCaps{14, 5});
        fn(res.graph);
    }
}

void triangles_rejection_stream(const std::function<void(const Graph&)>& fn) {
    for (int i = 0; i < 300; ++i) {
        Rng rng(9200 + static_cast<uint64_t>(i));
        int n = 8 + i % 7;
        double p = 0.15 + 0.05 * (i % 3);
        auto res = gen_in_class_rejection(make_tc3_c4(1), n, p, rng, 5000, InducedMinorCaps{14, 7});
        fn(res.graph);
    }
}

std::vector<int> long_cycle_lengths_t2() { return {120, 146, 172, 198, 224, 250}; }

// k triangles linked in a chain through paths of `gap` fresh vertices;
// the only cycles are the triangles, so no hole and no C3+C4 pattern
Graph triangle_chain(int k, int gap) {
    Graph g(3 * k + (k - 1) * gap);
    std::vector<int> anchors;
    for (int i = 0; i < k; ++i) {
        int base = 3 * i;
        g.add_edge(base, base + 1);
        g.add_edge(base + 1, base + 2);
        g.add_edge(base, base + 2);
        anchors.push_back(base + 2);
    }
    int cursor = 3 * k;
    for (int i = 0; i + 1 < k; ++i) {
        int prev = anchors[static_cast<size_t>(i)];
        for (int j = 0; j < gap; ++j) {
            g.add_edge(prev, cursor);
            prev = cursor++;
        }
        g.add_edge(prev, 3 * (i + 1));
    }
    return g;
}

// --- criteria -----------------------------------------------------------------

Outcome criterion1() {
    Outcome out;
    int matches = 0, total = 0;
    auto check = [&](const Graph& g, int t) {
        ++total;
        FriendshipResult r = solve_friendship(g, t);
        if (g.is_independent_set(r.independent_set) &&
            static_cast<int>(r.independent_set.size()) == mis_oracle_size(g, 24))
            ++matches;
    };
    friendship_t1_stream([&](const Graph& g) {
        if (has_induced_minor(g, make_k1_tk2(1), InducedMinorCaps{20, 3}))
            return;  // verifier must admit the instance; counted as missing below
        check(g, 1);
    });
    friendship_t2_stream([&](const Graph& g) { check(g, 2); });
    out.pass = (matches == 300 && total == 300);
    out.detail = std::to_string(matches) + "/300 oracle matches on verified in-class instances";
    return out;
}

Outcome criterion2() {
    Outcome out;
    int matches = 0, total = 0;
    triangles_rejection_stream([&](const Graph& g) {
        ++total;
        TrianglesResult r = solve_triangles_c4(g, 1);
        if (g.is_independent_set(r.independent_set) &&
            static_cast<int>(r.independent_set.size()) == mis_oracle_size(g, 24))
            ++matches;
    });
    for (int i = 0; i < 100; ++i) {
        ++total;
        int len = 7 + i % 24;  // C7..C30
        Graph g = make_cycle(len);
        TrianglesResult r = solve_triangles_c4(g, 1, {}, TrianglesOptions{6, 32});
        if (g.is_independent_set(r.independent_set) &&
            static_cast<int>(r.independent_set.size()) == mis_oracle_size(g, 32))
            ++matches;
    }
    out.pass = (matches == 400 && total == 400);
    out.detail = std::to_string(matches) + "/400 oracle matches (300 in-class + 100 long cycles)";
    return out;
}

Outcome criterion3() {
    Outcome out;
    int matches = 0;
    for (int i = 0; i < 200; ++i) {
        Rng rng(9300 + static_cast<uint64_t>(i));
        int n = 4 + i % 10;  // 4..13
        double p = 0.15 + 0.07 * (i % 6);
        Graph g = gen_gnp(n, p, rng);
        int t = 1 + i % 2;
        VertexSet is = branch_short_holes(
            g, t, 6, [](const Graph& h) { return mis_oracle(h, 16); }, nullptr, nullptr);
        if (g.is_independent_set(is) && static_cast<int>(is.size()) == mis_oracle_size(g, 16))
            ++matches;
    }
    out.pass = (matches == 200);
    out.detail = std::to_string(matches) + "/200 oracle matches on arbitrary graphs";
    return out;
}

Outcome criterion4() {
    Outcome out;
    int within_bound = 0, produced = 0;
    for (int i = 0; i < 500; ++i) {
        Rng rng(9400 + static_cast<uint64_t>(i));
        int n = 4 + i % 11;  // 4..14
        double p = 0.75 + 0.05 * (i % 4);
        Graph g;
        bool found = false;
        for (int attempt = 0; attempt < 2000 && !found; ++attempt) {
            g = gen_gnp(n, p, rng);
            found = !find_induced_tk2(g, 2);
        }
        if (!found) continue;
        ++produced;
        long long bound = static_cast<long long>(n) * n * n;
        try {
            auto sets = enumerate_maximal_independent_sets(g, bound);
            if (static_cast<long long>(sets.size()) <= bound) ++within_bound;
        } catch (const CapExceededError&) {
            // bound violated
        }
    }
    out.pass = (produced == 500 && within_bound == 500);
    out.detail = std::to_string(within_bound) + "/" + std::to_string(produced) +
                 " 2K2-free instances within the n^3 maximal-IS bound";
    return out;
}

Outcome criterion5() {
    Outcome out;
    int equalities = 0, oracle_matches = 0, oracle_cases = 0;
    for (int i = 0; i < 500; ++i) {
        Rng rng(9500 + static_cast<uint64_t>(i));
        int n = 2 + i % 59;  // 2..60
        double p = 0.10 + 0.05 * (i % 5);
        Graph g = gen_bipartite(n, p, rng);
        VertexSet is = mis_bipartite(g);
        if (g.is_independent_set(is) &&
            static_cast<int>(is.size()) + max_matching_bipartite(g) == g.n())
            ++equalities;
        if (n <= 24) {
            ++oracle_cases;
            if (static_cast<int>(is.size()) == mis_oracle_size(g, 24)) ++oracle_matches;
        }
    }
    out.pass = (equalities == 500 && oracle_matches == oracle_cases);
    out.detail = std::to_string(equalities) + "/500 Konig equalities, " +
                 std::to_string(oracle_matches) + "/" + std::to_string(oracle_cases) +
                 " oracle matches at n<=24";
    return out;
}

Outcome criterion6() {
    Outcome out;
    int independent = 0, oracle_matches = 0, oracle_cases = 0;
    for (int i = 0; i < 300; ++i) {
        Rng rng(9600 + static_cast<uint64_t>(i));
        int n = 2 + i % 59;
        Graph g = gen_chordal(n, 3 + i % 4, rng);
        VertexSet is = mis_chordal(g);
        if (g.is_independent_set(is)) ++independent;
        if (n <= 24) {
            ++oracle_cases;
            if (static_cast<int>(is.size()) == mis_oracle_size(g, 24)) ++oracle_matches;
        }
    }
    out.pass = (independent == 300 && oracle_matches == oracle_cases);
    out.detail = std::to_string(independent) + "/300 independence checks, " +
                 std::to_string(oracle_matches) + "/" + std::to_string(oracle_cases) +
                 " oracle matches at n<=24";
    return out;
}

Outcome criterion7() {
    Outcome out;
    CheckLog all;
    bool sizes_ok = true;
    friendship_t2_stream([&](const Graph& g) {
        FriendshipResult r = solve_friendship(g, 2);
        all.merge(r.checks);
    });
    for (int len : long_cycle_lengths_t2()) {
        Graph g = make_cycle(len);
        FriendshipResult r = solve_friendship(g, 2);
        all.merge(r.checks);
        sizes_ok = sizes_ok && static_cast<int>(r.independent_set.size()) == len / 2;
    }
    long long violations = all.failures("pd-validity") + all.failures("path-neighbor-bound") +
                           all.failures("cutset-edge-bound") +
                           all.failures("dp-entry-consistency");
    out.pass = sizes_ok && violations == 0 && all.runs("pd-validity") > 0 &&
               all.runs("cutset-edge-bound") > 0;
    std::ostringstream d;
    d << all.runs("pd-validity") << " decompositions validated, " << all.runs("cutset-edge-bound")
      << " cutset-bound checks, " << violations << " violations";
    out.detail = d.str();
    return out;
}

Outcome criterion8() {
    Outcome out;
    CheckLog all;
    bool solved_ok = true;
    triangles_rejection_stream([&](const Graph& g) {
        TrianglesResult r = solve_triangles_c4(g, 1);
        all.merge(r.checks);
    });
    // structured in-class instances that always carry a triangle collection
    std::vector<Graph> crafted;
    for (int k = 3; k <= 4; ++k) crafted.push_back(make_t_triangles(k));
    crafted.push_back(triangle_chain(3, 1));
    crafted.push_back(triangle_chain(3, 2));
    for (const Graph& g : crafted) {
        if (g.n() <= 14 && has_induced_minor(g, make_tc3_c4(1), InducedMinorCaps{14, 7})) {
            solved_ok = false;  // crafted instance unexpectedly out of class
            continue;
        }
        TrianglesResult r = solve_triangles_c4(g, 1);
        all.merge(r.checks);
        solved_ok = solved_ok &&
                    static_cast<int>(r.independent_set.size()) == mis_oracle_size(g, 24);
    }
    long long violations = all.failures("sij-clique") + all.failures("nij-clique") +
                           all.failures("remainder-chordal");
    out.pass = solved_ok && violations == 0 && all.runs("sij-clique") > 0 &&
               all.runs("remainder-chordal") > 0;
    std::ostringstream d;
    d << all.runs("sij-clique") << " separator-clique checks, " << all.runs("nij-clique")
      << " common-neighborhood checks, " << all.runs("remainder-chordal")
      << " chordality checks, " << violations << " violations";
    out.detail = d.str();
    return out;
}

Outcome criterion9() {
    Outcome out;
    CheckLog all;
    friendship_t2_stream([&](const Graph& g) {
        FriendshipResult r = solve_friendship(g, 2);
        all.merge(r.checks);
    });
    for (int len : long_cycle_lengths_t2()) {
        FriendshipResult r = solve_friendship(make_cycle(len), 2);
        all.merge(r.checks);
    }
    out.pass = all.failures("cut-consequences") == 0 &&
               all.runs("cut-consequences") > 0;
    std::ostringstream d;
    d << all.runs("cut-consequences") << " cut selections verified, "
      << all.failures("cut-consequences") << " counterexamples";
    out.detail = d.str();
    return out;
}

Outcome criterion10() {
    Outcome out;
    int roundtrips = 0;
    for (int i = 0; i < 100; ++i) {
        Rng rng(9700 + static_cast<uint64_t>(i));
        Graph g;
        switch (i % 4) {
            case 0: g = gen_tree(2 + i % 17, rng); break;
            case 1: g = gen_chordal(3 + i % 15, 4, rng); break;
            case 2: g = make_cycle(3 + i % 20); break;
            default: {
                g = gen_tree(2 + i % 17, rng);
                for (int v = 2; v < g.n(); ++v)
                    if (rng.chance(0.25)) {
                        int u = rng.uniform(0, v - 2);
                        if (!g.has_edge(u, v)) g.add_edge(u, v);
                    }
            }
        }
        bool ok = true;
        for (GraphFormat fmt : {GraphFormat::dimacs, GraphFormat::edgelist}) {
            std::string once = serialize_graph(g, fmt);
            std::istringstream in(once);
            Graph back = parse_graph(in, fmt);
            ok = ok && back.n() == g.n() && back.edges() == g.edges() &&
                 serialize_graph(back, fmt) == once;
        }
        if (ok) ++roundtrips;
    }

    // a handful through actual files
    int file_trips = 0;
    std::filesystem::path dir = std::filesystem::temp_directory_path();
    for (int i = 0; i < 5; ++i) {
        Rng rng(9800 + static_cast<uint64_t>(i));
        Graph g = gen_tree(10 + i, rng);
        std::filesystem::path path = dir / ("misolver_acc_" + std::to_string(i) + ".col");
        write_graph_file(g, path.string(), GraphFormat::dimacs);
        Graph back = parse_graph_file(path.string(), GraphFormat::dimacs);
        if (back.n() == g.n() && back.edges() == g.edges()) ++file_trips;
        std::filesystem::remove(path);
    }

    int deterministic = 0;
    for (int i = 0; i < 20; ++i) {
        Rng rng(9900 + static_cast<uint64_t>(i));
        Graph g = gen_gnp(10 + i % 5, 0.25, rng);
        RunOptions opt;
        opt.alg = (i % 3 == 0) ? Algorithm::oracle
                               : (i % 3 == 1 ? Algorithm::friendship : Algorithm::triangles_c4);
        opt.t = 1 + i % 2;
        opt.verify = true;
        opt.instance_name = "det-" + std::to_string(i);
        SolveReport a = run_solve(g, opt);
        SolveReport b = run_solve(g, opt);
        if (report_to_json(a, false) == report_to_json(b, false)) ++deterministic;
    }

    out.pass = (roundtrips == 100 && file_trips == 5 && deterministic == 20);
    out.detail = std::to_string(roundtrips) + "/100 byte-identical round trips, " +
                 std::to_string(file_trips) + "/5 file trips, " + std::to_string(deterministic) +
                 "/20 deterministic reports";
    return out;
}

struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "oracle equivalence, friendship solver", criterion1},
    {2, "oracle equivalence, triangles-C4 solver", criterion2},
    {3, "branching exhaustiveness", criterion3},
    {4, "maximal-IS counting bound on 2K2-free graphs", criterion4},
    {5, "Konig equality for the bipartite kernel", criterion5},
    {6, "chordal kernel correctness", criterion6},
    {7, "decomposition certificates", criterion7},
    {8, "separator/chordality certificates", criterion8},
    {9, "cut-selection consequences", criterion9},
    {10, "format round-trip and determinism", criterion10},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    bool all_pass = true;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.id != only) continue;
        auto started = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        std::printf("[%s] criterion %d: %s (%s, %.1fs)\n", out.pass ? "PASS" : "FAIL", c.id,
                    c.name, out.detail.c_str(), secs);
        std::fflush(stdout);
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 1;
}
