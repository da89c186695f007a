#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "brute.hpp"
#include "mis/generate.hpp"
#include "mis/io.hpp"
#include "mis/report.hpp"

using namespace mis;

namespace {

bool same_graph(const Graph& a, const Graph& b) {
    return a.n() == b.n() && a.edges() == b.edges();
}

}  // namespace

TEST_CASE("dimacs parsing of K3", "[io]") {
    std::istringstream in("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    Graph g = parse_graph(in, GraphFormat::dimacs);
    REQUIRE(same_graph(g, make_complete(3)));
}

TEST_CASE("empty edgelist is the 0-vertex graph", "[io]") {
    std::istringstream in("");
    Graph g = parse_graph(in, GraphFormat::edgelist);
    REQUIRE(g.n() == 0);
}

TEST_CASE("self-loops are rejected with the line number", "[io]") {
    std::istringstream in("p edge 2 1\ne 1 1\n");
    try {
        parse_graph(in, GraphFormat::dimacs);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.line == 2);
    }
    std::istringstream in2("0 0\n");
    REQUIRE_THROWS_AS(parse_graph(in2, GraphFormat::edgelist), ParseError);
}

TEST_CASE("malformed lines carry their line number", "[io]") {
    std::istringstream in("p edge 2 1\ne 1 two\n");
    try {
        parse_graph(in, GraphFormat::dimacs);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.line == 2);
    }
    std::istringstream bad_header("p edge x 1\n");
    REQUIRE_THROWS_AS(parse_graph(bad_header, GraphFormat::dimacs), ParseError);
    std::istringstream out_of_range("p edge 2 1\ne 1 3\n");
    REQUIRE_THROWS_AS(parse_graph(out_of_range, GraphFormat::dimacs), ParseError);
    std::istringstream no_header("e 1 2\n");
    REQUIRE_THROWS_AS(parse_graph(no_header, GraphFormat::dimacs), ParseError);
}

TEST_CASE("duplicate edges collapse", "[io]") {
    std::istringstream in("p edge 2 2\ne 1 2\ne 2 1\n");
    Graph g = parse_graph(in, GraphFormat::dimacs);
    REQUIRE(g.m() == 1);
}

TEST_CASE("round trips are byte-identical in both formats", "[io][property]") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Rng rng(1600 + seed);
        // keep the graph connected so the edgelist format can infer n
        Graph g = gen_tree(rng.uniform(2, 20), rng);
        Rng extra(seed);
        for (int v = 2; v < g.n(); ++v)
            if (extra.chance(0.2)) {
                int u = extra.uniform(0, v - 2);
                if (!g.has_edge(u, v)) g.add_edge(u, v);
            }
        for (GraphFormat fmt : {GraphFormat::dimacs, GraphFormat::edgelist}) {
            std::string once = serialize_graph(g, fmt);
            std::istringstream in(once);
            Graph back = parse_graph(in, fmt);
            CAPTURE(seed, format_name(fmt));
            REQUIRE(same_graph(g, back));
            REQUIRE(serialize_graph(back, fmt) == once);
        }
    }
}

TEST_CASE("generators are deterministic under the seed", "[generate]") {
    Rng a(42), b(42);
    REQUIRE(same_graph(gen_gnp(14, 0.3, a), gen_gnp(14, 0.3, b)));
    Rng c(43), d(43);
    REQUIRE(same_graph(gen_chordal(20, 4, c), gen_chordal(20, 4, d)));
}

TEST_CASE("tree generator makes trees", "[generate]") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(1700 + seed);
        Graph g = gen_tree(10, rng);
        REQUIRE(g.m() == 9);
        REQUIRE(is_connected(g));
        REQUIRE(brute::is_forest(g));
    }
}

TEST_CASE("long cycle generator", "[generate]") {
    Graph g = gen_long_cycle(9);
    REQUIRE(g.n() == 9);
    REQUIRE(g.m() == 9);
    for (int v = 0; v < 9; ++v) REQUIRE(g.degree(v) == 2);
}

TEST_CASE("chordal generator makes chordal graphs", "[generate]") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(1800 + seed);
        Graph g = gen_chordal(25, 5, rng);
        CAPTURE(seed);
        REQUIRE(chordality(g).chordal());
    }
}

TEST_CASE("rejection sampling against the triangle yields forests", "[generate]") {
    Rng rng(19);
    auto res = gen_in_class_rejection(make_k1_tk2(1), 12, 0.15, rng);
    REQUIRE(brute::is_forest(res.graph));
    REQUIRE(res.rejections >= 0);
}

TEST_CASE("reports are deterministic modulo timing", "[report]") {
    Rng rng(21);
    Graph g = gen_gnp(12, 0.3, rng);
    RunOptions opt;
    opt.alg = Algorithm::friendship;
    opt.t = 1;
    opt.verify = true;
    opt.instance_name = "fixed";
    SolveReport r1 = run_solve(g, opt);
    SolveReport r2 = run_solve(g, opt);
    REQUIRE(report_to_json(r1, false) == report_to_json(r2, false));
}

TEST_CASE("verification states on known instances", "[report]") {
    RunOptions opt;
    opt.alg = Algorithm::friendship;
    opt.t = 1;
    opt.verify = true;
    SolveReport tree_rep = run_solve(make_path(5), opt);
    REQUIRE(tree_rep.mis_size == 3);
    REQUIRE(tree_rep.class_verified == "verified-in-class");
    REQUIRE(tree_rep.oracle_size == 3);
    REQUIRE(tree_rep.independence_ok);

    SolveReport cyc_rep = run_solve(make_cycle(4), opt);  // C4 contracts to a triangle
    REQUIRE(cyc_rep.class_verified == "verified-out-of-class");

    RunOptions tri;
    tri.alg = Algorithm::triangles_c4;
    tri.t = 1;
    tri.verify = true;
    SolveReport c7 = run_solve(make_cycle(7), tri);
    REQUIRE(c7.mis_size == 3);
    REQUIRE(c7.class_verified == "verified-in-class");
    REQUIRE(c7.branch_nodes == 1);
}

TEST_CASE("chordal algorithm reports a certificate failure on C4", "[report]") {
    RunOptions opt;
    opt.alg = Algorithm::chordal;
    SolveReport rep = run_solve(make_cycle(4), opt);
    REQUIRE_FALSE(rep.all_checks_passed());
    REQUIRE(rep.checks.failures("input-chordal") == 1);
}
