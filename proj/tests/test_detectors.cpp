#include <catch2/catch_amalgamated.hpp>

#include "brute.hpp"
#include "mis/detectors.hpp"
#include "mis/families.hpp"
#include "mis/generate.hpp"

using namespace mis;

TEST_CASE("induced tK2 on C6", "[detectors]") {
    auto w = find_induced_tk2(make_cycle(6), 2);
    REQUIRE(w);
    REQUIRE(w->parts == std::vector<VertexSet>{{0, 1}, {3, 4}});
    REQUIRE(verify_tk2_witness(make_cycle(6), *w, 2));
}

TEST_CASE("induced tK2 absent in K4, present in 2K2", "[detectors]") {
    REQUIRE_FALSE(find_induced_tk2(make_complete(4), 2));
    auto w = find_induced_tk2(make_tk2(2), 2);
    REQUIRE(w);
    REQUIRE(w->parts == std::vector<VertexSet>{{0, 1}, {2, 3}});
}

TEST_CASE("induced tK2 agrees with subset brute force", "[detectors][property]") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(200 + seed);
        Graph g = gen_gnp(rng.uniform(2, 11), 0.15 + 0.1 * static_cast<double>(seed % 6), rng);
        for (int t = 1; t <= 3; ++t) {
            auto w = find_induced_tk2(g, t);
            CAPTURE(seed, t, g.n());
            REQUIRE(w.has_value() == brute::has_tk2(g, t));
            if (w) REQUIRE(verify_tk2_witness(g, *w, t));
        }
    }
}

TEST_CASE("triangle collections", "[detectors]") {
    auto w = find_triangle_collection(make_t_triangles(3), 3);
    REQUIRE(w);
    REQUIRE(w->parts == std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
    REQUIRE(verify_triangle_collection_witness(make_t_triangles(3), *w, 3));

    REQUIRE_FALSE(find_triangle_collection(make_complete(6), 2));
    REQUIRE_FALSE(find_triangle_collection(make_tc3_c4(1), 2));  // only one triangle exists
}

TEST_CASE("counting tC3 vertex sets", "[detectors]") {
    // t disjoint triangles admit exactly one family
    for (int t = 1; t <= 3; ++t) {
        auto stats = count_tc3_sets(make_t_triangles(t), t);
        REQUIRE(stats.count == 1);
        for (long long h : stats.hit_counts) REQUIRE(h == 1);
    }
    auto k4 = count_tc3_sets(make_complete(4), 1);
    REQUIRE(k4.count == 4);
    REQUIRE(k4.hit_counts == std::vector<long long>{4, 4, 4, 4});
    REQUIRE(count_tc3_sets(make_cycle(5), 1).count == 0);
}

TEST_CASE("short holes", "[detectors]") {
    auto c4 = find_short_hole(make_cycle(4), 6);
    REQUIRE(c4);
    REQUIRE(c4->cycle.size() == 4);
    REQUIRE(verify_hole_witness(make_cycle(4), *c4));

    REQUIRE_FALSE(find_short_hole(make_complete(4), 6));
    REQUIRE_FALSE(find_short_hole(make_cycle(7), 6));
    auto c7 = find_short_hole(make_cycle(7), 7);
    REQUIRE(c7);
    REQUIRE(c7->cycle.size() == 7);
}

TEST_CASE("short hole is not fooled by two disjoint triangles", "[detectors]") {
    REQUIRE_FALSE(find_short_hole(make_t_triangles(2), 6));
}

TEST_CASE("short hole search agrees with brute force", "[detectors][property]") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(300 + seed);
        Graph g = gen_gnp(rng.uniform(4, 11), 0.2 + 0.1 * static_cast<double>(seed % 5), rng);
        auto w = find_short_hole(g, 6);
        CAPTURE(seed, g.n());
        REQUIRE(w.has_value() == brute::has_hole_up_to(g, 6));
        if (w) {
            REQUIRE(verify_hole_witness(g, *w));
            REQUIRE(static_cast<int>(w->cycle.size()) <= 6);
        }
    }
}

TEST_CASE("chordality on trees and holes", "[detectors]") {
    Rng rng(7);
    Graph tree = gen_tree(12, rng);
    auto res = chordality(tree);
    REQUIRE(res.chordal());
    REQUIRE(res.elimination_order->size() == 12);

    auto c4 = chordality(make_cycle(4));
    REQUIRE_FALSE(c4.chordal());
    REQUIRE(verify_hole_witness(make_cycle(4), *c4.hole));
    REQUIRE(c4.hole->cycle.size() == 4);
}

TEST_CASE("K5 minus an edge is chordal", "[detectors]") {
    Graph g = make_complete(5);
    // rebuild without edge 0-1
    Graph h(5);
    for (auto [u, v] : g.edges())
        if (!(u == 0 && v == 1)) h.add_edge(u, v);
    REQUIRE(brute::is_chordal(h));  // derived: brute-force hole search
    auto res = chordality(h);
    REQUIRE(res.chordal());
}

TEST_CASE("elimination orders are perfect", "[detectors][property]") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(400 + seed);
        Graph g = gen_gnp(rng.uniform(1, 9), 0.2 + 0.1 * static_cast<double>(seed % 6), rng);
        auto res = chordality(g);
        CAPTURE(seed, g.n());
        REQUIRE(res.chordal() == brute::is_chordal(g));
        if (res.chordal()) {
            // eliminating in order never exposes a non-clique later neighborhood
            const auto& order = *res.elimination_order;
            std::vector<int> pos(static_cast<size_t>(g.n()), 0);
            for (int i = 0; i < g.n(); ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
            for (int i = 0; i < g.n(); ++i) {
                Vertex v = order[static_cast<size_t>(i)];
                VertexSet later;
                for (Vertex u : g.neighbors(v))
                    if (pos[static_cast<size_t>(u)] > i) later.push_back(u);
                REQUIRE(g.is_clique(later));
            }
        } else {
            REQUIRE(verify_hole_witness(g, *res.hole));
        }
    }
}

TEST_CASE("induced minor: C6 contains C3", "[detectors]") {
    auto w = has_induced_minor(make_cycle(6), make_cycle(3));
    REQUIRE(w);
    REQUIRE(verify_induced_minor_witness(make_cycle(6), make_cycle(3), *w));
}

TEST_CASE("induced minor: forests have no C3", "[detectors]") {
    Rng rng(9);
    for (int round = 0; round < 5; ++round)
        REQUIRE_FALSE(has_induced_minor(gen_tree(10, rng), make_cycle(3)));
}

TEST_CASE("induced minor: identity model", "[detectors]") {
    Graph g = make_petersen();
    auto w = has_induced_minor(g, g, InducedMinorCaps{16, 10});
    REQUIRE(w);
    REQUIRE(verify_induced_minor_witness(g, g, *w));
    for (const VertexSet& part : w->parts) REQUIRE(part.size() == 1);
}

TEST_CASE("induced minor caps are enforced", "[detectors]") {
    REQUIRE_THROWS_AS(has_induced_minor(Graph(17), make_cycle(3)), CapExceededError);
    REQUIRE_THROWS_AS(has_induced_minor(Graph(10), make_cycle(9)), CapExceededError);
}

TEST_CASE("C3 as induced minor means a cycle exists", "[detectors][property]") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(500 + seed);
        Graph g = gen_gnp(rng.uniform(1, 10), 0.10 + 0.08 * static_cast<double>(seed % 5), rng);
        auto w = has_induced_minor(g, make_cycle(3));
        CAPTURE(seed, g.n(), g.m());
        REQUIRE(w.has_value() == !brute::is_forest(g));
        if (w) REQUIRE(verify_induced_minor_witness(g, make_cycle(3), *w));
    }
}

TEST_CASE("C4 as induced minor means a hole exists", "[detectors][property]") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(600 + seed);
        Graph g = gen_gnp(rng.uniform(1, 10), 0.15 + 0.1 * static_cast<double>(seed % 5), rng);
        auto w = has_induced_minor(g, make_cycle(4));
        CAPTURE(seed, g.n(), g.m());
        REQUIRE(w.has_value() == !brute::is_chordal(g));
        if (w) REQUIRE(verify_induced_minor_witness(g, make_cycle(4), *w));
    }
}

TEST_CASE("cycles exclude the friendship pattern for t >= 2", "[detectors]") {
    // every induced minor of a cycle has maximum degree 2; the apex has degree 4
    REQUIRE_FALSE(has_induced_minor(make_cycle(9), make_k1_tk2(2)));
    REQUIRE(has_induced_minor(make_cycle(9), make_k1_tk2(1)));  // K1+1K2 = triangle
    REQUIRE_FALSE(has_induced_minor(make_cycle(12), make_tc3_c4(1), InducedMinorCaps{16, 8}));
}

TEST_CASE("friendship pattern and triangle pattern in their own graphs", "[detectors]") {
    for (int t = 1; t <= 2; ++t) {
        Graph f = make_k1_tk2(t);
        REQUIRE(has_induced_minor(f, f, InducedMinorCaps{16, 2 * t + 1}));
        Graph tc = make_tc3_c4(t);
        REQUIRE(has_induced_minor(tc, tc, InducedMinorCaps{16, 3 * t + 4}));
    }
}
