#pragma once

#include <chrono>
#include <optional>
#include <string>

#include <json.hpp>

#include "mis/checks.hpp"
#include "mis/detectors.hpp"
#include "mis/families.hpp"
#include "mis/friendship.hpp"
#include "mis/graph.hpp"
#include "mis/kernels.hpp"
#include "mis/triangles_c4.hpp"

namespace mis {

enum class Algorithm { oracle, friendship, triangles_c4, bipartite, chordal };

inline const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::oracle: return "oracle";
        case Algorithm::friendship: return "friendship";
        case Algorithm::triangles_c4: return "triangles-c4";
        case Algorithm::bipartite: return "bipartite";
        case Algorithm::chordal: return "chordal";
    }
    return "unknown";
}

inline std::optional<Algorithm> algorithm_from_name(const std::string& s) {
    if (s == "oracle") return Algorithm::oracle;
    if (s == "friendship") return Algorithm::friendship;
    if (s == "triangles-c4") return Algorithm::triangles_c4;
    if (s == "bipartite") return Algorithm::bipartite;
    if (s == "chordal") return Algorithm::chordal;
    return std::nullopt;
}

struct SolveReport {
    std::string instance;
    int n = 0;
    long long m = 0;
    std::string algorithm;
    int t = 0;
    int mis_size = 0;
    VertexSet mis_vertices;
    bool independence_ok = false;
    CheckLog checks;
    bool class_violation = false;
    std::vector<std::string> violations;
    std::string class_verified = "unverified";  // or verified-in-class / verified-out-of-class
    long long branch_nodes = -1;                // -1: not applicable
    int oracle_size = -1;                       // -1: not computed
    double elapsed_ms = 0.0;

    bool all_checks_passed() const { return checks.all_passed(); }
};

inline nlohmann::json report_to_json(const SolveReport& r, bool include_timing = true) {
    nlohmann::json j;
    j["instance"] = r.instance;
    j["n"] = r.n;
    j["m"] = r.m;
    j["algorithm"] = r.algorithm;
    j["t"] = r.t;
    j["mis_size"] = r.mis_size;
    j["mis_vertices"] = r.mis_vertices;
    j["independence_ok"] = r.independence_ok;
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckEntry& e : r.checks.entries()) {
        nlohmann::json c;
        c["name"] = e.name;
        c["passed"] = e.passed();
        c["runs"] = e.runs;
        c["failures"] = e.failures;
        if (!e.passed()) {
            c["witness"] = e.first_witness;
            c["detail"] = e.first_detail;
        }
        checks.push_back(std::move(c));
    }
    j["certificate_checks"] = std::move(checks);
    j["class_violation"] = r.class_violation;
    if (!r.violations.empty()) j["violations"] = r.violations;
    j["class_verified"] = r.class_verified;
    if (r.branch_nodes >= 0) j["branch_nodes"] = r.branch_nodes;
    if (r.oracle_size >= 0) {
        j["oracle_size"] = r.oracle_size;
        j["oracle_match"] = (r.oracle_size == r.mis_size);
    }
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

struct RunOptions {
    Algorithm alg = Algorithm::oracle;
    int t = 1;
    bool verify = false;
    int oracle_cap = kDefaultOracleCap;
    int minor_cap = 16;
    std::string instance_name = "unnamed";
};

// One solver invocation wrapped into a report: dispatch, independence check,
// optional oracle cross-check, optional class verification by the
// induced-minor oracle.
inline SolveReport run_solve(const Graph& g, const RunOptions& opt) {
    SolveReport rep;
    rep.instance = opt.instance_name;
    rep.n = g.n();
    rep.m = g.m();
    rep.algorithm = algorithm_name(opt.alg);
    rep.t = opt.t;

    auto started = std::chrono::steady_clock::now();
    switch (opt.alg) {
        case Algorithm::oracle:
            rep.mis_vertices = mis_oracle(g, opt.oracle_cap);
            break;
        case Algorithm::bipartite:
            try {
                rep.mis_vertices = mis_bipartite(g);
                rep.checks.record("input-bipartite", true);
            } catch (const NotBipartiteError& e) {
                rep.checks.record("input-bipartite", false, e.odd_cycle, e.what());
            }
            break;
        case Algorithm::chordal:
            try {
                rep.mis_vertices = mis_chordal(g);
                rep.checks.record("input-chordal", true);
            } catch (const NotChordalError& e) {
                rep.checks.record("input-chordal", false, e.hole, e.what());
            }
            break;
        case Algorithm::friendship: {
            FriendshipResult res = solve_friendship(g, opt.t);
            rep.mis_vertices = std::move(res.independent_set);
            rep.checks = std::move(res.checks);
            rep.class_violation = res.class_violation;
            rep.violations = std::move(res.violations);
            break;
        }
        case Algorithm::triangles_c4: {
            TrianglesResult res =
                solve_triangles_c4(g, opt.t, {}, TrianglesOptions{6, opt.oracle_cap});
            rep.mis_vertices = std::move(res.independent_set);
            rep.checks = std::move(res.checks);
            rep.class_violation = res.class_violation;
            rep.branch_nodes = res.branch.nodes;
            break;
        }
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               started)
                         .count();

    rep.mis_size = static_cast<int>(rep.mis_vertices.size());
    rep.independence_ok = g.is_independent_set(rep.mis_vertices);
    if (rep.checks.runs("solution-independent") == 0)
        rep.checks.record("solution-independent", rep.independence_ok, rep.mis_vertices);

    if (opt.verify) {
        if (g.n() <= opt.oracle_cap && (opt.alg != Algorithm::oracle)) {
            rep.oracle_size = mis_oracle_size(g, opt.oracle_cap);
            rep.checks.record("oracle-match", rep.oracle_size == rep.mis_size && rep.independence_ok,
                              rep.mis_vertices,
                              "oracle " + std::to_string(rep.oracle_size) + " vs " +
                                  std::to_string(rep.mis_size));
        }
        std::optional<Graph> pattern;
        if (opt.alg == Algorithm::friendship) pattern = make_k1_tk2(opt.t);
        if (opt.alg == Algorithm::triangles_c4) pattern = make_tc3_c4(opt.t);
        // exceeding a verification cap degrades to "unverified" instead of erroring
        if (pattern && g.n() <= opt.minor_cap && pattern->n() <= opt.minor_cap) {
            InducedMinorCaps caps;
            caps.host_cap = opt.minor_cap;
            caps.pattern_cap = pattern->n();
            rep.class_verified = has_induced_minor(g, *pattern, caps) ? "verified-out-of-class"
                                                                      : "verified-in-class";
        }
    }
    return rep;
}

}  // namespace mis
