// misolve: exact Maximum Independent Set solvers for graphs excluding small
// induced minors, plus instance generation and a benchmark harness.

#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "mis/generate.hpp"
#include "mis/io.hpp"
#include "mis/report.hpp"

namespace {

struct SolveArgs {
    std::string alg = "oracle";
    int t = 1;
    std::string input;
    std::string format = "dimacs";
    bool verify = false;
    bool strict = false;
    std::string json_out;
    int oracle_cap = mis::kDefaultOracleCap;
    int minor_cap = 16;
};

struct GenerateArgs {
    std::string kind = "random-gnp";
    int n = 12;
    double p = 0.3;
    uint64_t seed = 1;
    int t = 1;
    std::string pattern = "k1tk2";
    int attempts = 5000;
    int max_clique = 4;
    std::string out;
    std::string format = "dimacs";
    int minor_cap = 16;
};

struct BenchArgs {
    std::string suite = "smoke";
    std::string config = "bench.cfg";
    int jobs = 1;
    std::string json_out;
};

mis::GraphFormat parse_format(const std::string& f) {
    if (f == "dimacs") return mis::GraphFormat::dimacs;
    if (f == "edgelist") return mis::GraphFormat::edgelist;
    throw mis::Error("unknown format '" + f + "'");
}

void print_report(const mis::SolveReport& rep, std::ostream& out) {
    out << rep.instance << ": n=" << rep.n << " m=" << rep.m << " alg=" << rep.algorithm
        << " t=" << rep.t << " mis_size=" << rep.mis_size;
    if (rep.oracle_size >= 0)
        out << " oracle=" << rep.oracle_size << (rep.oracle_size == rep.mis_size ? " (match)" : " (MISMATCH)");
    out << " class=" << rep.class_verified;
    if (rep.branch_nodes >= 0) out << " branch_nodes=" << rep.branch_nodes;
    out << " checks=" << (rep.all_checks_passed() ? "ok" : "FAILED") << " time="
        << rep.elapsed_ms << "ms\n";
    for (const mis::CheckEntry& e : rep.checks.entries())
        if (!e.passed())
            out << "  check failed: " << e.name << " (" << e.failures << "/" << e.runs
                << " runs): " << e.first_detail << "\n";
}

int cmd_solve(const SolveArgs& args) {
    mis::Graph g = mis::parse_graph_file(args.input, parse_format(args.format));
    mis::RunOptions opt;
    auto alg = mis::algorithm_from_name(args.alg);
    if (!alg) throw mis::Error("unknown algorithm '" + args.alg + "'");
    opt.alg = *alg;
    opt.t = args.t;
    opt.verify = args.verify;
    opt.oracle_cap = args.oracle_cap;
    opt.minor_cap = args.minor_cap;
    opt.instance_name = args.input;
    mis::SolveReport rep = mis::run_solve(g, opt);
    print_report(rep, std::cout);
    if (!args.json_out.empty()) {
        std::ofstream out(args.json_out);
        if (!out) throw mis::Error("cannot open '" + args.json_out + "' for writing");
        out << mis::report_to_json(rep).dump(2) << "\n";
    }
    if (args.strict && !rep.all_checks_passed()) return 2;
    return 0;
}

int cmd_generate(const GenerateArgs& args) {
    mis::Rng rng(args.seed);
    mis::Graph g;
    int rejections = -1;
    if (args.kind == "random-gnp") {
        g = mis::gen_gnp(args.n, args.p, rng);
    } else if (args.kind == "tree") {
        g = mis::gen_tree(args.n, rng);
    } else if (args.kind == "chordal") {
        g = mis::gen_chordal(args.n, args.max_clique, rng);
    } else if (args.kind == "long-cycle") {
        g = mis::gen_long_cycle(args.n);
    } else if (args.kind == "bipartite") {
        g = mis::gen_bipartite(args.n, args.p, rng);
    } else if (args.kind == "in-class-rejection") {
        mis::Graph pattern;
        if (args.pattern == "k1tk2")
            pattern = mis::make_k1_tk2(args.t);
        else if (args.pattern == "tc3c4")
            pattern = mis::make_tc3_c4(args.t);
        else
            throw mis::Error("unknown pattern '" + args.pattern + "'");
        mis::InducedMinorCaps caps;
        caps.host_cap = args.minor_cap;
        auto res = mis::gen_in_class_rejection(pattern, args.n, args.p, rng, args.attempts, caps);
        g = std::move(res.graph);
        rejections = res.rejections;
    } else {
        throw mis::Error("unknown generator kind '" + args.kind + "'");
    }

    std::string payload = mis::serialize_graph(g, parse_format(args.format));
    if (args.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(args.out);
        if (!out) throw mis::Error("cannot open '" + args.out + "' for writing");
        out << payload;
        std::cout << "generated " << args.kind << ": n=" << g.n() << " m=" << g.m();
        if (rejections >= 0) std::cout << " rejections=" << rejections;
        std::cout << " -> " << args.out << "\n";
    }
    return 0;
}

struct BenchSuite {
    std::string kind = "random-gnp";
    int count = 10;
    int n = 12;
    double p = 0.3;
    uint64_t seed = 1;
    int t = 1;
    std::string alg = "oracle";
    bool verify = false;
    std::string pattern = "k1tk2";
};

std::map<std::string, BenchSuite> load_suites(const std::string& path) {
    std::map<std::string, BenchSuite> suites;
    std::ifstream in(path);
    if (!in) throw mis::Error("cannot open bench config '" + path + "'");
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t");
            size_t b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        auto dot = key.find('.');
        if (dot == std::string::npos || value.empty())
            throw mis::ParseError("bench config expects suite.key = value", lineno);
        std::string suite = key.substr(0, dot), field = key.substr(dot + 1);
        BenchSuite& s = suites[suite];
        try {
            if (field == "kind") s.kind = value;
            else if (field == "count") s.count = std::stoi(value);
            else if (field == "n") s.n = std::stoi(value);
            else if (field == "p") s.p = std::stod(value);
            else if (field == "seed") s.seed = std::stoull(value);
            else if (field == "t") s.t = std::stoi(value);
            else if (field == "alg") s.alg = value;
            else if (field == "verify") s.verify = (value == "1" || value == "true");
            else if (field == "pattern") s.pattern = value;
            else throw mis::ParseError("unknown bench field '" + field + "'", lineno);
        } catch (const std::invalid_argument&) {
            throw mis::ParseError("bad value for '" + key + "'", lineno);
        }
    }
    return suites;
}

int cmd_bench(const BenchArgs& args) {
    auto suites = load_suites(args.config);
    auto it = suites.find(args.suite);
    if (it == suites.end()) throw mis::Error("no suite '" + args.suite + "' in " + args.config);
    const BenchSuite& suite = it->second;
    auto alg = mis::algorithm_from_name(suite.alg);
    if (!alg) throw mis::Error("unknown algorithm '" + suite.alg + "'");

    std::vector<mis::SolveReport> reports(static_cast<size_t>(suite.count));
    auto worker = [&](int index) {
        mis::Rng rng(suite.seed + static_cast<uint64_t>(index));
        mis::Graph g;
        if (suite.kind == "random-gnp") g = mis::gen_gnp(suite.n, suite.p, rng);
        else if (suite.kind == "tree") g = mis::gen_tree(suite.n, rng);
        else if (suite.kind == "chordal") g = mis::gen_chordal(suite.n, 4, rng);
        else if (suite.kind == "long-cycle") g = mis::gen_long_cycle(suite.n + index);
        else if (suite.kind == "bipartite") g = mis::gen_bipartite(suite.n, suite.p, rng);
        else if (suite.kind == "in-class-rejection") {
            mis::Graph pattern = suite.pattern == "tc3c4" ? mis::make_tc3_c4(suite.t)
                                                          : mis::make_k1_tk2(suite.t);
            g = mis::gen_in_class_rejection(pattern, suite.n, suite.p, rng).graph;
        } else {
            throw mis::Error("unknown generator kind '" + suite.kind + "'");
        }
        mis::RunOptions opt;
        opt.alg = *alg;
        opt.t = suite.t;
        opt.verify = suite.verify;
        char name[64];
        std::snprintf(name, sizeof(name), "%s-%03d", args.suite.c_str(), index);
        opt.instance_name = name;
        reports[static_cast<size_t>(index)] = mis::run_solve(g, opt);
    };

    int jobs = std::max(1, args.jobs);
    if (jobs == 1) {
        for (int i = 0; i < suite.count; ++i) worker(i);
    } else {
        std::vector<std::thread> pool;
        std::mutex next_mutex;
        int next = 0;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&]() {
                while (true) {
                    int mine;
                    {
                        std::lock_guard<std::mutex> lock(next_mutex);
                        if (next >= suite.count) return;
                        mine = next++;
                    }
                    worker(mine);
                }
            });
        for (std::thread& th : pool) th.join();
    }

    double total_ms = 0;
    bool all_ok = true;
    for (const mis::SolveReport& rep : reports) {
        print_report(rep, std::cout);
        total_ms += rep.elapsed_ms;
        all_ok = all_ok && rep.all_checks_passed() &&
                 (rep.oracle_size < 0 || rep.oracle_size == rep.mis_size);
    }
    std::cout << "suite " << args.suite << ": " << suite.count << " instances, total "
              << total_ms << "ms, " << (all_ok ? "all checks ok" : "CHECK FAILURES") << "\n";
    if (!args.json_out.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const mis::SolveReport& rep : reports) arr.push_back(mis::report_to_json(rep));
        std::ofstream out(args.json_out);
        if (!out) throw mis::Error("cannot open '" + args.json_out + "' for writing");
        out << arr.dump(2) << "\n";
    }
    return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact MIS solvers for graphs excluding small induced minors"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "solve MIS on a graph file");
    solve->add_option("--alg", solve_args.alg,
                      "oracle|friendship|triangles-c4|bipartite|chordal");
    solve->add_option("--t", solve_args.t, "pattern parameter t");
    solve->add_option("--in", solve_args.input, "input graph file")->required();
    solve->add_option("--format", solve_args.format, "dimacs|edgelist");
    solve->add_flag("--verify", solve_args.verify,
                    "cross-check against the exact oracle and the induced-minor oracle");
    solve->add_flag("--strict", solve_args.strict, "exit 2 when any certificate check fails");
    solve->add_option("--json", solve_args.json_out, "write the report as JSON");
    solve->add_option("--oracle-cap", solve_args.oracle_cap, "exact-oracle size cap")
        ->envname("MISOLVE_ORACLE_CAP");
    solve->add_option("--minor-cap", solve_args.minor_cap, "induced-minor oracle size cap")
        ->envname("MISOLVE_MINOR_CAP");

    GenerateArgs gen_args;
    CLI::App* gen = app.add_subcommand("generate", "generate an instance");
    gen->add_option("--kind", gen_args.kind,
                    "random-gnp|tree|chordal|long-cycle|bipartite|in-class-rejection");
    gen->add_option("--n", gen_args.n, "vertex count");
    gen->add_option("--p", gen_args.p, "edge probability");
    gen->add_option("--seed", gen_args.seed, "random seed");
    gen->add_option("--t", gen_args.t, "pattern parameter t (in-class-rejection)");
    gen->add_option("--pattern", gen_args.pattern, "k1tk2|tc3c4 (in-class-rejection)");
    gen->add_option("--attempts", gen_args.attempts, "rejection budget");
    gen->add_option("--max-clique", gen_args.max_clique, "clique size for chordal generation");
    gen->add_option("--out", gen_args.out, "output file (stdout when omitted)");
    gen->add_option("--format", gen_args.format, "dimacs|edgelist");
    gen->add_option("--minor-cap", gen_args.minor_cap, "induced-minor oracle size cap")
        ->envname("MISOLVE_MINOR_CAP");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "run a named benchmark suite");
    bench->add_option("--suite", bench_args.suite, "suite name from the config");
    bench->add_option("--config", bench_args.config, "bench config file");
    bench->add_option("--jobs", bench_args.jobs, "parallel workers");
    bench->add_option("--json", bench_args.json_out, "write all reports as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(solve_args);
        if (gen->parsed()) return cmd_generate(gen_args);
        if (bench->parsed()) return cmd_bench(bench_args);
    } catch (const mis::ParseError& e) {
        std::cerr << "error (line " << e.line << "): " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
