#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "domatic/bench.hpp"
#include "domatic/combinatorics.hpp"
#include "domatic/graph.hpp"
#include "domatic/solvers.hpp"

using nlohmann::json;
using namespace domatic;

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

json partition_json(const std::array<VertexSet, 3>& parts) {
    json p;
    p["D1"] = parts[0].to_vector();
    p["D2"] = parts[1].to_vector();
    p["D3"] = parts[2].to_vector();
    return p;
}

VertexSet set_from_json(const json& ids, int n) {
    VertexSet s(n);
    for (const auto& v : ids) {
        int id = v.get<int>();
        if (id < 0 || id >= n) throw std::runtime_error("partition vertex id out of range");
        s.set(id);
    }
    return s;
}

json stats_json(const SearchStats& stats) {
    json s;
    s["nodes"] = stats.nodes;
    s["assigns"] = stats.assigns;
    s["elapsed_ms"] = stats.elapsed_ms;
    if (stats.runs > 0) {
        s["runs"] = stats.runs;
        s["budget_capped"] = stats.budget_capped;
    }
    return s;
}

int cmd_solve(const std::string& algo, const std::string& input, double c, uint64_t seed,
              bool with_stats) {
    Graph g = parse_graph(read_file(input));
    SolveOutcome outcome;
    if (algo == "brute") {
        outcome = solve_brute_force(g);
    } else if (algo == "dp") {
        int delta = domatic_number_dp(g);
        outcome.verdict = delta >= 3 ? Verdict::found : Verdict::not_found;
        outcome.stats.nodes = 1;
        if (outcome.verdict == Verdict::found) outcome = solve_branching(g);
    } else if (algo == "branch") {
        outcome = solve_branching(g);
    } else if (algo == "bounded") {
        outcome = solve_bounded_det(g);
    } else if (algo == "rand") {
        outcome = solve_bounded_rand(g, c, seed);
    } else if (algo == "auto") {
        if (g.max_degree() <= 2) {
            outcome = solve_max_deg2(g);
        } else if (precheck(g) == Precheck::definitely_no) {
            outcome.verdict = Verdict::not_found;
            outcome.stats.nodes = 1;
        } else {
            outcome = solve_branching(g);
        }
    } else {
        throw std::runtime_error("unknown algorithm: " + algo);
    }

    json out;
    out["verdict"] = outcome.verdict == Verdict::found ? "found" : "not_found";
    if (outcome.partition) out["partition"] = partition_json(*outcome.partition);
    if (with_stats) out["stats"] = stats_json(outcome.stats);
    std::cout << out.dump(2) << '\n';
    return outcome.verdict == Verdict::found ? kExitFound : kExitNotFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers for partitioning a graph into three dominating sets"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "decide the three-partition and print it as JSON");
    std::string algo = "auto", input, partition_file, out_file, kind, config_file;
    double c = 3.0;
    uint64_t seed = 1;
    bool with_stats = false;
    solve->add_option("--algo", algo, "brute|dp|branch|bounded|rand|auto")
        ->check(CLI::IsMember({"brute", "dp", "branch", "bounded", "rand", "auto"}));
    solve->add_option("--input", input, "graph file")->required();
    solve->add_option("--c", c, "randomized solver confidence parameter");
    solve->add_option("--seed", seed, "randomized solver seed");
    solve->add_flag("--stats", with_stats, "include search statistics");

    // delta
    auto* delta = app.add_subcommand("delta", "print the domatic number");
    delta->add_option("--input", input, "graph file")->required();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    int gen_k = 0, gen_n = 0, gen_max_deg = 0;
    gen->add_option("--kind", kind, "cycle|path|complete|random")
        ->required()
        ->check(CLI::IsMember({"cycle", "path", "complete", "random"}));
    gen->add_option("--k", gen_k, "size for cycle/path/complete");
    gen->add_option("--n", gen_n, "vertex count for random");
    gen->add_option("--max-deg", gen_max_deg, "degree bound for random");
    gen->add_option("--seed", seed, "seed for random");
    gen->add_option("--out", out_file, "output file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check a candidate partition");
    verify->add_option("--input", input, "graph file")->required();
    verify->add_option("--partition", partition_file, "partition JSON file")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "run a benchmark sweep");
    std::string bench_format = "csv";
    bench->add_option("--config", config_file, "sweep config JSON")->required();
    bench->add_option("--out", out_file, "report file")->required();
    bench->add_option("--format", bench_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitError;
    }

    try {
        if (solve->parsed()) return cmd_solve(algo, input, c, seed, with_stats);
        if (delta->parsed()) {
            Graph g = parse_graph(read_file(input));
            std::cout << domatic_number_dp(g) << '\n';
            return kExitFound;
        }
        if (gen->parsed()) {
            Graph g;
            if (kind == "cycle")
                g = Graph::cycle(gen_k);
            else if (kind == "path")
                g = Graph::path(gen_k);
            else if (kind == "complete")
                g = Graph::complete(gen_k);
            else
                g = Graph::random_bounded(gen_n, gen_max_deg, seed);
            write_file(out_file, write_graph(g));
            return kExitFound;
        }
        if (verify->parsed()) {
            Graph g = parse_graph(read_file(input));
            json p = json::parse(read_file(partition_file));
            bool ok = verify_three_partition(g, set_from_json(p.at("D1"), g.num_vertices()),
                                             set_from_json(p.at("D2"), g.num_vertices()),
                                             set_from_json(p.at("D3"), g.num_vertices()));
            std::cout << (ok ? "valid" : "invalid") << '\n';
            return ok ? kExitFound : kExitNotFound;
        }
        if (bench->parsed()) {
            BenchConfig config = parse_bench_config(read_file(config_file));
            auto records = run_suite(config);
            write_file(out_file, bench_format == "csv" ? emit_report_csv(records)
                                                       : emit_report_json(records));
            return kExitFound;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
