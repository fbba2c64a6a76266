#include "domatic/bench.hpp"

#include <atomic>
#include <cmath>
#include <future>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace domatic {

using nlohmann::json;

namespace {

const std::vector<std::string> kAlgorithms = {"brute_force", "dp",          "branching",
                                              "max_deg2",    "bounded_det", "bounded_rand"};
const std::vector<std::string> kSizedFamilies = {"cycle", "path", "complete", "prism"};

bool known_algorithm(const std::string& a) {
    for (const auto& k : kAlgorithms)
        if (k == a) return true;
    return false;
}

struct Instance {
    std::string family;
    uint64_t seed = 0;
    Graph graph;
};

std::vector<Instance> expand_instances(const BenchConfig& config) {
    std::vector<Instance> out;
    for (const FamilySpec& f : config.families) {
        if (f.name == "random") {
            for (uint64_t s : f.seeds)
                out.push_back({f.name, s, Graph::random_bounded(f.n, f.max_deg, s)});
            continue;
        }
        for (int k = f.k_min; k <= f.k_max; ++k) {
            Graph g;
            if (f.name == "cycle")
                g = Graph::cycle(k);
            else if (f.name == "path")
                g = Graph::path(k);
            else if (f.name == "complete")
                g = Graph::complete(k);
            else
                g = Graph::prism(k);
            out.push_back({f.name, 0, std::move(g)});
        }
    }
    return out;
}

void validate(const BenchConfig& config) {
    for (const auto& a : config.algorithms)
        if (!known_algorithm(a)) throw std::invalid_argument("unknown algorithm: " + a);
    for (const FamilySpec& f : config.families) {
        bool sized = false;
        for (const auto& k : kSizedFamilies) sized |= (f.name == k);
        if (!sized && f.name != "random")
            throw std::invalid_argument("unknown family: " + f.name);
    }
    if (config.timeout_ms <= 0) throw std::invalid_argument("timeout must be positive");
    if (config.workers < 1) throw std::invalid_argument("workers must be >= 1");
}

BenchRecord run_one(const Instance& inst, const std::string& algo, const BenchConfig& config) {
    BenchRecord rec;
    rec.family = inst.family;
    rec.n = inst.graph.num_vertices();
    rec.max_deg = inst.graph.max_degree();
    rec.seed = inst.seed;
    rec.algorithm = algo;

    SolveOptions opts;
    opts.record_traces = false;
    opts.deadline = std::chrono::steady_clock::now() +
                    std::chrono::microseconds(int64_t(config.timeout_ms * 1000));

    SolveOutcome outcome;
    if (algo == "dp") {
        auto start = std::chrono::steady_clock::now();
        try {
            int delta = domatic_number_dp(inst.graph, opts);
            outcome.verdict = delta >= 3 ? Verdict::found : Verdict::not_found;
        } catch (const std::invalid_argument&) {
            outcome.verdict = Verdict::not_found;
        }
        outcome.stats.nodes = 1;
        outcome.stats.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
    } else if (algo == "brute_force") {
        outcome = solve_brute_force(inst.graph, opts);
    } else if (algo == "branching") {
        outcome = solve_branching(inst.graph, opts);
    } else if (algo == "max_deg2") {
        outcome = solve_max_deg2(inst.graph, opts);
    } else if (algo == "bounded_det") {
        outcome = solve_bounded_det(inst.graph, opts);
    } else {
        outcome = solve_bounded_rand(inst.graph, config.rand_c, config.rand_seed, opts);
    }

    switch (outcome.verdict) {
        case Verdict::found: rec.verdict = "found"; break;
        case Verdict::not_found: rec.verdict = "not_found"; break;
        case Verdict::timeout: rec.verdict = "timeout"; break;
    }
    rec.nodes = std::max<uint64_t>(outcome.stats.nodes, 1);
    rec.assigns = outcome.stats.assigns;
    rec.elapsed_ms = outcome.stats.elapsed_ms;
    rec.base = rec.n > 0 ? std::pow(double(rec.nodes), 1.0 / rec.n) : 1.0;
    return rec;
}

}  // namespace

BenchConfig parse_bench_config(const std::string& text) {
    json j = json::parse(text);
    BenchConfig config;
    config.timeout_ms = j.value("timeout_ms", 60000.0);
    config.workers = j.value("workers", 1);
    config.rand_c = j.value("rand_c", 3.0);
    config.rand_seed = j.value("rand_seed", uint64_t{1});
    for (const auto& a : j.at("algorithms")) config.algorithms.push_back(a.get<std::string>());
    for (const auto& f : j.at("families")) {
        FamilySpec spec;
        spec.name = f.at("name").get<std::string>();
        if (spec.name == "random") {
            spec.n = f.at("n").get<int>();
            spec.max_deg = f.at("max_deg").get<int>();
            for (const auto& s : f.at("seeds")) spec.seeds.push_back(s.get<uint64_t>());
        } else {
            spec.k_min = f.at("k_min").get<int>();
            spec.k_max = f.at("k_max").get<int>();
        }
        config.families.push_back(std::move(spec));
    }
    validate(config);
    return config;
}

std::vector<BenchRecord> run_suite(const BenchConfig& config) {
    validate(config);
    std::vector<Instance> instances = expand_instances(config);
    struct Job {
        const Instance* inst;
        const std::string* algo;
    };
    std::vector<Job> jobs;
    for (const Instance& inst : instances)
        for (const std::string& algo : config.algorithms) jobs.push_back({&inst, &algo});

    std::vector<BenchRecord> records(jobs.size());
    if (config.workers <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i)
            records[i] = run_one(*jobs[i].inst, *jobs[i].algo, config);
        return records;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            records[i] = run_one(*jobs[i].inst, *jobs[i].algo, config);
        }
    };
    std::vector<std::future<void>> pool;
    for (int w = 0; w < config.workers; ++w)
        pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
    return records;
}

namespace {

std::string fmt_double(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

}  // namespace

std::string emit_report_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream os;
    os << "family,n,max_deg,seed,algorithm,verdict,nodes,assigns,elapsed_ms,base\n";
    for (const BenchRecord& r : records)
        os << r.family << ',' << r.n << ',' << r.max_deg << ',' << r.seed << ',' << r.algorithm
           << ',' << r.verdict << ',' << r.nodes << ',' << r.assigns << ','
           << fmt_double(r.elapsed_ms) << ',' << fmt_double(r.base) << '\n';
    return os.str();
}

std::string emit_report_json(const std::vector<BenchRecord>& records) {
    json arr = json::array();
    for (const BenchRecord& r : records)
        arr.push_back({{"family", r.family},
                       {"n", r.n},
                       {"max_deg", r.max_deg},
                       {"seed", r.seed},
                       {"algorithm", r.algorithm},
                       {"verdict", r.verdict},
                       {"nodes", r.nodes},
                       {"assigns", r.assigns},
                       {"elapsed_ms", r.elapsed_ms},
                       {"base", r.base}});
    return arr.dump(2);
}

std::vector<BenchRecord> parse_report_csv(const std::string& text) {
    std::vector<BenchRecord> out;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty CSV report");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        BenchRecord r;
        std::string field;
        auto next = [&]() {
            if (!std::getline(ls, field, ',')) throw std::invalid_argument("short CSV row");
            return field;
        };
        r.family = next();
        r.n = std::stoi(next());
        r.max_deg = std::stoi(next());
        r.seed = std::stoull(next());
        r.algorithm = next();
        r.verdict = next();
        r.nodes = std::stoull(next());
        r.assigns = std::stoull(next());
        r.elapsed_ms = std::stod(next());
        r.base = std::stod(next());
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<BenchRecord> parse_report_json(const std::string& text) {
    std::vector<BenchRecord> out;
    for (const auto& j : json::parse(text)) {
        BenchRecord r;
        r.family = j.at("family").get<std::string>();
        r.n = j.at("n").get<int>();
        r.max_deg = j.at("max_deg").get<int>();
        r.seed = j.at("seed").get<uint64_t>();
        r.algorithm = j.at("algorithm").get<std::string>();
        r.verdict = j.at("verdict").get<std::string>();
        r.nodes = j.at("nodes").get<uint64_t>();
        r.assigns = j.at("assigns").get<uint64_t>();
        r.elapsed_ms = j.at("elapsed_ms").get<double>();
        r.base = j.at("base").get<double>();
        out.push_back(std::move(r));
    }
    return out;
}

bool operator==(const BenchRecord& a, const BenchRecord& b) {
    return a.family == b.family && a.n == b.n && a.max_deg == b.max_deg && a.seed == b.seed &&
           a.algorithm == b.algorithm && a.verdict == b.verdict && a.nodes == b.nodes &&
           a.assigns == b.assigns && a.elapsed_ms == b.elapsed_ms && a.base == b.base;
}

}  // namespace domatic
