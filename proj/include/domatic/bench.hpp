#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domatic/graph.hpp"
#include "domatic/solvers.hpp"

namespace domatic {

struct BenchRecord {
    std::string family;
    int n = 0;
    int max_deg = 0;
    uint64_t seed = 0;
    std::string algorithm;
    std::string verdict;  // "found" | "not_found" | "timeout"
    uint64_t nodes = 0;
    uint64_t assigns = 0;
    double elapsed_ms = 0.0;
    double base = 1.0;  // nodes^(1/n)
};

struct FamilySpec {
    std::string name;  // cycle | path | complete | prism | random
    int k_min = 0, k_max = -1;         // cycle/path/complete/prism
    int n = 0, max_deg = 0;            // random
    std::vector<uint64_t> seeds;       // random
};

struct BenchConfig {
    std::vector<FamilySpec> families;
    std::vector<std::string> algorithms;
    double timeout_ms = 60000.0;
    int workers = 1;
    double rand_c = 3.0;
    uint64_t rand_seed = 1;
};

// JSON config document: {"timeout_ms":..., "workers":..., "algorithms":[...],
// "families":[{"name":"cycle","k_min":3,"k_max":12},
//             {"name":"random","n":18,"max_deg":3,"seeds":[1,2]}]}
BenchConfig parse_bench_config(const std::string& text);

// one record per (instance, algorithm) pair, in config order; unknown
// algorithm or family names are rejected before any run
std::vector<BenchRecord> run_suite(const BenchConfig& config);

std::string emit_report_csv(const std::vector<BenchRecord>& records);
std::string emit_report_json(const std::vector<BenchRecord>& records);
std::vector<BenchRecord> parse_report_csv(const std::string& text);
std::vector<BenchRecord> parse_report_json(const std::string& text);

bool operator==(const BenchRecord& a, const BenchRecord& b);

}  // namespace domatic
