#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "domatic/graph.hpp"
#include "domatic/partition_state.hpp"

namespace domatic {

enum class Verdict { found, not_found, timeout };

struct SearchStats {
    uint64_t nodes = 0;    // recursive search invocations
    uint64_t assigns = 0;  // assign calls
    std::vector<int> maxgap_trace;   // sampled at each node (branching solver)
    std::vector<int> surplus_trace;  // sampled at each node (branching solver)
    double elapsed_ms = 0.0;
    uint64_t runs = 0;           // randomized solver: executed runs
    bool budget_capped = false;  // randomized solver: N exceeded the run budget
};

struct SolveOutcome {
    Verdict verdict = Verdict::not_found;
    std::optional<std::array<VertexSet, 3>> partition;
    SearchStats stats;
};

struct SolveOptions {
    bool record_traces = true;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    uint64_t run_budget = 200000;  // randomized solver cap on repetitions
};

enum class Precheck { definitely_no, unknown };

// definitely_no iff n >= 1 and min-deg(G) <= 1 (delta(G) <= min-deg + 1 < 3)
Precheck precheck(const Graph& g);

// Exhaustive enumeration of all assignments V -> {1,2,3}; lexicographically
// first witness. n <= 16.
SolveOutcome solve_brute_force(const Graph& g, const SolveOptions& opts = {});

// Subset DP over dominating sets; exact domatic number. 1 <= n <= 24.
int domatic_number_dp(const Graph& g, const SolveOptions& opts = {});

// Gap-guided branching with critical-vertex handling and auxiliary sets.
SolveOutcome solve_branching(const Graph& g, const SolveOptions& opts = {});

// Polynomial decision for max-deg <= 2: found iff every component is a
// cycle of length divisible by three.
SolveOutcome solve_max_deg2(const Graph& g, const SolveOptions& opts = {});

// Bounded-degree deterministic search: dominate one undominated frontier
// vertex per step by enumerating assignments of its open neighborhood.
SolveOutcome solve_bounded_det(const Graph& g, const SolveOptions& opts = {});

// Bounded-degree randomized search, repeated ceil(c * r^(n/2)) times with
// r = d(max_deg) / 3^(max_deg - 2). not_found is one-sided; the partition of
// a found verdict always verifies. Deterministic given (c, seed).
SolveOutcome solve_bounded_rand(const Graph& g, double c, uint64_t seed,
                                const SolveOptions& opts = {});

// Classification half of the critical-vertex handler: scans vertices in id
// order and reports the first case that fires.
enum class CriticalCase {
    none,           // no vertex matched
    dead_end,       // balance(v) < 0
    forced_index,   // v in R, member of exactly two aux sets
    critical_branch // balance(v) == 0 with open sets left
};
struct CriticalScan {
    CriticalCase kind = CriticalCase::none;
    int vertex = -1;
    int forced_index = -1;            // forced_index
    int pivot = -1;                   // critical_branch: lowest id in N[v] & R
    std::vector<int> branch_indices;  // critical_branch: i with pivot not in A_i
                                      // and v not dominated by D_i
};
CriticalScan scan_critical(const PartitionState& st);

}  // namespace domatic
