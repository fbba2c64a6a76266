#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domatic/graph.hpp"

namespace domatic {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);

// Stirling number of the second kind, closed form:
// S2(n,k) = (1/k!) * sum_{i=0}^{k-1} (-1)^i C(k,i) (k-i)^n
BigInt stirling2(int n, int k);

// d(Delta) = sum_{a=0}^{Delta-2} C(Delta,a) * sum_{b=1}^{Delta-a-1} C(Delta-a,b)
BigInt branch_count_d(int delta);

// r(Delta) = d(Delta) / 3^(Delta-2), exact
BigRational rand_base_r(int delta);

// d(Delta)^(1/Delta) and r(Delta)^(1/2) as doubles
double deterministic_base(int delta);
double randomized_base(int delta);

// round half up to four decimal places
double round4(double x);

// minimum dominating set by subset enumeration in increasing size, witness
// lexicographically first among minimum ones; n <= 24. gamma of the empty
// graph is 0 with an empty witness.
std::pair<int, VertexSet> gamma_brute(const Graph& g);

struct AnomalyResult {
    // delta(G) >= 3 and some minimum dominating set is not a part of any
    // partition into three dominating sets
    bool greedy_trap = false;
    // delta(G) >= 3 and every partition into three dominating sets has all
    // parts strictly larger than gamma(G)
    bool no_small_part = false;
};

// exhaustive checker, n <= 12
AnomalyResult check_partition_anomalies(const Graph& g);

struct AnomalyWitness {
    Graph graph;
    uint64_t seed = 0;
};

struct AnomalyWitnesses {
    std::optional<AnomalyWitness> witness_a;
    std::optional<AnomalyWitness> witness_b;
    int candidates_tried = 0;
};

// Searches seeded random connected graphs with 7 <= n <= 9 and min-deg >= 2
// for the first graph satisfying each property. Stops early once both are
// found.
AnomalyWitnesses search_anomaly_witnesses(uint64_t base_seed, int max_candidates);

// fixture document: edge-list blocks with a comment header naming the
// property each graph satisfies
std::string write_anomaly_fixture(const AnomalyWitnesses& w);
// returns the graphs in file order paired with the property named in the
// preceding comment ("greedy_trap" or "no_small_part")
std::vector<std::pair<std::string, Graph>> parse_anomaly_fixture(const std::string& text);

}  // namespace domatic
