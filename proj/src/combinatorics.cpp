#include "domatic/combinatorics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "domatic/rng.hpp"
#include "domatic/solvers.hpp"

namespace domatic {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        num *= n - k + i;
        den *= i;
    }
    return num / den;
}

BigInt stirling2(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative argument");
    if (k == 0) return n == 0 ? 1 : 0;
    BigInt sum = 0;
    for (int i = 0; i < k; ++i) {
        BigInt term = binomial(k, i) * boost::multiprecision::pow(BigInt(k - i), unsigned(n));
        sum += (i % 2 == 0) ? term : -term;
    }
    BigInt kfact = 1;
    for (int i = 2; i <= k; ++i) kfact *= i;
    return sum / kfact;
}

BigInt branch_count_d(int delta) {
    if (delta < 3) throw std::invalid_argument("branch_count_d: delta must be >= 3");
    BigInt d = 0;
    for (int a = 0; a <= delta - 2; ++a) {
        BigInt inner = 0;
        for (int b = 1; b <= delta - a - 1; ++b) inner += binomial(delta - a, b);
        d += binomial(delta, a) * inner;
    }
    return d;
}

BigRational rand_base_r(int delta) {
    if (delta < 3) throw std::invalid_argument("rand_base_r: delta must be >= 3");
    return BigRational(branch_count_d(delta),
                       boost::multiprecision::pow(BigInt(3), unsigned(delta - 2)));
}

double deterministic_base(int delta) {
    return std::pow(static_cast<double>(branch_count_d(delta)), 1.0 / delta);
}

double randomized_base(int delta) {
    return std::sqrt(static_cast<double>(rand_base_r(delta)));
}

double round4(double x) { return std::floor(x * 1e4 + 0.5) / 1e4; }

std::pair<int, VertexSet> gamma_brute(const Graph& g) {
    int n = g.num_vertices();
    if (n > 24) throw std::invalid_argument("gamma_brute: n > 24");
    if (n == 0) return {0, VertexSet(0)};
    for (int k = 1; k <= n; ++k) {
        // combinations of size k in lexicographic order
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            VertexSet d(n);
            for (int v : idx) d.set(v);
            if (is_dominating_set(g, d)) return {k, d};
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw std::logic_error("gamma_brute: no dominating set");  // unreachable, V dominates
}

namespace {

// can V - D be split into two dominating sets of g?
bool extends_to_three_partition(const Graph& g, const VertexSet& d) {
    std::vector<int> rest;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!d.test(v)) rest.push_back(v);
    int m = int(rest.size());
    for (uint32_t code = 0; code < (1u << m); ++code) {
        VertexSet e1(g.num_vertices()), e2(g.num_vertices());
        for (int t = 0; t < m; ++t)
            ((code >> t) & 1u ? e1 : e2).set(rest[t]);
        if (is_dominating_set(g, e1) && is_dominating_set(g, e2)) return true;
    }
    return false;
}

}  // namespace

AnomalyResult check_partition_anomalies(const Graph& g) {
    int n = g.num_vertices();
    if (n > 12) throw std::invalid_argument("check_partition_anomalies: n > 12");
    AnomalyResult res;
    if (n == 0) return res;
    if (domatic_number_dp(g) < 3) return res;

    auto [gamma, first_witness] = gamma_brute(g);
    (void)first_witness;

    // greedy_trap: some minimum dominating set has no extension to a 3-partition
    {
        std::vector<int> idx(gamma);
        for (int i = 0; i < gamma; ++i) idx[i] = i;
        for (;;) {
            VertexSet d(n);
            for (int v : idx) d.set(v);
            if (is_dominating_set(g, d) && !extends_to_three_partition(g, d)) {
                res.greedy_trap = true;
                break;
            }
            int i = gamma - 1;
            while (i >= 0 && idx[i] == n - gamma + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < gamma; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    // no_small_part: every 3-partition into dominating sets has all parts > gamma
    res.no_small_part = true;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (long long code = 0; code < total && res.no_small_part; ++code) {
        std::array<VertexSet, 3> parts{VertexSet(n), VertexSet(n), VertexSet(n)};
        long long rest = code;
        for (int v = 0; v < n; ++v) {
            parts[rest % 3].set(v);
            rest /= 3;
        }
        if (!verify_three_partition(g, parts[0], parts[1], parts[2])) continue;
        for (int i = 0; i < 3; ++i)
            if (parts[i].count() <= gamma) res.no_small_part = false;
    }
    return res;
}

namespace {

Graph random_candidate(uint64_t seed) {
    SplitMix64 rng(seed);
    int n = 7 + int(rng.below(3));
    // edge probability sweep keeps a mix of sparse and dense candidates
    int densities[] = {35, 45, 55};
    int pct = densities[rng.below(3)];
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (int(rng.below(100)) < pct) edges.emplace_back(u, v);
    return Graph(n, edges);
}

bool usable_candidate(const Graph& g) {
    if (g.min_degree() < 2) return false;
    return connected_components(g).size() == 1;
}

}  // namespace

AnomalyWitnesses search_anomaly_witnesses(uint64_t base_seed, int max_candidates) {
    AnomalyWitnesses out;
    for (int t = 0; t < max_candidates; ++t) {
        uint64_t seed = mix_seed(base_seed, uint64_t(t));
        Graph g = random_candidate(seed);
        ++out.candidates_tried;
        if (!usable_candidate(g)) continue;
        AnomalyResult res = check_partition_anomalies(g);
        if (res.greedy_trap && !out.witness_a) out.witness_a = AnomalyWitness{g, seed};
        if (res.no_small_part && !out.witness_b) out.witness_b = AnomalyWitness{g, seed};
        if (out.witness_a && out.witness_b) break;
    }
    return out;
}

std::string write_anomaly_fixture(const AnomalyWitnesses& w) {
    std::ostringstream os;
    auto emit = [&](const char* name, const AnomalyWitness& wit) {
        os << "c " << name << " witness, candidate seed " << wit.seed << '\n'
           << write_graph(wit.graph);
    };
    if (w.witness_a) emit("greedy_trap", *w.witness_a);
    if (w.witness_b) emit("no_small_part", *w.witness_b);
    return os.str();
}

std::vector<std::pair<std::string, Graph>> parse_anomaly_fixture(const std::string& text) {
    std::vector<std::pair<std::string, Graph>> out;
    std::istringstream in(text);
    std::string line, block, prop;
    auto flush = [&]() {
        if (!block.empty()) {
            out.emplace_back(prop, parse_graph(block));
            block.clear();
        }
    };
    while (std::getline(in, line)) {
        if (line.rfind("c ", 0) == 0) {
            flush();
            std::istringstream ls(line);
            std::string c;
            ls >> c >> prop;
        } else if (!line.empty()) {
            block += line;
            block += '\n';
        }
    }
    flush();
    return out;
}

}  // namespace domatic
