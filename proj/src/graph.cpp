#include "domatic/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "domatic/rng.hpp"

namespace domatic {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    m_ = int(edges.size());
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("duplicate edge");
    }
    closed_nbhd_.reserve(n);
    for (int v = 0; v < n; ++v) {
        VertexSet s(n);
        s.set(v);
        for (int u : adj_[v]) s.set(u);
        closed_nbhd_.push_back(std::move(s));
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    return closed_nbhd_[u].test(v);
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

Graph Graph::cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph(k, e);
}

Graph Graph::path(int k) {
    if (k < 1) throw std::invalid_argument("path needs k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph(k, e);
}

Graph Graph::complete(int k) {
    if (k < 1) throw std::invalid_argument("complete needs k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return Graph(k, e);
}

Graph Graph::prism(int k) {
    if (k < 3) throw std::invalid_argument("prism needs k >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) {
        e.emplace_back(i, (i + 1) % k);
        e.emplace_back(k + i, k + (i + 1) % k);
        e.emplace_back(i, k + i);
    }
    return Graph(2 * k, e);
}

Graph Graph::random_bounded(int n, int max_deg, uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (max_deg < 0 || (n > 0 && max_deg > n - 1))
        throw std::invalid_argument("max_deg must be in [0, n-1]");
    SplitMix64 rng(seed);
    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> edges;
    std::vector<VertexSet> present(n, VertexSet(n));
    long long budget = 10LL * n * max_deg;
    for (long long attempt = 0; attempt < budget; ++attempt) {
        if (n < 2) break;
        int u = int(rng.below(uint64_t(n)));
        int v = int(rng.below(uint64_t(n)));
        if (u == v) continue;
        if (present[u].test(v)) continue;
        if (deg[u] >= max_deg || deg[v] >= max_deg) continue;
        present[u].set(v);
        present[v].set(u);
        ++deg[u];
        ++deg[v];
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    std::ostringstream os;
    os << "parse error at line " << line_no << ": " << what;
    throw std::invalid_argument(os.str());
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = -1;
    long long declared_m = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<VertexSet> present;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) parse_fail(line_no, "duplicate problem line");
            std::string kind;
            if (!(ls >> kind >> n >> declared_m) || kind != "edge" || n < 0 || declared_m < 0)
                parse_fail(line_no, "expected 'p edge <n> <m>'");
            present.assign(n, VertexSet(n));
        } else if (tag == "e") {
            if (n < 0) parse_fail(line_no, "edge before problem line");
            int u, v;
            if (!(ls >> u >> v)) parse_fail(line_no, "expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n) parse_fail(line_no, "vertex id out of range");
            if (u == v) parse_fail(line_no, "self-loop");
            --u;
            --v;
            if (present[u].test(v)) parse_fail(line_no, "duplicate edge");
            present[u].set(v);
            present[v].set(u);
            edges.emplace_back(u, v);
        } else {
            parse_fail(line_no, "unknown line type '" + tag + "'");
        }
    }
    if (n < 0) throw std::invalid_argument("parse error: missing problem line");
    return Graph(n, edges);
}

std::string write_graph(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int u : g.neighbors(v))
            if (v < u) edges.emplace_back(v, u);
    std::sort(edges.begin(), edges.end());
    std::ostringstream os;
    os << "p edge " << g.num_vertices() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    return os.str();
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out(g.num_vertices());
    s.for_each([&](int v) { out |= g.closed_neighborhood_of(v); });
    return out;
}

bool is_dominating_set(const Graph& g, const VertexSet& d) {
    return closed_neighborhood(g, d).count() == g.num_vertices();
}

bool verify_three_partition(const Graph& g, const VertexSet& d1, const VertexSet& d2,
                            const VertexSet& d3) {
    if (d1.intersects(d2) || d1.intersects(d3) || d2.intersects(d3)) return false;
    if ((d1 | d2 | d3).count() != g.num_vertices()) return false;
    return is_dominating_set(g, d1) && is_dominating_set(g, d2) && is_dominating_set(g, d3);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.num_vertices();
    std::vector<VertexSet> comps;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp(n);
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.set(v);
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace domatic
