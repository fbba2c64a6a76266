#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domatic/vertex_set.hpp"

namespace domatic {

/// Immutable simple undirected graph over vertex ids 0..n-1.
/// Adjacency is symmetric, loop-free and duplicate-free by construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const VertexSet& closed_neighborhood_of(int v) const { return closed_nbhd_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    // 0 for the empty graph
    int min_degree() const;
    int max_degree() const;

    static Graph cycle(int k);
    static Graph path(int k);
    static Graph complete(int k);
    // circular ladder C_k x K_2, 3-regular, vertices a_i = i and b_i = k + i
    static Graph prism(int k);
    // repeated uniform edge insertion, rejecting edges that would push a
    // degree past max_deg; attempt budget 10*n*max_deg, reproducible from seed
    static Graph random_bounded(int n, int max_deg, uint64_t seed);

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> closed_nbhd_;
};

// DIMACS-like edge-list format: "c ..." comments, "p edge <n> <m>",
// "e <u> <v>" with 1-based ids. Throws std::invalid_argument naming the
// offending line on malformed input, out-of-range ids, self-loops and
// duplicate edges.
Graph parse_graph(std::string_view text);

// Emits the same format, edges sorted with u < v, lexicographic.
std::string write_graph(const Graph& g);

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
bool is_dominating_set(const Graph& g, const VertexSet& d);
bool verify_three_partition(const Graph& g, const VertexSet& d1, const VertexSet& d2,
                            const VertexSet& d3);

// maximal connected vertex sets, ordered by smallest member
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace domatic
