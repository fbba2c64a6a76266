#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "domatic/graph.hpp"

namespace domatic {

inline constexpr int kGapUndefined = -1;

struct UndoToken {
    int vertex = -1;
    int index = -1;  // 0..2
};

/// Search state for the three-partition algorithms: the partition
/// P = (D1, D2, D3, R), the auxiliary triple A = (A1, A2, A3), and every
/// derived quantity (gaps, open neighbors/sets, balance, area, surplus).
/// Derived values are fully recomputed on every mutation, so a from-scratch
/// recalculation is always identical to the maintained values.
class PartitionState {
public:
    explicit PartitionState(const Graph& g);
    explicit PartitionState(Graph&&) = delete;  // state only observes a caller-owned graph

    const Graph& graph() const { return *g_; }
    int num_vertices() const { return n_; }

    const VertexSet& dominating(int i) const { return d_[i]; }
    const VertexSet& aux(int i) const { return a_[i]; }
    const VertexSet& remaining() const { return r_; }
    const VertexSet& dominated_by(int i) const { return dom_[i]; }  // N[D_i]

    bool in_remaining(int v) const { return r_.test(v); }
    bool in_aux(int v, int i) const { return a_[i].test(v); }
    int aux_count(int v) const {
        return int(a_[0].test(v)) + int(a_[1].test(v)) + int(a_[2].test(v));
    }

    // kGapUndefined when v is assigned or v is in A_i
    int gap(int v, int i) const { return gap_[v][i]; }
    // aggregates over defined gaps only; kGapUndefined when none is defined
    int vertex_maxgap(int v) const { return maxgap_[v]; }
    int vertex_mingap(int v) const { return mingap_[v]; }
    int vertex_sumgap(int v) const { return sumgap_[v]; }

    int open_neighbor_count(int v) const { return open_neighbors_[v]; }
    uint8_t open_sets_mask(int v) const { return open_sets_[v]; }
    int open_set_count(int v) const;
    int balance(int v) const { return balance_[v]; }

    int area() const { return area_; }
    int surplus() const { return surplus_; }
    bool all_dominating() const { return area_ == 3 * n_; }

    // over v in R with at least one defined gap; kGapUndefined when none
    int graph_maxgap() const { return graph_maxgap_; }
    int graph_mingap() const { return graph_mingap_; }

    bool is_critical(int v) const { return balance_[v] <= 0 && open_sets_[v] != 0; }

    UndoToken assign(int v, int i);
    void undo(const UndoToken& token);
    void add_aux(int v, int i);
    void remove_aux(int v, int i);

    void recalculate();

    struct BranchChoice {
        int vertex;
        int index;
    };
    // vertex achieving graph maxgap, ties by max sumgap then lowest id;
    // index is the smallest defined index achieving the vertex maxgap.
    // nullopt when no defined gap exists (dead end).
    std::optional<BranchChoice> select_branch_vertex() const;

    bool operator==(const PartitionState& o) const;

private:
    const Graph* g_ = nullptr;
    int n_ = 0;
    std::array<VertexSet, 3> d_;
    std::array<VertexSet, 3> a_;
    VertexSet r_;

    std::array<VertexSet, 3> dom_;
    std::vector<std::array<int, 3>> gap_;
    std::vector<int> maxgap_, mingap_, sumgap_;
    std::vector<int> open_neighbors_;
    std::vector<uint8_t> open_sets_;
    std::vector<int> balance_;
    int area_ = 0;
    int surplus_ = 0;
    int graph_maxgap_ = kGapUndefined;
    int graph_mingap_ = kGapUndefined;
};

}  // namespace domatic
