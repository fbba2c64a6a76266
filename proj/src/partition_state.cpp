#include "domatic/partition_state.hpp"

#include <bit>
#include <stdexcept>

namespace domatic {

PartitionState::PartitionState(const Graph& g)
    : g_(&g),
      n_(g.num_vertices()),
      d_{VertexSet(n_), VertexSet(n_), VertexSet(n_)},
      a_{VertexSet(n_), VertexSet(n_), VertexSet(n_)},
      r_(n_),
      dom_{VertexSet(n_), VertexSet(n_), VertexSet(n_)},
      gap_(n_),
      maxgap_(n_),
      mingap_(n_),
      sumgap_(n_),
      open_neighbors_(n_),
      open_sets_(n_),
      balance_(n_) {
    for (int v = 0; v < n_; ++v) r_.set(v);
    recalculate();
}

int PartitionState::open_set_count(int v) const { return std::popcount(open_sets_[v]); }

void PartitionState::recalculate() {
    for (int i = 0; i < 3; ++i) dom_[i] = closed_neighborhood(*g_, d_[i]);
    area_ = dom_[0].count() + dom_[1].count() + dom_[2].count();
    int assigned = n_ - r_.count();
    surplus_ = area_ - 3 * assigned;
    graph_maxgap_ = kGapUndefined;
    graph_mingap_ = kGapUndefined;
    for (int v = 0; v < n_; ++v) {
        const VertexSet& cn = g_->closed_neighborhood_of(v);
        int cn_size = g_->degree(v) + 1;
        open_neighbors_[v] = cn.intersection_count(r_);
        uint8_t mask = 0;
        for (int i = 0; i < 3; ++i)
            if (!dom_[i].test(v)) mask |= uint8_t(1u << i);
        open_sets_[v] = mask;
        balance_[v] = open_neighbors_[v] - std::popcount(mask);

        int mx = kGapUndefined, mn = kGapUndefined, sum = kGapUndefined;
        for (int i = 0; i < 3; ++i) {
            int g = kGapUndefined;
            if (r_.test(v) && !a_[i].test(v))
                g = cn_size - cn.intersection_count(dom_[i]);
            gap_[v][i] = g;
            if (g != kGapUndefined) {
                mx = (mx == kGapUndefined || g > mx) ? g : mx;
                mn = (mn == kGapUndefined || g < mn) ? g : mn;
                sum = (sum == kGapUndefined) ? g : sum + g;
            }
        }
        maxgap_[v] = mx;
        mingap_[v] = mn;
        sumgap_[v] = sum;
        if (r_.test(v) && mx != kGapUndefined) {
            if (graph_maxgap_ == kGapUndefined || mx > graph_maxgap_) graph_maxgap_ = mx;
            if (graph_mingap_ == kGapUndefined || mn < graph_mingap_) graph_mingap_ = mn;
        }
    }
}

UndoToken PartitionState::assign(int v, int i) {
    if (!r_.test(v)) throw std::logic_error("assign: vertex not in R");
    d_[i].set(v);
    r_.reset(v);
    recalculate();
    return UndoToken{v, i};
}

void PartitionState::undo(const UndoToken& token) {
    d_[token.index].reset(token.vertex);
    r_.set(token.vertex);
    recalculate();
}

void PartitionState::add_aux(int v, int i) {
    a_[i].set(v);
    recalculate();
}

void PartitionState::remove_aux(int v, int i) {
    a_[i].reset(v);
    recalculate();
}

std::optional<PartitionState::BranchChoice> PartitionState::select_branch_vertex() const {
    int best = -1, best_max = 0, best_sum = 0;
    r_.for_each([&](int v) {
        int mx = maxgap_[v];
        if (mx == kGapUndefined) return;
        int sg = sumgap_[v];
        if (best < 0 || mx > best_max || (mx == best_max && sg > best_sum)) {
            best = v;
            best_max = mx;
            best_sum = sg;
        }
    });
    if (best < 0) return std::nullopt;
    for (int i = 0; i < 3; ++i)
        if (gap_[best][i] == best_max) return BranchChoice{best, i};
    return std::nullopt;  // unreachable
}

bool PartitionState::operator==(const PartitionState& o) const {
    return d_ == o.d_ && a_ == o.a_ && r_ == o.r_ && dom_ == o.dom_ && gap_ == o.gap_ &&
           maxgap_ == o.maxgap_ && mingap_ == o.mingap_ && sumgap_ == o.sumgap_ &&
           open_neighbors_ == o.open_neighbors_ && open_sets_ == o.open_sets_ &&
           balance_ == o.balance_ && area_ == o.area_ && surplus_ == o.surplus_ &&
           graph_maxgap_ == o.graph_maxgap_ && graph_mingap_ == o.graph_mingap_;
}

}  // namespace domatic
