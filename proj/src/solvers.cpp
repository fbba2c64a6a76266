#include "domatic/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "domatic/combinatorics.hpp"
#include "domatic/rng.hpp"

namespace domatic {

namespace {

struct TimeoutSignal {};

void check_deadline(const SolveOptions& opts) {
    if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline) throw TimeoutSignal{};
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

struct Component {
    Graph sub;
    std::vector<int> to_orig;  // sub vertex id -> original id
};

std::vector<Component> split_components(const Graph& g) {
    std::vector<Component> out;
    for (const VertexSet& comp : connected_components(g)) {
        Component c;
        c.to_orig = comp.to_vector();
        std::vector<int> to_sub(g.num_vertices(), -1);
        for (size_t i = 0; i < c.to_orig.size(); ++i) to_sub[c.to_orig[i]] = int(i);
        std::vector<std::pair<int, int>> edges;
        for (int v : c.to_orig)
            for (int u : g.neighbors(v))
                if (v < u) edges.emplace_back(to_sub[v], to_sub[u]);
        c.sub = Graph(int(c.to_orig.size()), edges);
        out.push_back(std::move(c));
    }
    return out;
}

std::array<VertexSet, 3> empty_partition(int n) {
    return {VertexSet(n), VertexSet(n), VertexSet(n)};
}

void merge_back(std::array<VertexSet, 3>& whole, const std::array<VertexSet, 3>& part,
                const std::vector<int>& to_orig) {
    for (int i = 0; i < 3; ++i) part[i].for_each([&](int v) { whole[i].set(to_orig[v]); });
}

void certify_found(const Graph& g, SolveOutcome& out) {
    if (!out.partition ||
        !verify_three_partition(g, (*out.partition)[0], (*out.partition)[1], (*out.partition)[2]))
        throw std::logic_error("solver produced an invalid partition");
}

SolveOutcome trivial_found(int n) {
    SolveOutcome out;
    out.verdict = Verdict::found;
    out.partition = empty_partition(n);
    out.stats.nodes = 1;
    return out;
}

SolveOutcome trivial_not_found() {
    SolveOutcome out;
    out.verdict = Verdict::not_found;
    out.stats.nodes = 1;
    return out;
}

// ---------------------------------------------------------------------------
// gap-guided branching search on one connected component

class BranchSearch {
public:
    BranchSearch(const Graph& g, SearchStats& stats, const SolveOptions& opts)
        : state_(g), stats_(stats), opts_(opts), result_(empty_partition(g.num_vertices())) {}

    bool run() { return dominate(); }
    const std::array<VertexSet, 3>& result() const { return result_; }

private:
    bool dominate() {
        ++stats_.nodes;
        check_deadline(opts_);
        state_.recalculate();
        if (opts_.record_traces) {
            int mg = state_.graph_maxgap();
            stats_.maxgap_trace.push_back(mg == kGapUndefined ? 0 : mg);
            stats_.surplus_trace.push_back(state_.surplus());
        }
        if (state_.all_dominating()) {
            for (int i = 0; i < 3; ++i) result_[i] = state_.dominating(i);
            result_[0] |= state_.remaining();
            return true;
        }
        int handled = handle_critical();
        if (handled != kNotHandled) return handled == kHandledFound;

        auto choice = state_.select_branch_vertex();
        if (!choice) return false;  // every gap undefined: dead end
        auto [v, i] = *choice;
        UndoToken tok = state_.assign(v, i);
        ++stats_.assigns;
        if (dominate()) return true;
        state_.undo(tok);
        state_.add_aux(v, i);
        bool ok = dominate();
        state_.remove_aux(v, i);
        return ok;
    }

    static constexpr int kNotHandled = 0;
    static constexpr int kHandledFailed = 1;
    static constexpr int kHandledFound = 2;

    int handle_critical() {
        CriticalScan scan = scan_critical(state_);
        switch (scan.kind) {
            case CriticalCase::none:
                return kNotHandled;
            case CriticalCase::dead_end:
                return kHandledFailed;
            case CriticalCase::forced_index: {
                UndoToken tok = state_.assign(scan.vertex, scan.forced_index);
                ++stats_.assigns;
                if (dominate()) return kHandledFound;
                state_.undo(tok);
                return kHandledFailed;
            }
            case CriticalCase::critical_branch: {
                for (int i : scan.branch_indices) {
                    UndoToken tok = state_.assign(scan.pivot, i);
                    ++stats_.assigns;
                    if (dominate()) return kHandledFound;
                    state_.undo(tok);
                }
                return kHandledFailed;
            }
        }
        return kNotHandled;
    }

    PartitionState state_;
    SearchStats& stats_;
    const SolveOptions& opts_;
    std::array<VertexSet, 3> result_;
};

// ---------------------------------------------------------------------------
// bounded-degree deterministic search on one connected component

class BoundedDetSearch {
public:
    BoundedDetSearch(const Graph& g, SearchStats& stats, const SolveOptions& opts)
        : g_(g), state_(g), stats_(stats), opts_(opts),
          result_(empty_partition(g.num_vertices())) {}

    bool run() {
        // seed the lowest-id vertex into D1
        state_.assign(0, 0);
        ++stats_.assigns;
        return search();
    }
    const std::array<VertexSet, 3>& result() const { return result_; }

private:
    bool search() {
        ++stats_.nodes;
        check_deadline(opts_);
        if (state_.all_dominating()) {
            for (int i = 0; i < 3; ++i) result_[i] = state_.dominating(i);
            result_[0] |= state_.remaining();
            return true;
        }
        int v = pick_vertex();
        if (v < 0) return false;
        if (state_.balance(v) < 0) return false;

        std::vector<int> nbhd =
            (g_.closed_neighborhood_of(v) & state_.remaining()).to_vector();
        uint8_t need = state_.open_sets_mask(v);
        int m = int(nbhd.size());
        std::vector<int> label(m, 0);
        // enumerate all 3^m assignments of N[v] & R that leave v dominated by
        // all three sets
        for (long long code = 0, total = ipow3(m); code < total; ++code) {
            long long rest = code;
            uint8_t covered = 0;
            for (int t = 0; t < m; ++t) {
                label[t] = int(rest % 3);
                rest /= 3;
                covered |= uint8_t(1u << label[t]);
            }
            if ((covered & need) != need) continue;
            std::vector<UndoToken> tokens;
            tokens.reserve(m);
            for (int t = 0; t < m; ++t) {
                tokens.push_back(state_.assign(nbhd[t], label[t]));
                ++stats_.assigns;
            }
            if (search()) return true;
            for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) state_.undo(*it);
        }
        return false;
    }

    static long long ipow3(int m) {
        long long p = 1;
        while (m-- > 0) p *= 3;
        return p;
    }

    // lowest id with 0 < |openSets| < 3; falls back to any vertex with
    // open sets when the assigned region is separated from the rest by a
    // fully dominated frontier
    int pick_vertex() const {
        int fallback = -1;
        for (int v = 0; v < g_.num_vertices(); ++v) {
            int k = state_.open_set_count(v);
            if (k == 1 || k == 2) return v;
            if (k == 3 && fallback < 0) fallback = v;
        }
        return fallback;
    }

    const Graph& g_;
    PartitionState state_;
    SearchStats& stats_;
    const SolveOptions& opts_;
    std::array<VertexSet, 3> result_;
};

// ---------------------------------------------------------------------------
// one randomized run on a connected component

bool random_run(const Graph& g, SplitMix64& rng, SearchStats& stats,
                const SolveOptions& opts, std::array<VertexSet, 3>& out) {
    PartitionState state(g);
    state.assign(0, 0);
    ++stats.assigns;
    for (;;) {
        ++stats.nodes;
        check_deadline(opts);
        if (state.all_dominating()) {
            for (int i = 0; i < 3; ++i) out[i] = state.dominating(i);
            out[0] |= state.remaining();
            return true;
        }
        int v = -1;
        for (int u = 0; u < g.num_vertices(); ++u) {
            int k = state.open_set_count(u);
            if (k == 1 || k == 2) {
                v = u;
                break;
            }
        }
        if (v < 0) return false;  // stalled
        if (state.balance(v) < 0) return false;
        std::vector<int> nbhd = (g.closed_neighborhood_of(v) & state.remaining()).to_vector();
        uint8_t open = state.open_sets_mask(v);
        if (std::popcount(open) == 1) {
            if (nbhd.empty()) return false;
            int u = nbhd[rng.below(nbhd.size())];
            state.assign(u, std::countr_zero(open));
            ++stats.assigns;
        } else {
            if (nbhd.size() < 2) return false;
            // uniform unordered pair, then a uniform assignment onto the
            // two open sets
            uint64_t pairs = uint64_t(nbhd.size()) * (nbhd.size() - 1) / 2;
            uint64_t pick = rng.below(pairs);
            size_t a = 0;
            while (pick >= nbhd.size() - 1 - a) {
                pick -= nbhd.size() - 1 - a;
                ++a;
            }
            size_t b = a + 1 + pick;
            int i = std::countr_zero(open);
            int j = std::countr_zero(uint8_t(open & (open - 1)));
            if (rng.below(2) == 1) std::swap(i, j);
            state.assign(nbhd[a], i);
            state.assign(nbhd[b], j);
            stats.assigns += 2;
        }
    }
}

// found iff every component of this max-deg<=2 graph is a cycle of length
// divisible by three; witness labels the cycle 1,2,3 cyclically
bool max_deg2_component(const Graph& g, const std::vector<int>& verts,
                        std::array<VertexSet, 3>& out) {
    for (int v : verts)
        if (g.degree(v) != 2) return false;
    if (verts.size() % 3 != 0) return false;
    int start = verts.front();
    int prev = -1, cur = start, label = 0;
    do {
        out[label].set(cur);
        label = (label + 1) % 3;
        const auto& nb = g.neighbors(cur);
        int next = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    } while (cur != start);
    return true;
}

SolveOutcome timeout_outcome(SearchStats stats) {
    SolveOutcome out;
    out.verdict = Verdict::timeout;
    out.stats = std::move(stats);
    return out;
}

}  // namespace

Precheck precheck(const Graph& g) {
    if (g.num_vertices() >= 1 && g.min_degree() <= 1) return Precheck::definitely_no;
    return Precheck::unknown;
}

CriticalScan scan_critical(const PartitionState& st) {
    CriticalScan scan;
    for (int v = 0; v < st.num_vertices(); ++v) {
        if (st.balance(v) < 0) {
            scan.kind = CriticalCase::dead_end;
            scan.vertex = v;
            return scan;
        }
        if (st.in_remaining(v) && st.aux_count(v) == 2) {
            scan.kind = CriticalCase::forced_index;
            scan.vertex = v;
            for (int i = 0; i < 3; ++i)
                if (!st.in_aux(v, i)) scan.forced_index = i;
            return scan;
        }
        if (st.balance(v) == 0 && st.open_sets_mask(v) != 0) {
            scan.kind = CriticalCase::critical_branch;
            scan.vertex = v;
            scan.pivot = (st.graph().closed_neighborhood_of(v) & st.remaining()).first();
            for (int i = 0; i < 3; ++i)
                if (!st.in_aux(scan.pivot, i) && (st.open_sets_mask(v) & (1u << i)))
                    scan.branch_indices.push_back(i);
            return scan;
        }
    }
    return scan;
}

SolveOutcome solve_brute_force(const Graph& g, const SolveOptions& opts) {
    int n = g.num_vertices();
    if (n > 16) throw std::invalid_argument("solve_brute_force: n > 16");
    Timer timer;
    if (n == 0) {
        auto out = trivial_found(0);
        out.stats.elapsed_ms = timer.elapsed_ms();
        return out;
    }

    std::vector<uint32_t> cn(n, 0);
    for (int v = 0; v < n; ++v) {
        cn[v] = 1u << v;
        for (int u : g.neighbors(v)) cn[v] |= 1u << u;
    }
    // vertices whose closed neighborhood is fully assigned once vertex v is
    std::vector<std::vector<int>> completes_at(n);
    for (int u = 0; u < n; ++u) {
        int last = u;
        for (int w : g.neighbors(u)) last = std::max(last, w);
        completes_at[last].push_back(u);
    }

    SolveOutcome out;
    std::vector<int> label(n, -1);
    uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::array<uint32_t, 3> dom{0, 0, 0};

    auto rec = [&](auto&& self, int v) -> bool {
        ++out.stats.nodes;
        check_deadline(opts);
        if (v == n) return dom[0] == full && dom[1] == full && dom[2] == full;
        for (int lab = 0; lab < 3; ++lab) {
            std::array<uint32_t, 3> saved = dom;
            dom[lab] |= cn[v];
            label[v] = lab;
            ++out.stats.assigns;
            bool viable = true;
            for (int u : completes_at[v])
                if (((dom[0] & dom[1] & dom[2]) >> u & 1u) == 0) {
                    viable = false;
                    break;
                }
            if (viable && self(self, v + 1)) return true;
            dom = saved;
        }
        label[v] = -1;
        return false;
    };

    try {
        if (rec(rec, 0)) {
            out.verdict = Verdict::found;
            auto parts = empty_partition(n);
            for (int v = 0; v < n; ++v) parts[label[v]].set(v);
            out.partition = parts;
            certify_found(g, out);
        }
    } catch (const TimeoutSignal&) {
        return timeout_outcome(std::move(out.stats));
    }
    out.stats.elapsed_ms = timer.elapsed_ms();
    return out;
}

int domatic_number_dp(const Graph& g, const SolveOptions& opts) {
    int n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("domatic_number_dp: empty graph");
    if (n > 24) throw std::invalid_argument("domatic_number_dp: n > 24");

    uint32_t full = (1u << n) - 1;
    std::vector<uint32_t> cn(n, 0);
    for (int v = 0; v < n; ++v) {
        cn[v] = 1u << v;
        for (int u : g.neighbors(v)) cn[v] |= 1u << u;
    }
    // nbhd[S] = N[S], built over masks by peeling the low bit
    std::vector<uint32_t> nbhd(size_t(full) + 1, 0);
    for (uint32_t s = 1; s <= full; ++s) {
        uint32_t low = s & -s;
        nbhd[s] = nbhd[s ^ low] | cn[std::countr_zero(low)];
    }
    // f[S] = max parts in an exact partition of S into dominating sets of G,
    // -1 when impossible
    std::vector<int8_t> f(size_t(full) + 1, -1);
    f[0] = 0;
    for (uint32_t s = 1; s <= full; ++s) {
        if ((s & 0xfff) == 0) check_deadline(opts);
        uint32_t low = s & -s;
        int best = -1;
        // every part of an exact partition of S holds the lowest vertex of
        // some suffix; restrict to subsets containing low
        for (uint32_t t = s;; t = (t - 1) & s) {
            if ((t & low) && nbhd[t] == full && f[s ^ t] >= 0)
                best = std::max(best, 1 + int(f[s ^ t]));
            if (t == 0) break;
        }
        f[s] = int8_t(best);
    }
    return f[full];
}

SolveOutcome solve_branching(const Graph& g, const SolveOptions& opts) {
    Timer timer;
    int n = g.num_vertices();
    auto finish = [&](SolveOutcome out) {
        out.stats.elapsed_ms = timer.elapsed_ms();
        return out;
    };
    if (n == 0) return finish(trivial_found(0));
    if (precheck(g) == Precheck::definitely_no) {
        auto out = trivial_not_found();
        if (opts.record_traces) {
            out.stats.maxgap_trace.push_back(0);
            out.stats.surplus_trace.push_back(0);
        }
        return finish(out);
    }

    SolveOutcome out;
    auto parts = empty_partition(n);
    try {
        for (const Component& comp : split_components(g)) {
            BranchSearch search(comp.sub, out.stats, opts);
            if (!search.run()) {
                out.verdict = Verdict::not_found;
                return finish(out);
            }
            merge_back(parts, search.result(), comp.to_orig);
        }
    } catch (const TimeoutSignal&) {
        return finish(timeout_outcome(std::move(out.stats)));
    }
    out.verdict = Verdict::found;
    out.partition = parts;
    certify_found(g, out);
    return finish(out);
}

SolveOutcome solve_max_deg2(const Graph& g, const SolveOptions&) {
    if (g.max_degree() > 2) throw std::invalid_argument("solve_max_deg2: max-deg > 2");
    Timer timer;
    int n = g.num_vertices();
    if (n == 0) {
        auto out = trivial_found(0);
        out.stats.elapsed_ms = timer.elapsed_ms();
        return out;
    }
    SolveOutcome out;
    out.stats.nodes = 1;
    auto parts = empty_partition(n);
    for (const VertexSet& comp : connected_components(g)) {
        if (!max_deg2_component(g, comp.to_vector(), parts)) {
            out.verdict = Verdict::not_found;
            out.stats.elapsed_ms = timer.elapsed_ms();
            return out;
        }
    }
    out.verdict = Verdict::found;
    out.partition = parts;
    out.stats.assigns = uint64_t(n);
    certify_found(g, out);
    out.stats.elapsed_ms = timer.elapsed_ms();
    return out;
}

SolveOutcome solve_bounded_det(const Graph& g, const SolveOptions& opts) {
    if (g.max_degree() <= 2) return solve_max_deg2(g, opts);
    Timer timer;
    int n = g.num_vertices();
    auto finish = [&](SolveOutcome out) {
        out.stats.elapsed_ms = timer.elapsed_ms();
        return out;
    };
    if (precheck(g) == Precheck::definitely_no) return finish(trivial_not_found());

    SolveOutcome out;
    auto parts = empty_partition(n);
    try {
        for (const Component& comp : split_components(g)) {
            if (comp.sub.max_degree() <= 2) {
                std::vector<int> ids(comp.sub.num_vertices());
                for (int i = 0; i < comp.sub.num_vertices(); ++i) ids[i] = i;
                auto sub_parts = empty_partition(comp.sub.num_vertices());
                ++out.stats.nodes;
                if (!max_deg2_component(comp.sub, ids, sub_parts)) {
                    out.verdict = Verdict::not_found;
                    return finish(out);
                }
                merge_back(parts, sub_parts, comp.to_orig);
                continue;
            }
            BoundedDetSearch search(comp.sub, out.stats, opts);
            if (!search.run()) {
                out.verdict = Verdict::not_found;
                return finish(out);
            }
            merge_back(parts, search.result(), comp.to_orig);
        }
    } catch (const TimeoutSignal&) {
        return finish(timeout_outcome(std::move(out.stats)));
    }
    out.verdict = Verdict::found;
    out.partition = parts;
    certify_found(g, out);
    return finish(out);
}

SolveOutcome solve_bounded_rand(const Graph& g, double c, uint64_t seed,
                                const SolveOptions& opts) {
    if (c <= 0) throw std::invalid_argument("solve_bounded_rand: c must be positive");
    int n = g.num_vertices();
    Timer timer;
    auto finish = [&](SolveOutcome out) {
        out.stats.elapsed_ms = timer.elapsed_ms();
        return out;
    };
    if (n == 0) return finish(trivial_found(0));
    int delta = g.max_degree();
    if (delta < 3) throw std::invalid_argument("solve_bounded_rand: max-deg must be >= 3");
    if (precheck(g) == Precheck::definitely_no) return finish(trivial_not_found());

    double r = static_cast<double>(rand_base_r(delta));
    double n_runs_real = std::ceil(c * std::pow(r, n / 2.0));
    uint64_t n_runs = n_runs_real > 1e18 ? uint64_t(1) << 62 : uint64_t(n_runs_real);
    SolveOutcome out;
    if (n_runs > opts.run_budget) {
        out.stats.budget_capped = true;
        n_runs = opts.run_budget;
    }

    auto parts = empty_partition(n);
    try {
        auto comps = split_components(g);
        for (size_t ci = 0; ci < comps.size(); ++ci) {
            const Component& comp = comps[ci];
            if (comp.sub.max_degree() <= 2) {
                std::vector<int> ids(comp.sub.num_vertices());
                for (int i = 0; i < comp.sub.num_vertices(); ++i) ids[i] = i;
                auto sub_parts = empty_partition(comp.sub.num_vertices());
                ++out.stats.nodes;
                if (!max_deg2_component(comp.sub, ids, sub_parts)) {
                    out.verdict = Verdict::not_found;
                    return finish(out);
                }
                merge_back(parts, sub_parts, comp.to_orig);
                continue;
            }
            bool success = false;
            uint64_t comp_seed = mix_seed(seed, ci);
            auto sub_parts = empty_partition(comp.sub.num_vertices());
            for (uint64_t run = 0; run < n_runs; ++run) {
                SplitMix64 rng(mix_seed(comp_seed, run));
                ++out.stats.runs;
                if (random_run(comp.sub, rng, out.stats, opts, sub_parts)) {
                    success = true;
                    break;
                }
            }
            if (!success) {
                out.verdict = Verdict::not_found;
                return finish(out);
            }
            merge_back(parts, sub_parts, comp.to_orig);
        }
    } catch (const TimeoutSignal&) {
        return finish(timeout_outcome(std::move(out.stats)));
    }
    out.verdict = Verdict::found;
    out.partition = parts;
    certify_found(g, out);
    return finish(out);
}

}  // namespace domatic
