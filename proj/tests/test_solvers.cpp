#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "domatic/rng.hpp"
#include "domatic/solvers.hpp"

using namespace domatic;

namespace {

VertexSet make_set(int n, std::initializer_list<int> ids) {
    VertexSet s(n);
    for (int v : ids) s.set(v);
    return s;
}

Graph petersen() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < a.num_vertices(); ++v)
        for (int u : a.neighbors(v))
            if (v < u) edges.emplace_back(v, u);
    int off = a.num_vertices();
    for (int v = 0; v < b.num_vertices(); ++v)
        for (int u : b.neighbors(v))
            if (v < u) edges.emplace_back(off + v, off + u);
    return Graph(a.num_vertices() + b.num_vertices(), edges);
}

Graph k4_minus_edge() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

// C5 plus one chord: max degree 3, min degree 2. Any partition of five
// vertices into three parts has a singleton, and no vertex here has
// degree 4, so no three-way dominating partition exists.
Graph c5_chord() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}); }

bool verified_found(const Graph& g, const SolveOutcome& out) {
    if (out.verdict != Verdict::found || !out.partition) return false;
    return verify_three_partition(g, (*out.partition)[0], (*out.partition)[1],
                                  (*out.partition)[2]);
}

}  // namespace

TEST_CASE("precheck") {
    CHECK(precheck(Graph(4, {{0, 1}, {0, 2}, {0, 3}})) == Precheck::definitely_no);  // star
    CHECK(precheck(Graph::cycle(4)) == Precheck::unknown);
    CHECK(precheck(Graph(1, {})) == Precheck::definitely_no);
    CHECK(precheck(Graph(0, {})) == Precheck::unknown);
}

TEST_CASE("brute force on small cycles") {
    Graph c3 = Graph::cycle(3);
    auto out = solve_brute_force(c3);
    REQUIRE(out.verdict == Verdict::found);
    CHECK((*out.partition)[0] == make_set(3, {0}));
    CHECK((*out.partition)[1] == make_set(3, {1}));
    CHECK((*out.partition)[2] == make_set(3, {2}));

    CHECK(solve_brute_force(Graph::cycle(4)).verdict == Verdict::not_found);

    auto c6 = solve_brute_force(Graph::cycle(6));
    REQUIRE(c6.verdict == Verdict::found);
    CHECK((*c6.partition)[0] == make_set(6, {0, 3}));
    CHECK((*c6.partition)[1] == make_set(6, {1, 4}));
    CHECK((*c6.partition)[2] == make_set(6, {2, 5}));
}

TEST_CASE("brute force refuses large inputs") {
    CHECK_THROWS_AS(solve_brute_force(Graph::cycle(17)), std::invalid_argument);
}

TEST_CASE("domatic number DP") {
    CHECK(domatic_number_dp(Graph::complete(3)) == 3);
    CHECK(domatic_number_dp(Graph::cycle(4)) == 2);
    CHECK(domatic_number_dp(Graph(4, {{0, 1}, {0, 2}, {0, 3}})) == 2);  // star K_{1,3}
    CHECK(domatic_number_dp(Graph::complete(4)) == 4);
    CHECK(domatic_number_dp(k4_minus_edge()) == 3);  // the two degree-3 vertices dominate alone
    CHECK(domatic_number_dp(c5_chord()) == 2);
    CHECK_THROWS_AS(domatic_number_dp(Graph(0, {})), std::invalid_argument);
    CHECK_THROWS_AS(domatic_number_dp(Graph::cycle(25)), std::invalid_argument);
}

TEST_CASE("branching solver on cycles and Petersen") {
    auto c9 = solve_branching(Graph::cycle(9));
    CHECK(verified_found(Graph::cycle(9), c9));
    CHECK(solve_branching(Graph::cycle(5)).verdict == Verdict::not_found);

    Graph p = petersen();
    bool dp_says = domatic_number_dp(p) >= 3;
    auto out = solve_branching(p);
    CHECK((out.verdict == Verdict::found) == dp_says);
    if (out.verdict == Verdict::found) CHECK(verified_found(p, out));
}

TEST_CASE("branching stats traces match node count") {
    auto out = solve_branching(Graph::cycle(9));
    CHECK(out.stats.nodes >= 1);
    CHECK(out.stats.maxgap_trace.size() == out.stats.nodes);
    CHECK(out.stats.surplus_trace.size() == out.stats.nodes);
}

TEST_CASE("branching on disconnected graphs merges per-component answers") {
    Graph yes = disjoint_union(Graph::cycle(3), Graph::cycle(6));
    CHECK(verified_found(yes, solve_branching(yes)));
    Graph no = disjoint_union(Graph::cycle(3), Graph::cycle(4));
    CHECK(solve_branching(no).verdict == Verdict::not_found);
}

TEST_CASE("empty graph is vacuously solvable") {
    Graph g(0, {});
    CHECK(solve_branching(g).verdict == Verdict::found);
    CHECK(solve_brute_force(g).verdict == Verdict::found);
    CHECK(solve_max_deg2(g).verdict == Verdict::found);
}

TEST_CASE("critical scan cases") {
    // dead end: negative balance
    Graph c6 = Graph::cycle(6);
    PartitionState st(c6);
    st.assign(5, 0);
    st.assign(1, 0);  // both closed neighbors of 0 into the same set
    auto scan = scan_critical(st);
    CHECK(scan.kind == CriticalCase::dead_end);

    // forced index: member of exactly two aux sets
    Graph k4 = Graph::complete(4);
    PartitionState st3(k4);
    st3.add_aux(2, 0);
    st3.add_aux(2, 1);
    auto scan3 = scan_critical(st3);
    CHECK(scan3.kind == CriticalCase::forced_index);
    CHECK(scan3.vertex == 2);
    CHECK(scan3.forced_index == 2);

    // critical branch: fresh C6, everything critical, pivot is vertex 0 itself
    PartitionState st4(c6);
    auto scan4 = scan_critical(st4);
    CHECK(scan4.kind == CriticalCase::critical_branch);
    CHECK(scan4.vertex == 0);
    CHECK(scan4.pivot == 0);
    CHECK(scan4.branch_indices == std::vector<int>{0, 1, 2});
}

TEST_CASE("max-deg-2 solver") {
    auto c6 = solve_max_deg2(Graph::cycle(6));
    REQUIRE(c6.verdict == Verdict::found);
    CHECK((*c6.partition)[0] == make_set(6, {0, 3}));
    CHECK((*c6.partition)[1] == make_set(6, {1, 4}));
    CHECK((*c6.partition)[2] == make_set(6, {2, 5}));

    CHECK(solve_max_deg2(Graph::cycle(5)).verdict == Verdict::not_found);
    CHECK(solve_max_deg2(Graph::path(4)).verdict == Verdict::not_found);
    CHECK_THROWS_AS(solve_max_deg2(Graph::complete(4)), std::invalid_argument);
}

TEST_CASE("bounded deterministic solver") {
    Graph prism = Graph::prism(3);
    CHECK(verified_found(prism, solve_bounded_det(prism)));
    CHECK(verified_found(Graph::complete(4), solve_bounded_det(Graph::complete(4))));
    Graph k4e = k4_minus_edge();
    CHECK(verified_found(k4e, solve_bounded_det(k4e)));
    CHECK(solve_bounded_det(Graph(4, {{0, 1}, {0, 2}, {0, 3}})).verdict == Verdict::not_found);
    CHECK(solve_bounded_det(c5_chord()).verdict == Verdict::not_found);
}

TEST_CASE("bounded randomized solver finds the prism partition") {
    Graph prism = Graph::prism(3);
    auto out = solve_bounded_rand(prism, 3.0, 12345);
    CHECK(verified_found(prism, out));
    CHECK(out.stats.runs >= 1);
}

TEST_CASE("bounded randomized solver is one-sided") {
    Graph g = c5_chord();
    REQUIRE(domatic_number_dp(g) < 3);
    for (uint64_t seed = 0; seed < 50; ++seed)
        CHECK(solve_bounded_rand(g, 3.0, seed).verdict == Verdict::not_found);
}

TEST_CASE("bounded randomized solver is deterministic per seed") {
    Graph prism = Graph::prism(3);
    auto a = solve_bounded_rand(prism, 3.0, 7);
    auto b = solve_bounded_rand(prism, 3.0, 7);
    CHECK(a.verdict == b.verdict);
    CHECK(a.stats.nodes == b.stats.nodes);
    CHECK(a.stats.assigns == b.stats.assigns);
    CHECK(a.stats.runs == b.stats.runs);
    CHECK(*a.partition == *b.partition);
}

TEST_CASE("bounded randomized solver flags tiny budgets") {
    SolveOptions opts;
    opts.run_budget = 1;
    Graph prism = Graph::prism(3);
    auto out = solve_bounded_rand(prism, 3.0, 3, opts);
    CHECK(out.stats.budget_capped);
}

TEST_CASE("cycle law across solvers") {
    for (int k = 3; k <= 30; ++k) {
        bool expect = (k % 3 == 0);
        Graph g = Graph::cycle(k);
        CHECK((solve_max_deg2(g).verdict == Verdict::found) == expect);
        CHECK((solve_branching(g).verdict == Verdict::found) == expect);
        if (k <= 16) CHECK((solve_brute_force(g).verdict == Verdict::found) == expect);
    }
}

TEST_CASE("solver agreement on seeded random graphs") {
    SplitMix64 rng(404);
    for (int t = 0; t < 60; ++t) {
        int n = 4 + int(rng.below(7));  // 4..10
        int max_deg = std::min(n - 1, 2 + int(rng.below(3)));
        Graph g = Graph::random_bounded(n, max_deg, rng.next());
        bool brute = solve_brute_force(g).verdict == Verdict::found;
        auto branch = solve_branching(g);
        bool dp = domatic_number_dp(g) >= 3;
        CHECK(brute == dp);
        CHECK((branch.verdict == Verdict::found) == dp);
        if (branch.verdict == Verdict::found) CHECK(verified_found(g, branch));
        if (g.max_degree() >= 3)
            CHECK((solve_bounded_det(g).verdict == Verdict::found) == dp);
    }
}
