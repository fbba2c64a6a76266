#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "domatic/graph.hpp"
#include "domatic/rng.hpp"

using namespace domatic;

namespace {

VertexSet make_set(int n, std::initializer_list<int> ids) {
    VertexSet s(n);
    for (int v : ids) s.set(v);
    return s;
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

}  // namespace

TEST_CASE("parse triangle") {
    Graph g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(0, 2));
}

TEST_CASE("parse rejects self-loop with line number") {
    CHECK_THROWS_WITH_AS(parse_graph("p edge 2 1\ne 1 1\n"),
                         doctest::Contains("line 2"), std::invalid_argument);
}

TEST_CASE("parse rejects duplicate edge") {
    CHECK_THROWS_AS(parse_graph("p edge 3 2\ne 1 2\ne 2 1\n"), std::invalid_argument);
}

TEST_CASE("parse rejects out-of-range id") {
    CHECK_THROWS_WITH_AS(parse_graph("p edge 3 1\ne 1 4\n"), doctest::Contains("line 2"),
                         std::invalid_argument);
}

TEST_CASE("parse rejects malformed line") {
    CHECK_THROWS_AS(parse_graph("p edge 3 1\nq 1 2\n"), std::invalid_argument);
}

TEST_CASE("parse six-cycle has all degrees 2") {
    Graph g = parse_graph("p edge 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\n");
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("generators") {
    Graph c6 = Graph::cycle(6);
    CHECK(c6.num_edges() == 6);
    for (int v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);

    Graph p4 = Graph::path(4);
    CHECK(p4.num_edges() == 3);
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);
    CHECK(p4.degree(2) == 2);
    CHECK(p4.degree(3) == 1);

    CHECK(Graph::complete(4).num_edges() == 6);
    CHECK_THROWS_AS(Graph::cycle(2), std::invalid_argument);
}

TEST_CASE("random generator is reproducible and degree-bounded") {
    Graph a = Graph::random_bounded(20, 3, 42);
    Graph b = Graph::random_bounded(20, 3, 42);
    CHECK(write_graph(a) == write_graph(b));
    CHECK(a.max_degree() <= 3);
    Graph c = Graph::random_bounded(20, 3, 43);
    CHECK(write_graph(a) != write_graph(c));
}

TEST_CASE("closed neighborhood") {
    Graph c6 = Graph::cycle(6);
    CHECK(closed_neighborhood(c6, make_set(6, {0})) == make_set(6, {5, 0, 1}));
    CHECK(closed_neighborhood(c6, make_set(6, {})) == make_set(6, {}));
    CHECK(closed_neighborhood(c6, make_set(6, {0, 3})).count() == 6);
}

TEST_CASE("is_dominating_set") {
    CHECK(is_dominating_set(Graph::complete(3), make_set(3, {0})));
    Graph c6 = Graph::cycle(6);
    CHECK_FALSE(is_dominating_set(c6, make_set(6, {0})));
    CHECK(is_dominating_set(c6, make_set(6, {0, 3})));
}

TEST_CASE("verify_three_partition") {
    Graph c6 = Graph::cycle(6);
    CHECK(verify_three_partition(c6, make_set(6, {0, 3}), make_set(6, {1, 4}),
                                 make_set(6, {2, 5})));
    CHECK_FALSE(verify_three_partition(c6, make_set(6, {0, 3}), make_set(6, {1, 4}),
                                       make_set(6, {2, 4})));
    CHECK(verify_three_partition(Graph::complete(3), make_set(3, {0}), make_set(3, {1}),
                                 make_set(3, {2})));
}

TEST_CASE("connected components") {
    Graph g = disjoint_union(Graph::cycle(3), Graph::cycle(6));
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].count() == 3);
    CHECK(comps[1].count() == 6);

    CHECK(connected_components(Graph::cycle(5)).size() == 1);
    CHECK(connected_components(Graph(4, {})).size() == 4);
}

TEST_CASE("S is contained in its closed neighborhood") {
    SplitMix64 rng(7);
    for (int t = 0; t < 30; ++t) {
        Graph g = Graph::random_bounded(10, 4, rng.next());
        VertexSet s(10);
        for (int v = 0; v < 10; ++v)
            if (rng.below(2)) s.set(v);
        CHECK(closed_neighborhood(g, s).contains(s));
    }
}

TEST_CASE("domination is monotone under supersets") {
    SplitMix64 rng(11);
    for (int t = 0; t < 30; ++t) {
        Graph g = Graph::random_bounded(10, 5, rng.next());
        VertexSet d(10);
        for (int v = 0; v < 10; ++v)
            if (rng.below(2)) d.set(v);
        if (!is_dominating_set(g, d)) continue;
        VertexSet bigger = d;
        bigger.set(int(rng.below(10)));
        CHECK(is_dominating_set(g, bigger));
    }
}

TEST_CASE("write/parse round trip") {
    SplitMix64 rng(3);
    for (int t = 0; t < 20; ++t) {
        Graph g = Graph::random_bounded(12, 4, rng.next());
        Graph back = parse_graph(write_graph(g));
        CHECK(write_graph(back) == write_graph(g));
        CHECK(back.num_vertices() == g.num_vertices());
        CHECK(back.num_edges() == g.num_edges());
    }
}
