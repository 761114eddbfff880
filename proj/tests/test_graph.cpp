#include "oracles.hpp"

#include <heronet/graph.hpp>
#include <heronet/metrics.hpp>

#include <doctest.h>

using namespace heronet;

TEST_CASE("builder aggregates parallel edges and keeps u < v") {
    GraphBuilder b;
    b.addEdge("b", "a", 2.0);
    b.addEdge("a", "b", 3.0);
    b.addEdge("b", "c");
    const auto g = b.build();
    CHECK(g.numberOfNodes() == 3);
    REQUIRE(g.numberOfEdges() == 2);
    CHECK(g.edge(0).u < g.edge(0).v);
    const auto e = g.findEdge(0, 1);
    REQUIRE(e < g.numberOfEdges());
    CHECK(g.edge(e).weight == 5.0);
    CHECK(g.strength(0) == 5.0);
    CHECK(g.strength(1) == 6.0);
    CHECK(g.findEdge(0, 2) == g.numberOfEdges());
}

TEST_CASE("builder rejects self-loops and invalid weights") {
    GraphBuilder b(3);
    CHECK_THROWS_AS(b.addEdge(1, 1), ValidationError);
    CHECK_THROWS_AS(b.addEdge(0, 1, 0.0), ValidationError);
    CHECK_THROWS_AS(b.addEdge(0, 1, -1.0), ValidationError);
    CHECK_THROWS_AS(b.addEdge(0, 1, std::nan("")), ValidationError);
}

TEST_CASE("neighbors are sorted and incident edges line up") {
    const auto g = oracle::randomGraph(30, 0.2, 4);
    for (node v = 0; v < g.numberOfNodes(); ++v) {
        const auto nb = g.neighbors(v);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        const auto inc = g.incidentEdges(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const auto &e = g.edge(inc[i]);
            CHECK(((e.u == v && e.v == nb[i]) || (e.v == v && e.u == nb[i])));
        }
    }
}

TEST_CASE("complement is an involution and partitions the pairs") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = oracle::randomGraph(12, 0.4, seed);
        const auto c = complement(g);
        const auto n = g.numberOfNodes();
        CHECK(g.numberOfEdges() + c.numberOfEdges() == n * (n - 1) / 2);
        for (const auto &e : c.edges())
            CHECK_FALSE(g.hasEdge(e.u, e.v));
        const auto cc = complement(c);
        REQUIRE(cc.numberOfEdges() == g.numberOfEdges());
        for (const auto &e : g.edges())
            CHECK(cc.hasEdge(e.u, e.v));
    }
}

TEST_CASE("withEdges keeps the vertex set, withoutIsolated drops degree-zero nodes") {
    GraphBuilder b(5);
    b.addEdge(0, 1);
    b.addEdge(1, 2);
    b.addEdge(3, 4);
    const auto g = b.build();
    const auto sub = g.withEdges({true, false, false});
    CHECK(sub.numberOfNodes() == 5);
    CHECK(sub.numberOfEdges() == 1);
    const auto trimmed = sub.withoutIsolated();
    CHECK(trimmed.numberOfNodes() == 2);
    CHECK(trimmed.id(0) == "0");
    CHECK(trimmed.id(1) == "1");
    const auto idx = sub.nonIsolatedIndex();
    CHECK(idx == std::vector<std::int64_t>{0, 1, -1, -1, -1});
}

TEST_CASE("induced subgraph keeps attributes and only internal edges") {
    GraphBuilder b;
    b.addNode("x", 7, true);
    b.addNode("y", 3, false);
    b.addNode("z", 1, false);
    b.addEdge("x", "y", 2.0);
    b.addEdge("y", "z", 1.0);
    const auto g = b.build();
    const std::vector<node> keep{0, 1};
    const auto s = g.induced(keep);
    CHECK(s.numberOfNodes() == 2);
    CHECK(s.numberOfEdges() == 1);
    CHECK(s.nodeWeight(0) == 7);
    CHECK(s.isWinner(0));
    CHECK(s.edge(0).weight == 2.0);
}

TEST_CASE("complete graph and components") {
    const auto k = completeGraph(6);
    CHECK(k.numberOfEdges() == 15);
    CHECK(components(k).size() == 1);
    GraphBuilder b(7);
    b.addEdge(0, 1);
    b.addEdge(2, 3);
    b.addEdge(3, 4);
    const auto comps = components(b.build());
    REQUIRE(comps.size() == 4);
    CHECK(comps[0].size() == 3);
    CHECK(largestComponentSize(b.build()) == 3);
}

TEST_CASE("buildGraph retains isolated nodes from the sidecar") {
    const std::vector<EdgeRecord> edges{{"a", "b", 1.0}};
    const std::vector<NodeAttributes> nodes{{"c", 4, true}, {"a", 2, false}};
    const auto g = buildGraph(edges, nodes);
    CHECK(g.numberOfNodes() == 3);
    CHECK(g.id(0) == "c");
    CHECK(g.nodeWeight(0) == 4);
    CHECK(g.degree(0) == 0);
}
