#include "oracles.hpp"

#include <heronet/kernels.hpp>
#include <heronet/metrics.hpp>

#include <doctest.h>

using namespace heronet;

namespace {

kernels::DistanceCounts countsFromFloyd(const Graph &g) {
    const auto d = oracle::floydWarshall(g);
    const auto n = g.numberOfNodes();
    kernels::DistanceCounts c;
    c.n = n;
    int maxD = 0;
    for (const auto &row : d)
        for (int x : row)
            maxD = std::max(maxD, x);
    c.maxDistance = static_cast<std::size_t>(maxD);
    c.counts.assign(n * c.columns(), 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            const auto col = d[i][j] < 0 ? c.maxDistance : static_cast<std::size_t>(d[i][j] - 1);
            ++c.counts[i * c.columns() + col];
        }
    return c;
}

} // namespace

TEST_CASE("distance counts match Floyd-Warshall, parallel and reference alike") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 2 + seed % 70;
        const double p = (seed % 5 + 1) * 0.03;
        const auto g = oracle::randomGraph(n, p, seed);
        const auto expected = countsFromFloyd(g);
        CHECK(kernels::reference::distanceCounts(g) == expected);
        CHECK(kernels::distanceCounts(g) == expected);
    }
}

TEST_CASE("distance counts of an edgeless graph put everything in the unreachable column") {
    const auto c = kernels::distanceCounts(GraphBuilder(4).build());
    CHECK(c.maxDistance == 0);
    for (std::size_t v = 0; v < 4; ++v)
        CHECK(c.unreachable(v) == 3);
}

TEST_CASE("distance counts handle more than 64 nodes (multi-word bitsets)") {
    GraphBuilder b(150);
    for (node v = 0; v + 1 < 150; ++v)
        b.addEdge(v, v + 1);
    const auto g = b.build();
    const auto c = kernels::distanceCounts(g);
    CHECK(c.maxDistance == 149);
    CHECK(c == kernels::reference::distanceCounts(g));
}

TEST_CASE("betweenness matches explicit shortest-path enumeration") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto g = oracle::randomGraph(3 + seed % 10, 0.35, 100 + seed);
        const auto expected = oracle::enumerateBetweenness(g);
        for (const auto &bc : {kernels::reference::betweenness(g), kernels::betweenness(g)}) {
            for (node v = 0; v < g.numberOfNodes(); ++v)
                CHECK(bc.node[v] == doctest::Approx(expected.node[v]).epsilon(1e-12));
            for (std::size_t e = 0; e < g.numberOfEdges(); ++e) {
                const auto &ed = g.edge(static_cast<edge_index>(e));
                CHECK(bc.edge[e] == doctest::Approx(expected.edge.at({ed.u, ed.v})).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("betweenness of a path and a star") {
    GraphBuilder path(4);
    path.addEdge(0, 1);
    path.addEdge(1, 2);
    path.addEdge(2, 3);
    const auto bp = kernels::betweenness(path.build());
    CHECK(bp.node == std::vector<double>{0.0, 2.0, 2.0, 0.0});
    CHECK(bp.edge == std::vector<double>{3.0, 4.0, 3.0});

    GraphBuilder star(5);
    for (node v = 1; v < 5; ++v)
        star.addEdge(0, v);
    const auto bs = kernels::betweenness(star.build());
    CHECK(bs.node[0] == 6.0);
}

TEST_CASE("parallel betweenness is bit-identical to the reference on larger graphs") {
    const auto g = oracle::randomGraph(200, 0.03, 9);
    const auto a = kernels::betweenness(g), b = kernels::reference::betweenness(g);
    for (std::size_t i = 0; i < a.node.size(); ++i)
        CHECK(a.node[i] == doctest::Approx(b.node[i]).epsilon(1e-12));
    CHECK(a.edge.size() == b.edge.size());
}

TEST_CASE("alpha centrality: CG, dense LU and Neumann series agree") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 3 + seed % 12;
        const auto g = oracle::randomGraph(n, 0.4, 300 + seed);
        const double att = 1.0 / static_cast<double>(n);
        std::vector<double> exo(n);
        for (std::size_t i = 0; i < n; ++i)
            exo[i] = 0.1 + static_cast<double>((i * 7 + seed) % 5) / 10.0;
        for (auto which : {kernels::Adjacency::Graph, kernels::Adjacency::Complement}) {
            const auto series =
                oracle::neumann(oracle::adjacency(g, which == kernels::Adjacency::Complement), att, exo);
            const auto lu = kernels::reference::alphaCentrality(g, which, att, exo);
            const auto cg = kernels::alphaCentrality(g, which, att, exo);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(lu[i] == doctest::Approx(series[i]).epsilon(1e-11));
                CHECK(cg[i] == doctest::Approx(series[i]).epsilon(1e-11));
            }
        }
    }
}

TEST_CASE("alpha centrality CG scales past dense sizes") {
    const auto g = oracle::randomGraph(400, 0.05, 17);
    const std::vector<double> exo(400, 1.0 / 400.0);
    const auto x = kernels::alphaCentrality(g, kernels::Adjacency::Complement, 1.0 / 400.0, exo);
    const auto ref = kernels::reference::alphaCentrality(g, kernels::Adjacency::Complement, 1.0 / 400.0, exo);
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(x[i] == doctest::Approx(ref[i]).epsilon(1e-10));
}

TEST_CASE("global efficiency and clustering on known graphs") {
    CHECK(globalEfficiency(completeGraph(5)) == doctest::Approx(1.0));
    CHECK(meanClustering(completeGraph(5)) == doctest::Approx(1.0));
    GraphBuilder path(3);
    path.addEdge(0, 1);
    path.addEdge(1, 2);
    // pairs: (0,1)=1, (1,2)=1, (0,2)=1/2 over 3 unordered pairs
    CHECK(globalEfficiency(path.build()) == doctest::Approx(2.5 / 3.0));
    CHECK(meanClustering(path.build()) == 0.0);
}

TEST_CASE("modularity of two disjoint triangles with the natural split") {
    GraphBuilder b(6);
    b.addEdge(0, 1);
    b.addEdge(1, 2);
    b.addEdge(0, 2);
    b.addEdge(3, 4);
    b.addEdge(4, 5);
    b.addEdge(3, 5);
    const auto g = b.build();
    CHECK(modularity(g, {0, 0, 0, 1, 1, 1}) == doctest::Approx(0.5));
    const auto found = detectCommunities(g);
    CHECK(modularity(g, found) == doctest::Approx(0.5));
}
