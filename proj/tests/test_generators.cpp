#include <heronet/generators.hpp>
#include <heronet/metrics.hpp>

#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

using namespace heronet;

TEST_CASE("topologies are deterministic per seed") {
    for (const auto &spec : benchmarkTopologies(60, 3)) {
        CHECK(generateTopology(spec) == generateTopology(spec));
        CHECK(generateTopology(spec).numberOfNodes() == 60);
    }
}

TEST_CASE("topology model names round-trip") {
    for (auto m : {TopologyModel::Complete, TopologyModel::ErdosRenyi, TopologyModel::BarabasiAlbert,
                   TopologyModel::WattsStrogatz, TopologyModel::PlantedPartition, TopologyModel::HubAndSpoke})
        CHECK((topologyModelFromString(toString(m)) == m));
    CHECK((topologyModelFromString("ba") == TopologyModel::BarabasiAlbert));
    CHECK_THROWS_AS(topologyModelFromString("lattice"), ValidationError);
}

TEST_CASE("ER edge count is near its expectation") {
    TopologySpec s;
    s.n = 200;
    s.p = 0.05;
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        s.seed = seed;
        total += static_cast<double>(generateTopology(s).numberOfEdges());
    }
    const double expected = 0.05 * 200 * 199 / 2;
    const double se = std::sqrt(expected * 0.95 / 20.0);
    CHECK(std::abs(total / 20.0 - expected) < 4.0 * se);
}

TEST_CASE("BA, WS, hub-and-spoke structural signatures") {
    TopologySpec ba;
    ba.model = TopologyModel::BarabasiAlbert;
    ba.n = 100;
    ba.m = 2;
    const auto g = generateTopology(ba);
    // seed clique on m+1 nodes, then m edges per new node
    CHECK(g.numberOfEdges() == 3 + 2 * 97);
    CHECK(components(g).size() == 1);

    TopologySpec ws;
    ws.model = TopologyModel::WattsStrogatz;
    ws.n = 50;
    ws.k = 4;
    ws.beta = 0.0;
    const auto ring = generateTopology(ws);
    CHECK(ring.numberOfEdges() == 100);
    for (node v = 0; v < 50; ++v)
        CHECK(ring.degree(v) == 4);

    TopologySpec hub;
    hub.model = TopologyModel::HubAndSpoke;
    hub.n = 40;
    const auto h = generateTopology(hub);
    CHECK(h.degree(0) == 39);
}

TEST_CASE("planted partition is denser inside blocks") {
    TopologySpec s;
    s.model = TopologyModel::PlantedPartition;
    s.n = 100;
    s.seed = 8;
    const auto g = generateTopology(s);
    std::size_t inside = 0, across = 0;
    for (const auto &e : g.edges())
        (e.u * 4 / 100 == e.v * 4 / 100 ? inside : across)++;
    const double dIn = static_cast<double>(inside) / (4.0 * 25 * 24 / 2);
    const double dOut = static_cast<double>(across) / (100.0 * 99 / 2 - 4.0 * 25 * 24 / 2);
    CHECK(dIn > 10.0 * dOut);
}

TEST_CASE("covert network: exact corrupt count, valid weights, determinism") {
    CovertSpec s;
    s.seed = 4;
    const auto net = generateCovert(s);
    CHECK(std::count(net.corrupt.begin(), net.corrupt.end(), true) == 10);
    for (const auto &e : net.graph.edges()) {
        CHECK(e.weight >= 1.0);
        CHECK(e.weight <= 10.0);
        CHECK(e.weight == std::floor(e.weight));
    }
    for (node v = 0; v < net.graph.numberOfNodes(); ++v)
        CHECK(net.graph.nodeWeight(v) == static_cast<std::uint64_t>(std::llround(net.graph.strength(v))));
    CHECK(generateCovert(s).graph == net.graph);
    CHECK(generateCovert(s).corrupt == net.corrupt);
    s.corruptFraction = 1.5;
    CHECK_THROWS_AS(generateCovert(s), ValidationError);
}

TEST_CASE("covert block density exceeds background density in at least 95 of 100 seeds") {
    int denser = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        CovertSpec s;
        s.seed = seed;
        const auto net = generateCovert(s);
        std::size_t cc = 0, hh = 0;
        for (const auto &e : net.graph.edges()) {
            if (net.corrupt[e.u] && net.corrupt[e.v])
                ++cc;
            else if (!net.corrupt[e.u] && !net.corrupt[e.v])
                ++hh;
        }
        const double dc = static_cast<double>(cc) / (10.0 * 9 / 2);
        const double dh = static_cast<double>(hh) / (90.0 * 89 / 2);
        denser += dc > dh ? 1 : 0;
    }
    CHECK(denser >= 95);
}

TEST_CASE("corrupt agents win more often than honest ones") {
    std::size_t corruptWins = 0, corruptTotal = 0, honestWins = 0, honestTotal = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        CovertSpec s;
        s.seed = seed;
        const auto net = generateCovert(s);
        for (node v = 0; v < net.graph.numberOfNodes(); ++v) {
            if (net.corrupt[v]) {
                ++corruptTotal;
                corruptWins += net.graph.isWinner(v) ? 1 : 0;
            } else {
                ++honestTotal;
                honestWins += net.graph.isWinner(v) ? 1 : 0;
            }
        }
    }
    CHECK(static_cast<double>(corruptWins) / static_cast<double>(corruptTotal) >
          static_cast<double>(honestWins) / static_cast<double>(honestTotal));
}

TEST_CASE("leaders are tied to every member of their block") {
    CovertSpec s;
    s.seed = 12;
    s.pIntraCorrupt = 0.0;
    s.groups = 1;
    const auto net = generateCovert(s);
    std::vector<node> corrupt;
    for (node v = 0; v < net.graph.numberOfNodes(); ++v)
        if (net.corrupt[v])
            corrupt.push_back(v);
    const node leader = corrupt.front();
    for (node v : corrupt)
        if (v != leader)
            CHECK(net.graph.hasEdge(leader, v));
}

TEST_CASE("growPartial yields nested induced subnetworks") {
    CovertSpec s;
    s.seed = 2;
    const auto net = generateCovert(s);
    std::vector<double> fr;
    for (int i = 1; i <= 10; ++i)
        fr.push_back(i / 10.0);
    const auto parts = growPartial(net, fr, 77);
    REQUIRE(parts.size() == 10);
    for (std::size_t i = 0; i < parts.size(); ++i)
        CHECK(parts[i].graph.numberOfNodes() == 10 * (i + 1));
    CHECK(parts.back().graph == net.graph);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto &small = parts[i - 1].graph, &big = parts[i].graph;
        std::set<std::string> ids(big.ids().begin(), big.ids().end());
        for (const auto &id : small.ids())
            CHECK(ids.count(id) == 1);
        CHECK(small.numberOfEdges() <= big.numberOfEdges());
    }
    // induced: every original edge between kept nodes is present
    const auto &p3 = parts[2].graph;
    std::map<std::string, node> orig;
    for (node v = 0; v < net.graph.numberOfNodes(); ++v)
        orig[net.graph.id(v)] = v;
    std::size_t expected = 0;
    for (node a = 0; a < p3.numberOfNodes(); ++a)
        for (node b = a + 1; b < p3.numberOfNodes(); ++b)
            expected += net.graph.hasEdge(orig[p3.id(a)], orig[p3.id(b)]) ? 1 : 0;
    CHECK(p3.numberOfEdges() == expected);
    CHECK_THROWS_AS(growPartial(net, {0.5, 0.3}, 1), ValidationError);
    CHECK_THROWS_AS(growPartial(net, {0.0, 0.3}, 1), ValidationError);
}
