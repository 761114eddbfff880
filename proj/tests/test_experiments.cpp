#include "oracles.hpp"

#include <heronet/experiments.hpp>
#include <heronet/stats.hpp>

#include <doctest.h>

using namespace heronet;

TEST_CASE("uniform grid hits the end points without drift") {
    const auto g = uniformGrid(0.0, 1.0, 0.05);
    REQUIRE(g.size() == 21);
    CHECK(g[7] == 0.35);
    CHECK(g.back() == 1.0);
    CHECK_THROWS_AS(uniformGrid(0.0, 1.0, 0.0), ValidationError);
}

TEST_CASE("uniform activation sweep is deterministic and symmetric around one half") {
    const auto grid = uniformGrid(0.0, 1.0, 0.25);
    const auto a = uniformActivationSweep(20, grid, 6, 3);
    const auto b = uniformActivationSweep(20, grid, 6, 3);
    CHECK(a.values == b.values);
    CHECK(a.mean.front() == 0.0);
    CHECK(a.mean.back() == 0.0);
    CHECK(a.auxiliary.at("efficiency_average").size() == grid.size());
    CHECK_THROWS_AS(uniformActivationSweep(5, grid, 2, 0), ValidationError);
}

TEST_CASE("gamma sweep records exact-size activation") {
    TopologySpec er;
    er.n = 40;
    er.p = 0.2;
    er.seed = 1;
    const auto s = gammaSweep(er, {-1.0, 0.0, 1.0}, 4, 9);
    CHECK(s.mean.size() == 3);
    const double first = s.auxiliary.at("active_edges")[0];
    for (double x : s.auxiliary.at("active_edges"))
        CHECK(x == first);
}

TEST_CASE("degree removal order is degree descending with index ties ascending") {
    GraphBuilder b(5);
    b.addEdge(0, 1);
    b.addEdge(1, 2);
    b.addEdge(1, 3);
    b.addEdge(3, 4);
    const auto order = degreeRemovalOrder(b.build());
    CHECK(order == std::vector<node>{1, 3, 0, 2, 4});
}

TEST_CASE("removal sensitivity: removal counts and nonnegative scores") {
    const auto g = oracle::randomGraph(40, 0.15, 6);
    const auto r = removalSensitivity(g, 0.1);
    CHECK(r.removals == 4);
    for (double x : r.scores())
        CHECK(x >= 0.0);
    const auto e = removalSensitivity(g, 0.1, RemovalMode::Edges);
    CHECK(e.removals == static_cast<std::size_t>(std::ceil(0.1 * static_cast<double>(g.numberOfEdges()) - 1e-9)));
    CHECK(removalSensitivity(g, 0.0).removals == 0);
}

TEST_CASE("removal sensitivity on a star: the hub takes the largest component with it") {
    GraphBuilder b(11);
    for (node v = 1; v < 11; ++v)
        b.addEdge(0, v);
    const auto r = removalSensitivity(b.build(), 0.05);
    REQUIRE(r.removals == 1);
    // LCC goes from 11/11 to 1/11
    CHECK(r.degreeRobustness == doctest::Approx((1.0 - 1.0 / 11.0) / (1.0 + 1e-9)));
    CHECK(r.betweennessRobustness == doctest::Approx(r.degreeRobustness));
}

TEST_CASE("sensitivity comparison covers the five topologies") {
    const auto t = sensitivityComparison(30, 5);
    CHECK(t.topologies.size() == 5);
    CHECK(t.rows.size() == 5);
    CHECK(t.hicRanksFirst() <= 5);
}

TEST_CASE("detection counts agree with raw labels at every iteration") {
    CovertSpec s;
    s.seed = 31;
    const auto net = generateCovert(s);
    const auto trace = iterativeBackbone(net.graph, 10);
    const auto run = detect(net, trace);
    REQUIRE(run.iterations.size() == trace.steps.size());
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto &a = trace.steps[i].active;
        std::size_t retained = 0, corrupt = 0;
        for (node v = 0; v < a.numberOfNodes(); ++v) {
            if (a.degree(v) == 0)
                continue;
            ++retained;
            corrupt += net.corrupt[static_cast<std::size_t>(std::stoul(a.id(v)))] ? 1 : 0;
        }
        CHECK(run.iterations[i].retained == retained);
        CHECK(run.iterations[i].retainedCorrupt == corrupt);
        CHECK(run.iterations[i].recall * 10.0 == doctest::Approx(static_cast<double>(corrupt)));
    }
}

TEST_CASE("covert benchmark is deterministic and bounded") {
    CovertSpec s;
    s.n = 40;
    s.seed = 2;
    const auto a = covertBenchmark(s, 4, 5), b = covertBenchmark(s, 4, 5);
    REQUIRE(a.meanRecall.has_value());
    CHECK(*a.meanRecall == *b.meanRecall);
    CHECK(*a.meanRecall >= 0.0);
    CHECK(*a.meanRecall <= 1.0);
    s.corruptFraction = 0.0;
    CHECK_FALSE(covertBenchmark(s, 2, 3).meanRecall.has_value());
}

TEST_CASE("robustness AUC by trapezoids") {
    BackboneTrace t;
    GraphBuilder half(10);
    for (node v = 0; v + 1 < 5; ++v)
        half.addEdge(v, v + 1);
    BackboneStep s;
    s.active = half.build();
    t.steps.push_back(s);
    // f = 1, 0.5, then 0 (early stop) over maxSteps = 2
    CHECK(robustnessAuc(10, t, 2) == doctest::Approx((0.75 + 0.25) / 2.0));
    t.steps.push_back(s);
    CHECK(robustnessAuc(10, t, 2) == doctest::Approx((0.75 + 0.5) / 2.0));
    CHECK(robustnessAuc(10, BackboneTrace{}, 4) == doctest::Approx(0.5 / 4.0));
}

TEST_CASE("scaled covert spec keeps expected degrees") {
    CovertSpec t;
    const auto s = scaleCovertSpec(t, 1000);
    CHECK(s.n == 1000);
    CHECK(s.corruptCount() == 100);
    CHECK(s.pBackground * 999 == doctest::Approx(t.pBackground * 100 * 999 / 1000.0));
    CHECK(s.groups == 20);
    const auto same = scaleCovertSpec(t, 100);
    CHECK(same.pBackground == t.pBackground);
    CHECK(same.groups == t.groups);
}

TEST_CASE("scaling benchmark rejects unsorted sizes and runs the smallest case") {
    CovertSpec t;
    CHECK_THROWS_AS(scalingBenchmark({50, 10}, t, 1), ValidationError);
    const auto pts = scalingBenchmark({10}, t, 2);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].robustness.size() == 2);
}

TEST_CASE("partial information at fraction 1 equals the full network per seed") {
    CovertSpec s;
    s.seed = 5;
    const auto r = partialInfoBenchmark(s, {0.5, 1.0}, 3);
    for (std::size_t k = 0; k < 3; ++k) {
        CovertSpec cs = s;
        cs.seed = deriveSeed(s.seed, {k});
        CHECK(r.values[1][k] == firstStepHic(generateCovert(cs).graph));
    }
    CHECK_THROWS_AS(partialInfoBenchmark(s, {0.5, 0.2}, 1), ValidationError);
}

TEST_CASE("spearman: exact permutation p-value for small n") {
    const std::vector<double> x{1, 2, 3, 4, 5}, y{2, 4, 6, 8, 10};
    const auto c = stats::spearman(x, y);
    CHECK(c.rho == doctest::Approx(1.0));
    // two of 120 permutations reach |rho| = 1
    CHECK(c.pValue == doctest::Approx(2.0 / 120.0));
    const auto r = stats::ranks(std::vector<double>{3, 1, 3, 2});
    CHECK(r == std::vector<double>{3.5, 1.0, 3.5, 2.0});
    CHECK(stats::stddev(std::vector<double>{1, 2, 3, 4}) == doctest::Approx(std::sqrt(5.0 / 3.0)));
}
