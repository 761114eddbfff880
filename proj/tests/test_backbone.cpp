#include "oracles.hpp"

#include <heronet/backbone.hpp>

#include <doctest.h>

#include <set>

using namespace heronet;

TEST_CASE("side significance matches the closed form on hand cases") {
    CHECK(sideSignificance(1.0, 1.0, 1) == 1.0);
    CHECK(sideSignificance(1.0, 4.0, 2) == doctest::Approx(0.75));
    CHECK(sideSignificance(2.0, 4.0, 3) == doctest::Approx(0.25));
    CHECK(sideSignificance(4.0, 4.0, 3) == 0.0);
}

TEST_CASE("side significance matches numerical integration of the null density") {
    Rng rng(21);
    for (int t = 0; t < 300; ++t) {
        const std::size_t k = 1 + rng() % 30;
        const double p = uniform01(rng);
        CHECK(sideSignificance(p, 1.0, k) == doctest::Approx(oracle::disparityByQuadrature(p, k)).epsilon(1e-9));
    }
}

TEST_CASE("edge significance is the minimum of its endpoint values") {
    GraphBuilder b(4);
    b.addEdge(0, 1, 3.0);
    b.addEdge(0, 2, 1.0);
    b.addEdge(2, 3, 1.0);
    const auto g = b.build();
    const auto sig = disparitySignificance(g);
    // edge (0,1): node 0 has k=2, s=4 -> 0.25; node 1 has k=1 -> 1
    CHECK(sig[g.findEdge(0, 1)] == doctest::Approx(0.25));
    // edge (0,2): node 0 -> 0.75; node 2 has k=2, s=2 -> 0.5
    CHECK(sig[g.findEdge(0, 2)] == doctest::Approx(0.5));
    // edge (2,3): node 2 -> 0.5; node 3 has k=1 -> 1
    CHECK(sig[g.findEdge(2, 3)] == doctest::Approx(0.5));
}

TEST_CASE("splitAtAlpha uses a strict threshold") {
    const auto g = completeGraph(3);
    const std::vector<double> sig{0.1, 0.2, 0.3};
    const auto part = splitAtAlpha(g, sig, 0.2);
    CHECK(part.active == std::vector<bool>{true, false, false});
    CHECK_THROWS_AS(splitAtAlpha(g, sig, 1.5), ValidationError);
}

TEST_CASE("alpha candidates are the distinct values below the bound plus the bound") {
    CHECK(alphaCandidates({0.3, 0.1, 0.3, 0.9}, 0.5) == std::vector<double>{0.1, 0.3, 0.5});
    CHECK(alphaCandidates({0.3, 0.5}, 0.5) == std::vector<double>{0.3, 0.5});
    CHECK(alphaCandidates({0.7, 0.9}, 0.5).empty());
}

TEST_CASE("optimalAlpha raises dissolution when nothing lies under the bound") {
    const auto g = completeGraph(4);
    const std::vector<double> sig(g.numberOfEdges(), 0.9);
    CHECK_THROWS_AS(optimalAlpha(g, sig, 0.5), DissolutionError);
    CHECK_THROWS_AS(optimalAlpha(g, sig, 0.0), ValidationError);
}

TEST_CASE("optimalAlpha equals an exhaustive threshold scan") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto g = oracle::randomGraph(6 + seed % 6, 0.45, 500 + seed, true);
        if (g.numberOfEdges() < 2 || g.numberOfEdges() > 30)
            continue;
        const auto sig = disparitySignificance(g);
        const double bound = seed % 3 == 0 ? 1.0 : 0.6;
        std::set<double> thresholds(sig.begin(), sig.end());
        thresholds.insert(bound);
        std::vector<double> scanned, values;
        bool any = false;
        for (double s : sig)
            any = any || s <= bound;
        for (double t : thresholds) {
            if (!any || t > bound)
                continue;
            const auto part = splitAtAlpha(g, sig, t);
            const auto k = part.activeCount();
            double h = 0.0;
            if (k != 0 && k != g.numberOfEdges()) {
                const auto r = hicOfPartition(part);
                h = r.hic;
                const auto ga = part.activeGraph(), gi = part.inactiveGraph();
                const double da = oracle::dissimilarity(g, ga), di = oracle::dissimilarity(g, gi),
                             dai = oracle::dissimilarity(ga, gi);
                CHECK(std::abs(r.baseActive - da) <= 1e-9);
                CHECK(std::abs(r.baseInactive - di) <= 1e-9);
                CHECK(std::abs(r.activeInactive - dai) <= 1e-9);
                // HIC is a square root of a polynomial in the sides; compare squares near degeneracy.
                const double viaOracle = oracle::heron(da, di, dai);
                CHECK(std::abs(h * h - viaOracle * viaOracle) <= 1e-9);
            }
            scanned.push_back(t);
            values.push_back(h);
        }
        if (!any) {
            CHECK_THROWS_AS(optimalAlpha(g, sig, bound), DissolutionError);
            continue;
        }
        const double best = *std::max_element(values.begin(), values.end());
        std::size_t chosen = 0;
        while (values[chosen] < best - 1e-12)
            ++chosen;
        const auto step = optimalAlpha(g, sig, bound);
        CHECK(step.alphaT == scanned[chosen]);
        CHECK(step.hic.hic == best);
    }
}

TEST_CASE("iterative backbone: alpha_T is non-increasing and graphs shrink") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = oracle::randomGraph(30, 0.2, 900 + seed, true);
        const auto trace = iterativeBackbone(g, 6);
        for (std::size_t i = 1; i < trace.steps.size(); ++i) {
            CHECK(trace.steps[i].alphaT <= trace.steps[i - 1].alphaT);
            CHECK(trace.steps[i].base.numberOfNodes() <= trace.steps[i - 1].base.numberOfNodes());
        }
        for (const auto &s : trace.steps) {
            CHECK(s.hic.hic > 0.0);
            CHECK(s.active.numberOfNodes() == s.base.numberOfNodes());
            CHECK(s.active.numberOfEdges() + s.inactive.numberOfEdges() == s.base.numberOfEdges());
        }
        if (trace.stopReason == StopReason::MaxSteps)
            CHECK(trace.steps.size() == 6);
    }
}

TEST_CASE("iterative backbone on a graph with one edge dissolves immediately") {
    GraphBuilder b(2);
    b.addEdge(0, 1);
    const auto trace = iterativeBackbone(b.build(), 6);
    CHECK(trace.steps.empty());
    CHECK((trace.stopReason == StopReason::NoPositiveHic));
    CHECK((iterativeBackbone(GraphBuilder(3).build(), 6).stopReason == StopReason::Dissolved));
    CHECK_THROWS_AS(iterativeBackbone(b.build(), 0), ValidationError);
}

TEST_CASE("stop reasons round-trip through strings") {
    for (auto r : {StopReason::MaxSteps, StopReason::Dissolved, StopReason::NoPositiveHic})
        CHECK((stopReasonFromString(toString(r)) == r));
    CHECK_THROWS_AS(stopReasonFromString("later"), ValidationError);
}

TEST_CASE("winner fraction counts only non-isolated nodes") {
    GraphBuilder b;
    b.addNode("a", 1, true);
    b.addNode("b", 1, false);
    b.addNode("c", 1, true);
    b.addEdge("a", "b");
    CHECK(winnerFraction(b.build()) == doctest::Approx(0.5));
    CHECK(winnerFraction(GraphBuilder(3).build()) == 0.0);
}
