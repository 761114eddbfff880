#include <heronet/experiments.hpp>
#include <heronet/random.hpp>
#include <heronet/stats.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace heronet {

std::vector<double> uniformGrid(double first, double last, double step) {
    if (!(step > 0.0) || last < first)
        throw ValidationError("grid needs step > 0 and last >= first");
    std::vector<double> g;
    const auto count = static_cast<std::size_t>(std::floor((last - first) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i)
        g.push_back(std::round((first + static_cast<double>(i) * step) * 1e12) / 1e12);
    return g;
}

namespace {

void summarize(SweepResult &r) {
    r.mean.clear();
    r.std.clear();
    for (const auto &v : r.values) {
        r.mean.push_back(stats::mean(v));
        r.std.push_back(stats::stddev(v));
    }
}

std::vector<double> rowMeans(const std::vector<std::vector<double>> &v) {
    std::vector<double> out;
    for (const auto &row : v)
        out.push_back(stats::mean(row));
    return out;
}

} // namespace

SweepResult uniformActivationSweep(std::size_t n, const std::vector<double> &pGrid, std::size_t seeds,
                                   std::uint64_t baseSeed, const DissimilarityOptions &options) {
    if (n < 10)
        throw ValidationError("uniform activation sweep needs n >= 10");
    const Graph base = completeGraph(n);
    const HicEvaluator evaluator(base, options);
    SweepResult r;
    r.grid = pGrid;
    const auto cells = static_cast<std::int64_t>(pGrid.size() * seeds);
    r.values.assign(pGrid.size(), std::vector<double>(seeds));
    std::vector<std::vector<double>> effA(pGrid.size(), std::vector<double>(seeds));
    auto effI = effA, effAvg = effA;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < cells; ++c) {
        const auto gi = static_cast<std::size_t>(c) / seeds, si = static_cast<std::size_t>(c) % seeds;
        ActivationConfig cfg;
        cfg.mode = ActivationMode::Uniform;
        cfg.p = pGrid[gi];
        cfg.seed = deriveSeed(baseSeed, {gi, si});
        const auto part = activate(base, cfg);
        const auto h = evaluator.evaluate(part.active);
        r.values[gi][si] = h.hic;
        effA[gi][si] = h.activeEfficiency;
        effI[gi][si] = h.inactiveEfficiency;
        effAvg[gi][si] = 0.5 * (h.activeEfficiency + h.inactiveEfficiency);
    }
    summarize(r);
    r.auxiliary["efficiency_active"] = rowMeans(effA);
    r.auxiliary["efficiency_inactive"] = rowMeans(effI);
    r.auxiliary["efficiency_average"] = rowMeans(effAvg);
    return r;
}

namespace {

Graph connectedBase(const TopologySpec &spec) {
    Graph g = generateTopology(spec);
    const auto comps = components(g);
    if (comps.size() > 1)
        g = g.induced(comps.front());
    return g;
}

SweepResult betweennessSweep(const Graph &base, const std::vector<double> &gammaGrid, std::size_t seeds,
                             std::uint64_t baseSeed, double activeFraction, const DissimilarityOptions &options) {
    const auto eb = edgeBetweenness(base);
    const HicEvaluator evaluator(base, options);
    SweepResult r;
    r.grid = gammaGrid;
    r.values.assign(gammaGrid.size(), std::vector<double>(seeds));
    std::vector<std::vector<double>> activeCount(gammaGrid.size(), std::vector<double>(seeds));
    const auto cells = static_cast<std::int64_t>(gammaGrid.size() * seeds);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < cells; ++c) {
        const auto gi = static_cast<std::size_t>(c) / seeds, si = static_cast<std::size_t>(c) % seeds;
        ActivationConfig cfg;
        cfg.mode = ActivationMode::Betweenness;
        cfg.gamma = gammaGrid[gi];
        cfg.activeFraction = activeFraction;
        cfg.seed = deriveSeed(baseSeed, {gi, si});
        const auto part = activate(base, cfg, eb);
        r.values[gi][si] = evaluator.evaluate(part.active).hic;
        activeCount[gi][si] = static_cast<double>(part.activeCount());
    }
    summarize(r);
    r.auxiliary["active_edges"] = rowMeans(activeCount);
    return r;
}

} // namespace

SweepResult gammaSweep(const TopologySpec &base, const std::vector<double> &gammaGrid, std::size_t seeds,
                       std::uint64_t baseSeed, double activeFraction, const DissimilarityOptions &options) {
    return betweennessSweep(connectedBase(base), gammaGrid, seeds, baseSeed, activeFraction, options);
}

SweepResult exactFractionBaseline(const TopologySpec &base, std::size_t seeds, std::uint64_t baseSeed,
                                  double activeFraction, const DissimilarityOptions &options) {
    // Unit betweenness makes every inclusion weight equal.
    const Graph g = connectedBase(base);
    const auto eb = std::vector<double>(g.numberOfEdges(), 1.0);
    const HicEvaluator evaluator(g, options);
    SweepResult r;
    r.grid = {0.0};
    r.values.assign(1, std::vector<double>(seeds));
    const auto cells = static_cast<std::int64_t>(seeds);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < cells; ++c) {
        ActivationConfig cfg;
        cfg.mode = ActivationMode::Betweenness;
        cfg.gamma = 1.0;
        cfg.activeFraction = activeFraction;
        cfg.seed = deriveSeed(baseSeed ^ 0x5eedULL, {static_cast<std::uint64_t>(c)});
        r.values[0][static_cast<std::size_t>(c)] = evaluator.evaluate(activate(g, cfg, eb).active).hic;
    }
    summarize(r);
    return r;
}

const std::vector<std::string> &SensitivityRow::metricNames() {
    static const std::vector<std::string> names{"hic", "degree_robustness", "betweenness_robustness", "clustering",
                                                "modularity"};
    return names;
}

std::vector<double> SensitivityRow::scores() const {
    return {hic, degreeRobustness, betweennessRobustness, clustering, modularity};
}

std::vector<node> degreeRemovalOrder(const Graph &g) {
    std::vector<node> order(g.numberOfNodes());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](node a, node b) { return g.degree(a) > g.degree(b); });
    return order;
}

namespace {

double relativeChange(double value, double baseline) {
    return std::abs(value - baseline) / (std::abs(baseline) + 1e-9);
}

// Graph on the surviving nodes (kept in index order).
Graph survivors(const Graph &g, const std::vector<bool> &removed) {
    std::vector<node> keep;
    for (node v = 0; v < g.numberOfNodes(); ++v)
        if (!removed[v])
            keep.push_back(v);
    return g.induced(keep);
}

std::vector<std::size_t> restrictLabels(const std::vector<std::size_t> &labels, const std::vector<bool> &removed) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (!removed[v])
            out.push_back(labels[v]);
    return out;
}

} // namespace

SensitivityRow removalSensitivity(const Graph &g, double fraction, RemovalMode mode,
                                  const DissimilarityOptions &options) {
    if (!(fraction >= 0.0 && fraction <= 1.0))
        throw ValidationError("removal fraction must lie in [0,1]");
    const auto n = g.numberOfNodes();
    const double nn = static_cast<double>(n);
    const HicEvaluator evaluator(g, options);
    const auto labels = detectCommunities(g);

    const double lcc0 = static_cast<double>(largestComponentSize(g)) / nn;
    const double clustering0 = meanClustering(g);
    const double modularity0 = modularity(g, labels);
    // HIC baseline: nothing removed, every edge active.
    const double hic0 = 0.0;

    SensitivityRow row;
    if (mode == RemovalMode::Nodes) {
        const auto removals = static_cast<std::size_t>(std::ceil(fraction * nn - 1e-9));
        row.removals = removals;
        if (removals == 0)
            return row;
        const auto order = degreeRemovalOrder(g);
        std::vector<bool> removed(n, false), adaptiveRemoved(n, false);
        for (std::size_t t = 0; t < removals; ++t) {
            removed[order[t]] = true;
            std::vector<bool> active(g.numberOfEdges());
            for (std::size_t e = 0; e < active.size(); ++e) {
                const auto &ed = g.edge(static_cast<edge_index>(e));
                active[e] = !removed[ed.u] && !removed[ed.v];
            }
            const Graph residual = survivors(g, removed);
            row.hic += relativeChange(evaluator.evaluate(active).hic, hic0);
            row.degreeRobustness += relativeChange(static_cast<double>(largestComponentSize(residual)) / nn, lcc0);
            row.clustering += relativeChange(meanClustering(residual), clustering0);
            row.modularity += relativeChange(modularity(residual, restrictLabels(labels, removed)), modularity0);

            // Adaptive betweenness attack on its own residual.
            const Graph adaptive = survivors(g, adaptiveRemoved);
            const auto bc = nodeBetweenness(adaptive);
            std::size_t pick = 0;
            for (std::size_t i = 1; i < bc.size(); ++i)
                if (bc[i] > bc[pick] + 1e-12)
                    pick = i;
            std::size_t seen = 0;
            for (node v = 0; v < n; ++v) {
                if (adaptiveRemoved[v])
                    continue;
                if (seen++ == pick) {
                    adaptiveRemoved[v] = true;
                    break;
                }
            }
            row.betweennessRobustness +=
                relativeChange(static_cast<double>(largestComponentSize(survivors(g, adaptiveRemoved))) / nn, lcc0);
        }
    } else {
        const auto m = g.numberOfEdges();
        const auto removals = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(m) - 1e-9));
        row.removals = removals;
        if (removals == 0)
            return row;
        const auto eb = edgeBetweenness(g);
        std::vector<std::size_t> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return eb[a] > eb[b]; });
        std::vector<bool> active(m, true), adaptive(m, true);
        for (std::size_t t = 0; t < removals; ++t) {
            active[order[t]] = false;
            const Graph residual = g.withEdges(active);
            row.hic += relativeChange(evaluator.evaluate(active).hic, hic0);
            row.degreeRobustness += relativeChange(static_cast<double>(largestComponentSize(residual)) / nn, lcc0);
            row.clustering += relativeChange(meanClustering(residual), clustering0);
            row.modularity += relativeChange(modularity(residual, labels), modularity0);

            const Graph current = g.withEdges(adaptive);
            const auto ebc = edgeBetweenness(current);
            std::size_t pick = 0;
            for (std::size_t i = 1; i < ebc.size(); ++i)
                if (ebc[i] > ebc[pick] + 1e-12)
                    pick = i;
            if (!ebc.empty()) {
                const auto &ed = current.edge(static_cast<edge_index>(pick));
                adaptive[g.findEdge(ed.u, ed.v)] = false;
            }
            row.betweennessRobustness +=
                relativeChange(static_cast<double>(largestComponentSize(g.withEdges(adaptive))) / nn, lcc0);
        }
    }
    const double t = static_cast<double>(row.removals);
    row.hic /= t;
    row.degreeRobustness /= t;
    row.betweennessRobustness /= t;
    row.clustering /= t;
    row.modularity /= t;
    return row;
}

std::size_t SensitivityTable::hicRanksFirst() const {
    std::size_t count = 0;
    for (const auto &r : rows) {
        const auto s = r.scores();
        if (std::all_of(s.begin() + 1, s.end(), [&](double x) { return s[0] > x; }))
            ++count;
    }
    return count;
}

SensitivityTable sensitivityComparison(std::size_t n, std::uint64_t seed, double fraction, RemovalMode mode,
                                       const DissimilarityOptions &options) {
    SensitivityTable table;
    const auto specs = benchmarkTopologies(n, seed);
    table.rows.resize(specs.size());
    for (const auto &s : specs)
        table.topologies.push_back(toString(s.model));
    const auto count = static_cast<std::int64_t>(specs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto g = connectedBase(specs[static_cast<std::size_t>(i)]);
        table.rows[static_cast<std::size_t>(i)] = removalSensitivity(g, fraction, mode, options);
    }
    return table;
}

RunDetection detect(const LabeledNetwork &net, const BackboneTrace &trace) {
    RunDetection run;
    run.corrupt = static_cast<std::size_t>(std::count(net.corrupt.begin(), net.corrupt.end(), true));
    std::unordered_map<std::string, node> index;
    for (node v = 0; v < net.graph.numberOfNodes(); ++v)
        index.emplace(net.graph.id(v), v);
    for (const auto &step : trace.steps) {
        IterationDetection it;
        it.hic = step.hic.hic;
        it.alphaT = step.alphaT;
        for (node v = 0; v < step.active.numberOfNodes(); ++v) {
            if (step.active.degree(v) == 0)
                continue;
            ++it.retained;
            if (net.corrupt[index.at(step.active.id(v))])
                ++it.retainedCorrupt;
        }
        it.recall = run.corrupt == 0 ? std::numeric_limits<double>::quiet_NaN()
                                     : static_cast<double>(it.retainedCorrupt) / static_cast<double>(run.corrupt);
        it.precision = it.retained == 0 ? 0.0
                                        : static_cast<double>(it.retainedCorrupt) / static_cast<double>(it.retained);
        run.iterations.push_back(it);
    }
    run.stopReason = trace.stopReason;
    run.finalContainsCorrupt = !run.iterations.empty() && run.iterations.back().retainedCorrupt > 0;
    return run;
}

DetectionReport covertBenchmark(const CovertSpec &spec, std::size_t seeds, std::size_t maxSteps,
                                const DissimilarityOptions &options) {
    spec.validate();
    DetectionReport report;
    report.runs.resize(seeds);
    const auto count = static_cast<std::int64_t>(seeds);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t s = 0; s < count; ++s) {
        CovertSpec cs = spec;
        cs.seed = deriveSeed(spec.seed, {static_cast<std::uint64_t>(s)});
        const auto net = generateCovert(cs);
        auto run = detect(net, iterativeBackbone(net.graph, maxSteps, options));
        run.seed = cs.seed;
        report.runs[static_cast<std::size_t>(s)] = std::move(run);
    }

    std::vector<double> recall, precision;
    std::vector<std::vector<double>> byIteration;
    std::size_t contains = 0;
    for (const auto &run : report.runs) {
        contains += run.finalContainsCorrupt ? 1 : 0;
        for (std::size_t i = 0; i < run.iterations.size(); ++i) {
            const auto &it = run.iterations[i];
            precision.push_back(it.precision);
            if (run.corrupt == 0)
                continue;
            recall.push_back(it.recall);
            if (byIteration.size() <= i)
                byIteration.resize(i + 1);
            byIteration[i].push_back(it.recall);
        }
    }
    if (!recall.empty())
        report.meanRecall = stats::mean(recall);
    if (!precision.empty())
        report.meanPrecision = stats::mean(precision);
    report.recallByIteration = rowMeans(byIteration);
    report.finalContainsCorruptRate = seeds == 0 ? 0.0 : static_cast<double>(contains) / static_cast<double>(seeds);
    return report;
}

double robustnessAuc(std::size_t originalNodes, const BackboneTrace &trace, std::size_t maxSteps) {
    if (originalNodes == 0 || maxSteps == 0)
        return 0.0;
    std::vector<double> f(maxSteps + 1, 0.0);
    f[0] = 1.0;
    for (std::size_t t = 0; t < std::min(maxSteps, trace.steps.size()); ++t) {
        const auto &a = trace.steps[t].active;
        std::size_t retained = 0;
        for (node v = 0; v < a.numberOfNodes(); ++v)
            retained += a.degree(v) > 0 ? 1 : 0;
        f[t + 1] = static_cast<double>(retained) / static_cast<double>(originalNodes);
    }
    double area = 0.0;
    for (std::size_t t = 0; t < maxSteps; ++t)
        area += 0.5 * (f[t] + f[t + 1]);
    return area / static_cast<double>(maxSteps);
}

CovertSpec scaleCovertSpec(const CovertSpec &templ, std::size_t n, std::size_t referenceSize) {
    CovertSpec s = templ;
    s.n = n;
    const double factor = static_cast<double>(referenceSize) / static_cast<double>(n);
    s.pBackground = std::min(1.0, templ.pBackground * factor);
    s.pInterCorrupt = std::min(1.0, templ.pInterCorrupt * factor);
    // Keep corrupt block sizes at the reference-size value.
    const double refBlock = std::max(1.0, templ.corruptFraction * static_cast<double>(referenceSize) /
                                              static_cast<double>(std::max<std::size_t>(1, templ.groups)));
    s.groups = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(static_cast<double>(s.corruptCount()) / refBlock)));
    return s;
}

std::vector<ScalingPoint> scalingBenchmark(const std::vector<std::size_t> &sizes, const CovertSpec &templ,
                                           std::size_t seeds, std::size_t maxSteps,
                                           const DissimilarityOptions &options) {
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1])
            throw ValidationError("scaling sizes must be ascending");
    std::vector<ScalingPoint> out(sizes.size());
    const auto cells = static_cast<std::int64_t>(sizes.size() * seeds);
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        out[i].size = sizes[i];
        out[i].robustness.assign(seeds, 0.0);
        out[i].peakHic.assign(seeds, 0.0);
    }
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < cells; ++c) {
        const auto zi = static_cast<std::size_t>(c) / seeds, si = static_cast<std::size_t>(c) % seeds;
        CovertSpec cs = scaleCovertSpec(templ, sizes[zi]);
        cs.seed = deriveSeed(templ.seed, {sizes[zi], si});
        const auto net = generateCovert(cs);
        const auto trace = iterativeBackbone(net.graph, maxSteps, options);
        out[zi].robustness[si] = robustnessAuc(net.graph.numberOfNodes(), trace, maxSteps);
        double peak = 0.0;
        for (const auto &st : trace.steps)
            peak = std::max(peak, st.hic.hic);
        out[zi].peakHic[si] = peak;
    }
    for (auto &p : out) {
        p.meanRobustness = stats::mean(p.robustness);
        p.meanPeakHic = stats::mean(p.peakHic);
    }
    return out;
}

double firstStepHic(const Graph &g, const DissimilarityOptions &options) {
    if (g.numberOfNodes() < 2 || g.numberOfEdges() == 0)
        return 0.0;
    try {
        return optimalAlpha(g, disparitySignificance(g), 1.0, options).hic.hic;
    } catch (const DissolutionError &) {
        return 0.0;
    }
}

SweepResult partialInfoBenchmark(const CovertSpec &spec, const std::vector<double> &fractions, std::size_t seeds,
                                 const DissimilarityOptions &options) {
    spec.validate();
    for (std::size_t i = 1; i < fractions.size(); ++i)
        if (!(fractions[i] > fractions[i - 1]))
            throw ValidationError("fraction grid must be ascending");
    SweepResult r;
    r.grid = fractions;
    r.values.assign(fractions.size(), std::vector<double>(seeds));
    const auto count = static_cast<std::int64_t>(seeds);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t s = 0; s < count; ++s) {
        CovertSpec cs = spec;
        cs.seed = deriveSeed(spec.seed, {static_cast<std::uint64_t>(s)});
        const auto net = generateCovert(cs);
        const auto parts = growPartial(net, fractions, deriveSeed(cs.seed, {1}));
        for (std::size_t f = 0; f < parts.size(); ++f)
            r.values[f][static_cast<std::size_t>(s)] = firstStepHic(parts[f].graph, options);
    }
    summarize(r);
    return r;
}

} // namespace heronet
