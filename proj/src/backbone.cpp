#include <heronet/backbone.hpp>

#include <algorithm>
#include <cmath>

namespace heronet {

double sideSignificance(double weight, double strength, std::size_t degree) {
    if (degree <= 1)
        return 1.0;
    const double p = std::clamp(weight / strength, 0.0, 1.0);
    return std::pow(1.0 - p, static_cast<double>(degree - 1));
}

std::vector<double> disparitySignificance(const Graph &g) {
    std::vector<double> strength(g.numberOfNodes());
    for (node v = 0; v < g.numberOfNodes(); ++v)
        strength[v] = g.strength(v);
    std::vector<double> out(g.numberOfEdges());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto &e = g.edge(static_cast<edge_index>(i));
        out[i] = std::min(sideSignificance(e.weight, strength[e.u], g.degree(e.u)),
                          sideSignificance(e.weight, strength[e.v], g.degree(e.v)));
    }
    return out;
}

EdgePartition splitAtAlpha(const Graph &g, const std::vector<double> &significance, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw ValidationError("alpha must lie in [0,1]");
    if (significance.size() != g.numberOfEdges())
        throw ValidationError("significance size does not match edge count");
    EdgePartition part{g, std::vector<bool>(g.numberOfEdges())};
    for (std::size_t i = 0; i < significance.size(); ++i)
        part.active[i] = significance[i] < alpha;
    return part;
}

std::vector<double> alphaCandidates(const std::vector<double> &significance, double upperBound) {
    std::vector<double> c;
    for (double a : significance)
        if (a <= upperBound)
            c.push_back(a);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.empty())
        return c;
    if (c.back() < upperBound)
        c.push_back(upperBound);
    return c;
}

double winnerFraction(const Graph &g) {
    std::size_t present = 0, winners = 0;
    for (node v = 0; v < g.numberOfNodes(); ++v) {
        if (g.degree(v) == 0)
            continue;
        ++present;
        winners += g.isWinner(v) ? 1 : 0;
    }
    return present == 0 ? 0.0 : static_cast<double>(winners) / static_cast<double>(present);
}

BackboneStep optimalAlpha(const Graph &g, const std::vector<double> &significance, double upperBound,
                          const DissimilarityOptions &options) {
    if (!(upperBound > 0.0 && upperBound <= 1.0))
        throw ValidationError("upper bound must lie in (0,1]");
    if (significance.size() != g.numberOfEdges())
        throw ValidationError("significance size does not match edge count");
    const auto candidates = alphaCandidates(significance, upperBound);
    if (candidates.empty())
        throw DissolutionError("no edge significance at or below the upper bound");

    const HicEvaluator evaluator(g, options);
    std::vector<double> hic(candidates.size(), 0.0);
    const auto count = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
        std::vector<bool> mask(significance.size());
        std::size_t active = 0;
        for (std::size_t e = 0; e < mask.size(); ++e) {
            mask[e] = significance[e] < candidates[static_cast<std::size_t>(i)];
            active += mask[e] ? 1 : 0;
        }
        // Empty or full active sets reproduce the base graph exactly: degenerate.
        if (active == 0 || active == mask.size())
            continue;
        hic[static_cast<std::size_t>(i)] = evaluator.evaluate(mask).hic;
    }

    const double best = *std::max_element(hic.begin(), hic.end());
    std::size_t chosen = 0;
    while (hic[chosen] < best - 1e-12)
        ++chosen;

    BackboneStep step;
    step.alphaT = candidates[chosen];
    step.candidatesEvaluated = candidates.size();
    auto part = splitAtAlpha(g, significance, step.alphaT);
    step.activeMask = part.active;
    step.active = part.activeGraph();
    step.inactive = part.inactiveGraph();
    step.hic = evaluator.evaluate(step.activeMask);
    step.winnerFraction = winnerFraction(step.active);
    step.base = g;
    return step;
}

std::string toString(StopReason r) {
    switch (r) {
    case StopReason::MaxSteps:
        return "max-steps";
    case StopReason::Dissolved:
        return "dissolved";
    case StopReason::NoPositiveHic:
        return "no-positive-hic";
    }
    return "unknown";
}

StopReason stopReasonFromString(const std::string &s) {
    if (s == "max-steps")
        return StopReason::MaxSteps;
    if (s == "dissolved")
        return StopReason::Dissolved;
    if (s == "no-positive-hic")
        return StopReason::NoPositiveHic;
    throw ValidationError("unknown stop reason '" + s + "'");
}

BackboneTrace iterativeBackbone(const Graph &g, std::size_t maxSteps, const DissimilarityOptions &options) {
    if (maxSteps < 1)
        throw ValidationError("max steps must be at least 1");
    BackboneTrace trace;
    Graph current = g;
    double bound = 1.0;
    for (std::size_t s = 0; s < maxSteps; ++s) {
        if (current.numberOfNodes() < 2 || current.numberOfEdges() == 0) {
            trace.stopReason = StopReason::Dissolved;
            return trace;
        }
        BackboneStep step;
        try {
            step = optimalAlpha(current, disparitySignificance(current), bound, options);
        } catch (const DissolutionError &) {
            trace.stopReason = StopReason::Dissolved;
            return trace;
        }
        if (!(step.hic.hic > 0.0)) {
            trace.stopReason = StopReason::NoPositiveHic;
            return trace;
        }
        bound = step.alphaT;
        current = step.active.withoutIsolated();
        trace.steps.push_back(std::move(step));
    }
    trace.stopReason = StopReason::MaxSteps;
    return trace;
}

} // namespace heronet
