#include <heronet/heron.hpp>
#include <heronet/random.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace heronet {

HeronValue heronCoefficientChecked(double d12, double d13, double d23) {
    if (d12 < 0.0 || d13 < 0.0 || d23 < 0.0)
        throw ValidationError("Heron coefficient requires nonnegative distances");
    const double p = (d12 + d13 + d23) / 2.0;
    if (p == 0.0)
        return {};
    const double a = p - d12, b = p - d13, c = p - d23;
    const double radicand = 3.0 * p * a * b * c;
    HeronValue out;
    if (radicand <= 0.0) {
        out.clamped = std::min({a, b, c}) < -1e-9;
        return out;
    }
    out.value = std::min(1.0, 3.0 * std::sqrt(radicand) / (p * p));
    return out;
}

double heronCoefficient(double d12, double d13, double d23) {
    return heronCoefficientChecked(d12, d13, d23).value;
}

Graph EdgePartition::activeGraph() const { return base.withEdges(active); }

Graph EdgePartition::inactiveGraph() const {
    std::vector<bool> inactive(active.size());
    for (std::size_t i = 0; i < active.size(); ++i)
        inactive[i] = !active[i];
    return base.withEdges(inactive);
}

std::size_t EdgePartition::activeCount() const {
    return static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
}

HicEvaluator::HicEvaluator(const Graph &base, DissimilarityOptions options)
    : base_(&base), options_(options) {
    options_.weights.validate();
    if (base.numberOfNodes() < 2)
        throw ValidationError("HIC needs a base graph with at least two nodes");
    baseSignature_ = signature(base, options_);
}

HicResult HicEvaluator::evaluate(const std::vector<bool> &activeMask) const {
    std::vector<bool> inactive(activeMask.size());
    for (std::size_t i = 0; i < activeMask.size(); ++i)
        inactive[i] = !activeMask[i];
    const auto active = base_->withEdges(activeMask);
    const auto passive = base_->withEdges(inactive);
    auto activeCounts = kernels::distanceCounts(active);
    auto passiveCounts = kernels::distanceCounts(passive);
    HicResult r;
    r.activeEfficiency = globalEfficiency(activeCounts);
    r.inactiveEfficiency = globalEfficiency(passiveCounts);
    const auto sa = signature(active, distanceProfile(std::move(activeCounts)), options_);
    const auto si = signature(passive, distanceProfile(std::move(passiveCounts)), options_);
    r.baseActive = dissimilarity(baseSignature_, sa, options_.weights).value;
    r.baseInactive = dissimilarity(baseSignature_, si, options_.weights).value;
    r.activeInactive = dissimilarity(sa, si, options_.weights).value;
    const auto h = heronCoefficientChecked(r.baseActive, r.baseInactive, r.activeInactive);
    r.hic = h.value;
    r.clamped = h.clamped;
    return r;
}

HicResult hicOfPartition(const EdgePartition &part, const DissimilarityOptions &options) {
    return HicEvaluator(part.base, options).evaluate(part.active);
}

void ActivationConfig::validate() const {
    if (!(p >= 0.0 && p <= 1.0))
        throw ValidationError("activation probability must lie in [0,1]");
    if (!(activeFraction > 0.0 && activeFraction < 1.0))
        throw ValidationError("active fraction must lie in (0,1)");
    if (!std::isfinite(gamma))
        throw ValidationError("gamma must be finite");
}

EdgePartition activate(const Graph &g, const ActivationConfig &cfg, const std::vector<double> &betweenness) {
    cfg.validate();
    const auto m = g.numberOfEdges();
    EdgePartition part{g, std::vector<bool>(m, false)};
    Rng rng(cfg.seed);
    if (cfg.mode == ActivationMode::Uniform) {
        for (std::size_t e = 0; e < m; ++e)
            part.active[e] = bernoulli(rng, cfg.p);
        return part;
    }

    if (betweenness.size() != m)
        throw ValidationError("betweenness vector size does not match edge count");
    double minPositive = std::numeric_limits<double>::infinity();
    for (double b : betweenness)
        if (b > 0.0)
            minPositive = std::min(minPositive, std::pow(b, cfg.gamma));
    if (!std::isfinite(minPositive))
        throw ValidationError("betweenness activation needs an edge with positive betweenness");

    std::vector<double> weight(m);
    for (std::size_t e = 0; e < m; ++e) {
        if (betweenness[e] > 0.0)
            weight[e] = std::pow(betweenness[e], cfg.gamma);
        else
            weight[e] = cfg.gamma < 0.0 ? minPositive : (cfg.gamma == 0.0 ? 1.0 : 0.0);
    }
    const auto target = static_cast<std::size_t>(std::ceil(cfg.activeFraction * static_cast<double>(m) - 1e-9));

    // Efraimidis-Spirakis: keep the `target` largest log(u)/w keys.
    std::vector<std::pair<double, std::size_t>> keys(m);
    for (std::size_t e = 0; e < m; ++e) {
        const double u = 1.0 - uniform01(rng); // (0,1]
        const double key = weight[e] > 0.0 ? std::log(u) / weight[e] : -std::numeric_limits<double>::infinity();
        keys[e] = {key, e};
    }
    std::sort(keys.begin(), keys.end(), [](const auto &a, const auto &b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (std::size_t i = 0; i < std::min(target, m); ++i)
        part.active[keys[i].second] = true;
    return part;
}

EdgePartition activate(const Graph &g, const ActivationConfig &cfg) {
    if (cfg.mode == ActivationMode::Betweenness)
        return activate(g, cfg, edgeBetweenness(g));
    return activate(g, cfg, {});
}

} // namespace heronet
