#include <heronet/experiments.hpp>
#include <heronet/metrics.hpp>
#include <heronet/random.hpp>
#include <heronet/stats.hpp>
#include <heronet/temporal.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace heronet {

namespace {

Date addMonths(Date d, int months) { return d + std::chrono::months{months}; }

Date firstOfMonth(Date d) { return Date{d.year(), d.month(), std::chrono::day{1}}; }

} // namespace

void WindowSpec::validate() const {
    if (windowMonths < 1 || strideMonths < 1)
        throw ValidationError("window length and stride must be at least one month");
    if (!start.ok() || !end.ok())
        throw ValidationError("window range needs valid dates");
}

WindowSpec windowSpecFor(const std::vector<BidRecord> &records, int windowMonths, int strideMonths) {
    if (records.empty())
        throw ValidationError("no records to derive a window range from");
    const auto [lo, hi] = std::minmax_element(records.begin(), records.end(),
                                              [](const auto &a, const auto &b) { return a.date < b.date; });
    WindowSpec spec;
    spec.windowMonths = windowMonths;
    spec.strideMonths = strideMonths;
    spec.start = firstOfMonth(lo->date);
    spec.end = addMonths(firstOfMonth(hi->date), 1);
    spec.validate();
    return spec;
}

std::vector<DateRange> windows(const WindowSpec &spec) {
    spec.validate();
    std::vector<DateRange> out;
    for (Date b = spec.start; b < spec.end; b = addMonths(b, spec.strideMonths))
        out.push_back(DateRange{b, addMonths(b, spec.windowMonths)});
    return out;
}

std::vector<Graph> windowSeries(const std::vector<BidRecord> &records, const WindowSpec &spec,
                                const std::string &item) {
    std::vector<Graph> out;
    for (const auto &w : windows(spec))
        out.push_back(cobidNetwork(records, item, w));
    return out;
}

std::vector<double> hicSeries(const std::vector<Graph> &graphs, const DissimilarityOptions &options) {
    std::vector<double> out(graphs.size(), 0.0);
    const auto count = static_cast<std::int64_t>(graphs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = firstStepHic(graphs[static_cast<std::size_t>(i)], options);
    return out;
}

std::vector<std::size_t> AnomalySeries::flaggedIndices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i].flagged)
            out.push_back(i);
    return out;
}

AnomalySeries anomalyScores(const std::vector<double> &series, std::size_t trailingK, double threshold) {
    if (trailingK < 2)
        throw ValidationError("trailing window must hold at least two points");
    if (!(threshold > 0.0))
        throw ValidationError("anomaly threshold must be positive");
    AnomalySeries out;
    out.trailingK = trailingK;
    out.threshold = threshold;
    for (std::size_t t = 0; t < series.size(); ++t) {
        AnomalyPoint p;
        p.value = series[t];
        if (t >= trailingK) {
            const std::span<const double> base(series.data() + t - trailingK, trailingK);
            const double m = stats::mean(base), s = stats::stddev(base);
            p.baselineMean = m;
            p.baselineStd = s;
            p.z = s < 1e-12 ? 0.0 : (series[t] - m) / s;
            p.flagged = std::abs(*p.z) > threshold;
        }
        out.points.push_back(p);
    }
    return out;
}

std::map<std::string, std::vector<double>> windowAuxiliary(const std::vector<Graph> &graphs) {
    std::map<std::string, std::vector<double>> aux;
    for (const auto &g : graphs) {
        const double n = static_cast<double>(g.numberOfNodes()), m = static_cast<double>(g.numberOfEdges());
        aux["nodes"].push_back(n);
        aux["edges"].push_back(m);
        aux["density"].push_back(n < 2 ? 0.0 : 2.0 * m / (n * (n - 1.0)));
        aux["clustering"].push_back(meanClustering(g));
        aux["components"].push_back(static_cast<double>(components(g).size()));
    }
    return aux;
}

Graph poissonNullSample(const Graph &g, std::uint64_t totalBiddings, std::uint64_t seed) {
    if (totalBiddings == 0)
        throw ValidationError("total biddings must be positive");
    const auto n = g.numberOfNodes();
    for (node v = 0; v < n; ++v)
        if (g.nodeWeight(v) > totalBiddings)
            throw ValidationError("total biddings below a node weight");
    GraphBuilder b;
    for (node v = 0; v < n; ++v)
        b.addNode(g.id(v), g.nodeWeight(v), g.isWinner(v));
    Rng rng(seed);
    const double nb = static_cast<double>(totalBiddings);
    for (node x = 0; x < n; ++x) {
        const double px = static_cast<double>(g.nodeWeight(x)) / nb;
        for (node y = x + 1; y < n; ++y) {
            const double p = px * static_cast<double>(g.nodeWeight(y)) / nb;
            if (p <= 0.0)
                continue;
            std::binomial_distribution<std::uint64_t> draw(totalBiddings, p);
            if (const auto c = draw(rng); c > 0)
                b.addEdge(x, y, static_cast<double>(c));
        }
    }
    return b.build();
}

NullTestResult poissonNullTest(const Graph &g, std::uint64_t totalBiddings, std::size_t samples, std::uint64_t seed,
                               const DissimilarityOptions &options) {
    if (samples == 0)
        throw ValidationError("null test needs at least one sample");
    bool anyWeight = false;
    for (node v = 0; v < g.numberOfNodes(); ++v)
        anyWeight = anyWeight || g.nodeWeight(v) > 0;
    if (!anyWeight)
        throw ValidationError("null test needs node participation weights");

    NullTestResult r;
    r.realHic = firstStepHic(g, options);
    r.nullHic.assign(samples, 0.0);
    const auto count = static_cast<std::int64_t>(samples);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t s = 0; s < count; ++s) {
        const auto sample = poissonNullSample(g, totalBiddings, deriveSeed(seed, {static_cast<std::uint64_t>(s)}));
        r.nullHic[static_cast<std::size_t>(s)] = firstStepHic(sample, options);
    }
    std::size_t below = 0, above = 0;
    for (double h : r.nullHic) {
        below += h <= r.realHic ? 1 : 0;
        above += h >= r.realHic ? 1 : 0;
    }
    const double b = static_cast<double>(samples);
    const double pLo = (static_cast<double>(below) + 1.0) / (b + 1.0);
    const double pHi = (static_cast<double>(above) + 1.0) / (b + 1.0);
    r.pValue = std::min(1.0, 2.0 * std::min(pLo, pHi));
    r.significant = r.pValue <= 0.05;
    const double m = stats::mean(r.nullHic);
    r.fraction = m > 0.0 ? r.realHic / m : std::numeric_limits<double>::quiet_NaN();
    return r;
}

} // namespace heronet
