#pragma once

#include <heronet/dissimilarity.hpp>
#include <heronet/ingest.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace heronet {

struct WindowSpec {
    int windowMonths = 3;
    int strideMonths = 3;
    Date start{};
    /// Exclusive; windows start at start, start+stride, ... while before end.
    Date end{};

    void validate() const;
};

/// Window spec from the first of the earliest record's month to the first of the month after the latest.
WindowSpec windowSpecFor(const std::vector<BidRecord> &records, int windowMonths = 3, int strideMonths = 3);

/// Half-open [begin, begin + windowMonths) per window.
std::vector<DateRange> windows(const WindowSpec &spec);

std::vector<Graph> windowSeries(const std::vector<BidRecord> &records, const WindowSpec &spec,
                                const std::string &item = {});

/// Per graph: HIC at the optimal threshold of one backbone step (bound 1); 0 below 2 nodes or without edges.
std::vector<double> hicSeries(const std::vector<Graph> &graphs, const DissimilarityOptions &options = {});

struct AnomalyPoint {
    double value = 0.0;
    std::optional<double> baselineMean;
    std::optional<double> baselineStd;
    std::optional<double> z; ///< unset for the first trailingK points
    bool flagged = false;
};

struct AnomalySeries {
    std::size_t trailingK = 4;
    double threshold = 1.96;
    std::vector<AnomalyPoint> points;
    /// nodes, edges, density, clustering, components per window (when built from graphs).
    std::map<std::string, std::vector<double>> auxiliary;

    std::vector<std::size_t> flaggedIndices() const;
};

/**
 * Trailing z-scores z_t = (x_t - mean)/std over x_{t-k..t-1} (sample std).
 * A baseline std below 1e-12 gives z = 0.
 */
AnomalySeries anomalyScores(const std::vector<double> &series, std::size_t trailingK = 4, double threshold = 1.96);

/// Auxiliary per-window structure series for an AnomalySeries.
std::map<std::string, std::vector<double>> windowAuxiliary(const std::vector<Graph> &graphs);

struct NullTestResult {
    double realHic = 0.0;
    std::vector<double> nullHic;
    double fraction = 0.0; ///< realHic / mean(nullHic); NaN when the null mean is 0
    double pValue = 1.0;
    bool significant = false;
};

/**
 * One draw of the participation null: for each node pair, co-bid count
 * ~ Binomial(totalBiddings, (n_x/N_b)(n_y/N_b)) with n_x the node weights.
 * Vertex set and attributes are those of g.
 */
Graph poissonNullSample(const Graph &g, std::uint64_t totalBiddings, std::uint64_t seed);

/**
 * Compares the single-step HIC of g with `samples` null draws. Two-sided
 * Monte Carlo p-value min(1, 2*min(r_lo+1, r_hi+1)/(B+1)); significant iff p <= 0.05.
 */
NullTestResult poissonNullTest(const Graph &g, std::uint64_t totalBiddings, std::size_t samples = 200,
                               std::uint64_t seed = 0, const DissimilarityOptions &options = {});

} // namespace heronet
