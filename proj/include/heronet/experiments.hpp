#pragma once

#include <heronet/backbone.hpp>
#include <heronet/generators.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Characterization and benchmark protocols. Every protocol evaluates its
// (grid point, seed) cells in parallel into pre-allocated slots, with per-cell
// seeds derived from (baseSeed, grid index, seed index), so results do not
// depend on scheduling.

namespace heronet {

struct SweepResult {
    std::vector<double> grid;
    std::vector<double> mean;
    std::vector<double> std;
    std::map<std::string, std::vector<double>> auxiliary;
    /// Raw cell values, grid-major: values[g][s].
    std::vector<std::vector<double>> values;
};

/// p-grid 0, step, ..., 1 (inclusive, rounded to avoid drift).
std::vector<double> uniformGrid(double first, double last, double step);

/// Base K_n; per (p, seed): uniform activation, HIC and active/inactive efficiencies.
SweepResult uniformActivationSweep(std::size_t n, const std::vector<double> &pGrid, std::size_t seeds,
                                   std::uint64_t baseSeed, const DissimilarityOptions &options = {});

/// Base graph from `base`; per (gamma, seed): betweenness activation of `activeFraction` of the edges.
SweepResult gammaSweep(const TopologySpec &base, const std::vector<double> &gammaGrid, std::size_t seeds,
                       std::uint64_t baseSeed, double activeFraction = 0.10,
                       const DissimilarityOptions &options = {});

/// Uniform exact-size baseline for the gamma sweep (equal weights).
SweepResult exactFractionBaseline(const TopologySpec &base, std::size_t seeds, std::uint64_t baseSeed,
                                  double activeFraction = 0.10, const DissimilarityOptions &options = {});

enum class RemovalMode { Nodes, Edges };

struct SensitivityRow {
    double hic = 0.0;
    double degreeRobustness = 0.0;
    double betweennessRobustness = 0.0;
    double clustering = 0.0;
    double modularity = 0.0;
    std::size_t removals = 0;

    /// Metric names in report order.
    static const std::vector<std::string> &metricNames();
    std::vector<double> scores() const;
};

/// Removal order for node mode: degree descending, index ascending.
std::vector<node> degreeRemovalOrder(const Graph &g);

/**
 * Sequential targeted removal and per-metric sensitivity
 * (1/T) * sum_t |m_t - m_0| / (|m_0| + 1e-9).
 *
 * Node mode removes ceil(fraction*N) nodes by original degree; edge mode
 * removes ceil(fraction*|E|) edges by original edge betweenness. HIC uses the
 * partition {surviving edges active, removed edges inactive} of the original.
 * Betweenness robustness follows its own adaptive sequence (highest
 * betweenness on the residual graph removed first).
 */
SensitivityRow removalSensitivity(const Graph &g, double fraction = 0.10, RemovalMode mode = RemovalMode::Nodes,
                                  const DissimilarityOptions &options = {});

struct SensitivityTable {
    std::vector<std::string> topologies;
    std::vector<SensitivityRow> rows;
    /// Topologies where HIC has the strictly largest score.
    std::size_t hicRanksFirst() const;
};

SensitivityTable sensitivityComparison(std::size_t n, std::uint64_t seed, double fraction = 0.10,
                                       RemovalMode mode = RemovalMode::Nodes,
                                       const DissimilarityOptions &options = {});

struct IterationDetection {
    double recall = 0.0;    ///< retained corrupt / all corrupt (NaN when there are no corrupt agents)
    double precision = 0.0; ///< retained corrupt / retained
    std::size_t retained = 0;
    std::size_t retainedCorrupt = 0;
    double hic = 0.0;
    double alphaT = 1.0;
};

struct RunDetection {
    std::uint64_t seed = 0;
    std::size_t corrupt = 0;
    std::vector<IterationDetection> iterations;
    StopReason stopReason = StopReason::MaxSteps;
    bool finalContainsCorrupt = false;
};

struct DetectionReport {
    std::vector<RunDetection> runs;
    /// Pooled over every recorded iteration of every run; nullopt without corrupt agents.
    std::optional<double> meanRecall;
    std::optional<double> meanPrecision;
    double finalContainsCorruptRate = 0.0;
    /// Mean recall per iteration index over the runs that reached it.
    std::vector<double> recallByIteration;
};

/// Detection quality of one backbone trace against ground-truth labels.
RunDetection detect(const LabeledNetwork &net, const BackboneTrace &trace);

DetectionReport covertBenchmark(const CovertSpec &spec, std::size_t seeds, std::size_t maxSteps = 50,
                                const DissimilarityOptions &options = {});

/**
 * Area under the retained-node-fraction curve: points (0, 1), (t, n_t/n) for
 * each recorded step, 0 after an early stop; trapezoids over [0, maxSteps]
 * normalized to [0, 1].
 */
double robustnessAuc(std::size_t originalNodes, const BackboneTrace &trace, std::size_t maxSteps);

struct ScalingPoint {
    std::size_t size = 0;
    double meanRobustness = 0.0;
    double meanPeakHic = 0.0;
    std::vector<double> robustness;
    std::vector<double> peakHic;
};

/// Covert template resized to n with expected degrees kept at their reference-size values.
CovertSpec scaleCovertSpec(const CovertSpec &templ, std::size_t n, std::size_t referenceSize = 100);

std::vector<ScalingPoint> scalingBenchmark(const std::vector<std::size_t> &sizes, const CovertSpec &templ,
                                           std::size_t seeds, std::size_t maxSteps = 6,
                                           const DissimilarityOptions &options = {});

/// Peak HIC of the first backbone step (bound 1); 0 for graphs without edges or < 2 nodes.
double firstStepHic(const Graph &g, const DissimilarityOptions &options = {});

/// Per fraction: mean over seeds of the first-step HIC on the nested induced subnetwork.
SweepResult partialInfoBenchmark(const CovertSpec &spec, const std::vector<double> &fractions, std::size_t seeds,
                                 const DissimilarityOptions &options = {});

} // namespace heronet
