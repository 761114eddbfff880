#pragma once

#include <heronet/heron.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace heronet {

/// Raised by optimalAlpha when no edge significance lies at or below the bound.
class DissolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Disparity-filter significance of one endpoint: (1 - w/s)^(k-1); 1 when k <= 1.
double sideSignificance(double weight, double strength, std::size_t degree);

/// Per-edge significance, the minimum of its two endpoint values (lower = more significant).
std::vector<double> disparitySignificance(const Graph &g);

/// Active = edges with significance < alpha, inactive = the rest.
EdgePartition splitAtAlpha(const Graph &g, const std::vector<double> &significance, double alpha);

struct BackboneStep {
    double alphaT = 1.0;
    std::vector<bool> activeMask;
    Graph base;     ///< graph this step was searched on
    Graph active;   ///< G_a at alphaT, full vertex set of base
    Graph inactive; ///< G_i at alphaT
    HicResult hic;
    double winnerFraction = 0.0;
    std::size_t candidatesEvaluated = 0;
};

/// Distinct significance values <= upperBound, ascending, with upperBound appended.
std::vector<double> alphaCandidates(const std::vector<double> &significance, double upperBound);

/**
 * Smallest threshold maximizing HIC over alphaCandidates(significance, upperBound).
 *
 * HIC is piecewise constant in the threshold, so scanning the observed values
 * is exact. Candidates are evaluated in parallel; the result is the smallest
 * candidate whose HIC is within 1e-12 of the maximum, independent of order.
 */
BackboneStep optimalAlpha(const Graph &g, const std::vector<double> &significance, double upperBound,
                          const DissimilarityOptions &options = {});

/// Share of winner-flagged nodes among the non-isolated nodes of g (0 if none).
double winnerFraction(const Graph &g);

enum class StopReason { MaxSteps, Dissolved, NoPositiveHic };

std::string toString(StopReason r);
StopReason stopReasonFromString(const std::string &s);

struct BackboneTrace {
    std::vector<BackboneStep> steps;
    StopReason stopReason = StopReason::MaxSteps;
};

/**
 * Repeated disparity filtering with HIC-optimal thresholds.
 *
 * Step 1 searches the input with bound 1. Each later step keeps the previous
 * active subgraph minus isolated nodes, recomputes significance and searches
 * with the previous alphaT as bound. Stops after maxSteps, when no candidate
 * exists (dissolved), or when the best HIC is zero (that step is not recorded).
 */
BackboneTrace iterativeBackbone(const Graph &g, std::size_t maxSteps = 6, const DissimilarityOptions &options = {});

} // namespace heronet
