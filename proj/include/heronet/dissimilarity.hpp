#pragma once

#include <heronet/entropy.hpp>
#include <heronet/graph.hpp>
#include <heronet/metrics.hpp>

#include <vector>

namespace heronet {

/// Term weights of the D measure. Must be nonnegative and sum to 1.
struct DissimilarityWeights {
    double w1 = 0.45;
    double w2 = 0.45;
    double w3 = 0.10;

    void validate() const;
    /// Distance-only configuration, independent of the α-centrality convention.
    static DissimilarityWeights withoutCentrality() { return {0.5, 0.5, 0.0}; }
};

/**
 * How α-centrality is turned into a probability vector.
 *
 * UniformNormalized: x = (1/N) A x + 1/N, normalized to sum 1.
 * DegreeExogenous: x = (1/N) A x + deg/(N-1), scaled by 1/N^2, with the
 * leftover mass 1 - sum(x) appended as an extra bin.
 * Both are returned sorted in descending order.
 */
enum class AlphaConvention { UniformNormalized, DegreeExogenous };

struct DissimilarityOptions {
    DissimilarityWeights weights;
    AlphaConvention convention = AlphaConvention::UniformNormalized;
};

std::vector<double> alphaCentralityDistribution(const Graph &g,
                                                AlphaConvention convention = AlphaConvention::UniformNormalized,
                                                kernels::Adjacency which = kernels::Adjacency::Graph);

/// Everything D needs from one graph; compute once, compare many times.
struct GraphSignature {
    std::size_t n = 0;
    std::vector<double> mu;
    double nnd = 0.0;
    std::vector<double> alpha;           ///< empty when centrality is not needed
    std::vector<double> alphaComplement; ///< same, for the complement graph
};

GraphSignature signature(const Graph &g, const DissimilarityOptions &options = {});
GraphSignature signature(const Graph &g, const DistanceProfile &profile, const DissimilarityOptions &options);

/// Node dispersion of a profile (JSD of per-node distributions over ln(d+1)).
double nnd(const DistanceProfile &profile);

struct DissimilarityResult {
    double value = 0.0;
    double term1 = 0.0;
    double term2 = 0.0;
    double term3 = 0.0;
};

DissimilarityResult dissimilarity(const GraphSignature &a, const GraphSignature &b,
                                  const DissimilarityWeights &w = {});
DissimilarityResult dissimilarity(const Graph &a, const Graph &b, const DissimilarityOptions &options = {});

} // namespace heronet
