#pragma once

#include <heronet/dissimilarity.hpp>
#include <heronet/graph.hpp>

#include <cstdint>
#include <vector>

namespace heronet {

struct HeronValue {
    double value = 0.0;
    /// Set when the three sides violate the triangle inequality by more than 1e-9.
    bool clamped = false;
};

/**
 * Area of the triangle with sides (d12, d13, d23) relative to the equilateral
 * triangle of the same perimeter: 3*sqrt(3P(P-d12)(P-d13)(P-d23))/P^2 with
 * semi-perimeter P. Zero perimeter gives 0. A negative radicand is clamped to 0.
 */
HeronValue heronCoefficientChecked(double d12, double d13, double d23);
double heronCoefficient(double d12, double d13, double d23);

/// Split of a base graph's edges into active and inactive sets over the shared vertex set.
struct EdgePartition {
    Graph base;
    std::vector<bool> active; ///< indexed like base.edges()

    Graph activeGraph() const;
    Graph inactiveGraph() const;
    std::size_t activeCount() const;
};

struct HicResult {
    double baseActive = 0.0;     ///< D(G, G_a)
    double baseInactive = 0.0;   ///< D(G, G_i)
    double activeInactive = 0.0; ///< D(G_a, G_i)
    double hic = 0.0;
    bool clamped = false;
    double activeEfficiency = 0.0;
    double inactiveEfficiency = 0.0;
};

/// Evaluates HIC for many partitions of one base graph, reusing the base signature.
class HicEvaluator {
public:
    explicit HicEvaluator(const Graph &base, DissimilarityOptions options = {});

    HicResult evaluate(const std::vector<bool> &activeMask) const;
    const Graph &base() const { return *base_; }

private:
    const Graph *base_;
    DissimilarityOptions options_;
    GraphSignature baseSignature_;
};

HicResult hicOfPartition(const EdgePartition &part, const DissimilarityOptions &options = {});

enum class ActivationMode { Uniform, Betweenness };

struct ActivationConfig {
    ActivationMode mode = ActivationMode::Uniform;
    double p = 0.5;
    double gamma = 0.0;
    double activeFraction = 0.10;
    std::uint64_t seed = 0;

    void validate() const;
};

/**
 * Uniform mode: each edge active independently with probability p.
 * Betweenness mode: exactly ceil(activeFraction*|E|) edges drawn without
 * replacement with inclusion weights b_e^gamma (Efraimidis-Spirakis keys).
 */
EdgePartition activate(const Graph &g, const ActivationConfig &cfg);

/// Same, with precomputed edge betweenness (for sweeps over seeds).
EdgePartition activate(const Graph &g, const ActivationConfig &cfg, const std::vector<double> &edgeBetweenness);

} // namespace heronet
