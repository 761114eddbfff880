#pragma once

#include <heronet/graph.hpp>
#include <heronet/kernels.hpp>

#include <optional>
#include <vector>

namespace heronet {

/**
 * Shortest-path distance distributions of a graph (hop counts).
 *
 * Node v's distribution has N bins: distances 1..N-1 followed by an
 * "unreachable" bin, each count divided by N-1. `mu` is their mean,
 * `diameter` the largest finite distance and `nnd` the node dispersion.
 */
struct DistanceProfile {
    kernels::DistanceCounts counts;
    std::vector<double> mu;
    std::size_t diameter = 0;
    double nnd = 0.0;

    std::size_t numberOfNodes() const { return counts.n; }
    /// Full-length (N bins) distribution for node v.
    std::vector<double> nodeDistribution(node v) const;
};

/// Throws ValidationError when the graph has fewer than two nodes.
DistanceProfile distanceProfile(const Graph &g);
/// Same, from precomputed counts.
DistanceProfile distanceProfile(kernels::DistanceCounts counts);

struct MetricBundle {
    double globalEfficiency = 0.0;
    double meanClustering = 0.0;
    std::optional<double> modularity;
    std::vector<std::size_t> degreeSequence;
};

/// Mean of 1/d over ordered pairs, unreachable pairs counting 0.
double globalEfficiency(const Graph &g);
double globalEfficiency(const kernels::DistanceCounts &counts);

/// Local clustering per node; nodes of degree < 2 get 0.
std::vector<double> localClustering(const Graph &g);
double meanClustering(const Graph &g);

/// Newman modularity of an unweighted graph for the given community labels.
double modularity(const Graph &g, const std::vector<std::size_t> &community);

/// Deterministic greedy local-moving community assignment (node-index order).
std::vector<std::size_t> detectCommunities(const Graph &g);

MetricBundle structuralMetrics(const Graph &g,
                               const std::optional<std::vector<std::size_t>> &communities = {});

/// Unweighted shortest-path edge betweenness, unordered pairs, fractional splitting.
std::vector<double> edgeBetweenness(const Graph &g);
/// Node betweenness with the same conventions.
std::vector<double> nodeBetweenness(const Graph &g);

/// Connected components sorted by size descending (ties: smallest member first).
std::vector<std::vector<node>> components(const Graph &g);

/// Size of the largest connected component (0 for the empty graph).
std::size_t largestComponentSize(const Graph &g);

} // namespace heronet
