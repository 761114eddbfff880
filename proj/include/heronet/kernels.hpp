#pragma once

#include <heronet/graph.hpp>

#include <cstdint>
#include <span>
#include <vector>

// Hot loops shared by the dissimilarity, backbone and experiment layers.
//
// Every kernel has a straightforward serial version in `reference` that the
// tests and the benchmark compare against. The default versions are
// OpenMP-parallel and produce bit-identical results regardless of thread
// count: integer outputs trivially, floating-point outputs through fixed-size
// blocks reduced in index order.

namespace heronet::kernels {

/**
 * Per-source hop-distance histogram on the unweighted skeleton.
 *
 * Row v has `maxDistance + 1` columns: column k-1 counts nodes at distance k
 * (k = 1..maxDistance), the last column counts nodes unreachable from v.
 * maxDistance is the largest finite distance in the graph (0 if edgeless).
 */
struct DistanceCounts {
    std::size_t n = 0;
    std::size_t maxDistance = 0;
    std::vector<std::uint32_t> counts;

    std::size_t columns() const { return maxDistance + 1; }
    std::span<const std::uint32_t> row(std::size_t v) const {
        return {counts.data() + v * columns(), columns()};
    }
    std::uint32_t unreachable(std::size_t v) const { return row(v)[maxDistance]; }

    friend bool operator==(const DistanceCounts &, const DistanceCounts &) = default;
};

struct Betweenness {
    std::vector<double> node;
    std::vector<double> edge; ///< indexed like Graph::edges()
};

/// Linear operator selector for the α-centrality solve.
enum class Adjacency { Graph, Complement };

namespace reference {

/// One breadth-first search per source.
DistanceCounts distanceCounts(const Graph &g);

/// Brandes accumulation, sources in index order. Unordered-pair convention.
Betweenness betweenness(const Graph &g);

/// Dense LU solve of (I - attenuation*A) x = exo.
std::vector<double> alphaCentrality(const Graph &g, Adjacency which, double attenuation,
                                    std::span<const double> exo);

} // namespace reference

/// Bitset frontier expansion; each level ORs neighbor reach sets for all sources at once.
DistanceCounts distanceCounts(const Graph &g);

/// Brandes with sources split into fixed blocks and a block-ordered reduction.
Betweenness betweenness(const Graph &g);

/**
 * Matrix-free conjugate gradient for (I - attenuation*A) x = exo.
 *
 * The complement operator is applied as (sum(x) - x_v - (A x)_v) so the dense
 * complement is never materialized. Requires attenuation * spectral radius < 1;
 * throws std::runtime_error if the iteration fails to converge.
 */
std::vector<double> alphaCentrality(const Graph &g, Adjacency which, double attenuation,
                                    std::span<const double> exo);

/// Number of OpenMP threads the kernels will use (1 without OpenMP).
int threadCount();

} // namespace heronet::kernels
