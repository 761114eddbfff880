#pragma once

#include <heronet/graph.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace heronet {

enum class TopologyModel { Complete, ErdosRenyi, BarabasiAlbert, WattsStrogatz, PlantedPartition, HubAndSpoke };

std::string toString(TopologyModel m);
TopologyModel topologyModelFromString(const std::string &s);

struct TopologySpec {
    TopologyModel model = TopologyModel::ErdosRenyi;
    std::size_t n = 100;
    double p = 0.1;             ///< Erdos-Renyi edge probability
    std::size_t m = 2;          ///< Barabasi-Albert edges per new node
    std::size_t k = 4;          ///< Watts-Strogatz ring degree (even)
    double beta = 0.1;          ///< Watts-Strogatz rewiring probability
    std::size_t blocks = 4;     ///< planted partition
    double pIn = 0.3;
    double pOut = 0.01;
    double pPeripheral = 0.02;  ///< hub-and-spoke leaf-leaf probability
    std::uint64_t seed = 0;

    void validate() const;
};

/// Deterministic per seed; node ids are "0".."n-1".
Graph generateTopology(const TopologySpec &spec);

/// The five benchmark topologies used by the removal-sensitivity comparison.
std::vector<TopologySpec> benchmarkTopologies(std::size_t n, std::uint64_t seed);

struct CovertSpec {
    std::size_t n = 100;
    double corruptFraction = 0.10;
    std::size_t groups = 2;
    std::size_t hierarchyLevels = 1;
    double pIntraCorrupt = 0.8;
    double pInterCorrupt = 0.1;
    double pBackground = 0.05;
    std::uint32_t weightTrials = 10;
    double weightP = 0.3;
    double winRateCorrupt = 0.9;
    double winRateHonest = 0.3;
    std::uint64_t seed = 0;

    void validate() const;
    std::size_t corruptCount() const;
};

struct LabeledNetwork {
    Graph graph;
    std::vector<bool> corrupt;
};

/**
 * Covert procurement network: corrupt agents split into dense blocks, each
 * block with `hierarchyLevels` leaders tied to every member; honest agents
 * wired at pBackground; corrupt-honest and cross-block corrupt pairs at
 * pInterCorrupt. Edge weights are Binomial(weightTrials, weightP) redrawn
 * until positive; node weight is the node's strength.
 */
LabeledNetwork generateCovert(const CovertSpec &spec);

/**
 * Nested induced subnetworks along one seeded node order. `fractions` must be
 * ascending in (0,1]; entry i keeps round(fractions[i]*n) nodes (at least 1).
 */
std::vector<LabeledNetwork> growPartial(const LabeledNetwork &net, const std::vector<double> &fractions,
                                        std::uint64_t seed);

} // namespace heronet
