#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace heronet {

using node = std::uint32_t;
using edge_index = std::uint32_t;

/// Thrown for any input that violates a documented precondition.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    node u;
    node v;
    double weight;

    friend bool operator==(const Edge &, const Edge &) = default;
};

/**
 * Immutable weighted undirected simple graph.
 *
 * Nodes are dense indices 0..N-1 carrying an opaque string id, a participation
 * weight and a winner flag. Edges are stored once with u < v, sorted
 * lexicographically, and mirrored into a CSR adjacency. Subgraph helpers keep
 * or drop vertices explicitly so that partitions can share a vertex set.
 */
class Graph {
public:
    Graph() = default;

    std::size_t numberOfNodes() const { return ids_.size(); }
    std::size_t numberOfEdges() const { return edges_.size(); }

    const std::string &id(node v) const { return ids_[v]; }
    const std::vector<std::string> &ids() const { return ids_; }
    std::uint64_t nodeWeight(node v) const { return nodeWeight_[v]; }
    bool isWinner(node v) const { return winner_[v] != 0; }

    std::span<const Edge> edges() const { return edges_; }
    const Edge &edge(edge_index e) const { return edges_[e]; }

    std::size_t degree(node v) const { return offsets_[v + 1] - offsets_[v]; }
    double strength(node v) const;

    /// Neighbors of v in ascending order.
    std::span<const node> neighbors(node v) const {
        return {adjacency_.data() + offsets_[v], degree(v)};
    }
    /// Edge indices parallel to neighbors(v).
    std::span<const edge_index> incidentEdges(node v) const {
        return {adjacencyEdge_.data() + offsets_[v], degree(v)};
    }

    bool hasEdge(node u, node v) const;
    /// Index of the edge {u,v}, or numberOfEdges() when absent.
    edge_index findEdge(node u, node v) const;

    /// Same vertex set, only the edges whose mask entry is true.
    Graph withEdges(const std::vector<bool> &keep) const;
    /// Induced subgraph on `nodes` (kept in the given order).
    Graph induced(std::span<const node> nodes) const;
    /// Drops vertices of degree zero, preserving relative order.
    Graph withoutIsolated() const;

    /// Map from original node to position in `withoutIsolated()`, -1 if dropped.
    std::vector<std::int64_t> nonIsolatedIndex() const;

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.ids_ == b.ids_ && a.nodeWeight_ == b.nodeWeight_ && a.winner_ == b.winner_ &&
               a.edges_ == b.edges_;
    }

private:
    friend class GraphBuilder;

    void finalize();

    std::vector<std::string> ids_;
    std::vector<std::uint64_t> nodeWeight_;
    std::vector<std::uint8_t> winner_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<node> adjacency_;
    std::vector<edge_index> adjacencyEdge_;
};

/**
 * Accumulates nodes and edges, then produces a Graph.
 *
 * Parallel edges aggregate by weight sum. Self-loops and non-positive or
 * non-finite weights are rejected with ValidationError.
 */
class GraphBuilder {
public:
    GraphBuilder() = default;
    /// Pre-creates nodes named "0".."n-1".
    explicit GraphBuilder(std::size_t n);

    /// Returns the index of `id`, creating the node if needed.
    node addNode(const std::string &id);
    node addNode(const std::string &id, std::uint64_t weight, bool winner);
    void setNodeWeight(node v, std::uint64_t weight);
    void setWinner(node v, bool winner);

    void addEdge(node u, node v, double weight = 1.0);
    void addEdge(const std::string &u, const std::string &v, double weight = 1.0);

    std::size_t numberOfNodes() const { return ids_.size(); }

    Graph build() const;

private:
    std::vector<std::string> ids_;
    std::vector<std::uint64_t> nodeWeight_;
    std::vector<std::uint8_t> winner_;
    std::unordered_map<std::string, node> index_;
    std::vector<Edge> pending_;
};

struct EdgeRecord {
    std::string u;
    std::string v;
    double weight = 1.0;
};

struct NodeAttributes {
    std::string id;
    std::uint64_t weight = 0;
    bool winner = false;
};

/// Node attributes first (so isolated nodes are retained), then edges.
Graph buildGraph(std::span<const EdgeRecord> edges, std::span<const NodeAttributes> nodes = {});

/// Edge (u,v) present iff absent in g, weight 1; vertex set and attributes preserved.
Graph complement(const Graph &g);

/// Complete graph K_n with unit weights.
Graph completeGraph(std::size_t n);

} // namespace heronet
