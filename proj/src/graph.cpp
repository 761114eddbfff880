#include <heronet/graph.hpp>

#include <algorithm>
#include <cmath>

namespace heronet {

double Graph::strength(node v) const {
    double s = 0.0;
    for (auto e : incidentEdges(v))
        s += edges_[e].weight;
    return s;
}

bool Graph::hasEdge(node u, node v) const { return findEdge(u, v) != edges_.size(); }

edge_index Graph::findEdge(node u, node v) const {
    if (u >= numberOfNodes() || v >= numberOfNodes())
        return static_cast<edge_index>(edges_.size());
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v)
        return static_cast<edge_index>(edges_.size());
    return incidentEdges(u)[static_cast<std::size_t>(it - nb.begin())];
}

void Graph::finalize() {
    std::sort(edges_.begin(), edges_.end(), [](const Edge &a, const Edge &b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    const auto n = ids_.size();
    std::vector<std::size_t> deg(n, 0);
    for (const auto &e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v)
        offsets_[v + 1] = offsets_[v] + deg[v];
    adjacency_.assign(offsets_[n], 0);
    adjacencyEdge_.assign(offsets_[n], 0);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (edge_index i = 0; i < edges_.size(); ++i) {
        const auto &e = edges_[i];
        adjacency_[cursor[e.u]] = e.v;
        adjacencyEdge_[cursor[e.u]++] = i;
        adjacency_[cursor[e.v]] = e.u;
        adjacencyEdge_[cursor[e.v]++] = i;
    }
    // Edges are sorted by (u,v); neighbor lists still need sorting for the v<u half.
    for (std::size_t v = 0; v < n; ++v) {
        const auto b = offsets_[v], f = offsets_[v + 1];
        std::vector<std::pair<node, edge_index>> tmp;
        tmp.reserve(f - b);
        for (auto k = b; k < f; ++k)
            tmp.emplace_back(adjacency_[k], adjacencyEdge_[k]);
        std::sort(tmp.begin(), tmp.end());
        for (auto k = b; k < f; ++k) {
            adjacency_[k] = tmp[k - b].first;
            adjacencyEdge_[k] = tmp[k - b].second;
        }
    }
}

Graph Graph::withEdges(const std::vector<bool> &keep) const {
    if (keep.size() != edges_.size())
        throw ValidationError("edge mask size does not match edge count");
    Graph out;
    out.ids_ = ids_;
    out.nodeWeight_ = nodeWeight_;
    out.winner_ = winner_;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (keep[i])
            out.edges_.push_back(edges_[i]);
    out.finalize();
    return out;
}

Graph Graph::induced(std::span<const node> nodes) const {
    std::vector<std::int64_t> pos(numberOfNodes(), -1);
    Graph out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const node v = nodes[i];
        if (v >= numberOfNodes() || pos[v] >= 0)
            throw ValidationError("induced: invalid or repeated node");
        pos[v] = static_cast<std::int64_t>(i);
        out.ids_.push_back(ids_[v]);
        out.nodeWeight_.push_back(nodeWeight_[v]);
        out.winner_.push_back(winner_[v]);
    }
    for (const auto &e : edges_) {
        if (pos[e.u] < 0 || pos[e.v] < 0)
            continue;
        auto a = static_cast<node>(pos[e.u]), b = static_cast<node>(pos[e.v]);
        if (a > b)
            std::swap(a, b);
        out.edges_.push_back({a, b, e.weight});
    }
    out.finalize();
    return out;
}

std::vector<std::int64_t> Graph::nonIsolatedIndex() const {
    std::vector<std::int64_t> pos(numberOfNodes(), -1);
    std::int64_t next = 0;
    for (node v = 0; v < numberOfNodes(); ++v)
        if (degree(v) > 0)
            pos[v] = next++;
    return pos;
}

Graph Graph::withoutIsolated() const {
    std::vector<node> keep;
    for (node v = 0; v < numberOfNodes(); ++v)
        if (degree(v) > 0)
            keep.push_back(v);
    return induced(keep);
}

GraphBuilder::GraphBuilder(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        addNode(std::to_string(i));
}

node GraphBuilder::addNode(const std::string &id) {
    if (id.empty())
        throw ValidationError("node identifiers must be nonempty");
    auto [it, inserted] = index_.try_emplace(id, static_cast<node>(ids_.size()));
    if (inserted) {
        ids_.push_back(id);
        nodeWeight_.push_back(0);
        winner_.push_back(0);
    }
    return it->second;
}

node GraphBuilder::addNode(const std::string &id, std::uint64_t weight, bool winner) {
    const node v = addNode(id);
    nodeWeight_[v] = weight;
    winner_[v] = winner ? 1 : 0;
    return v;
}

void GraphBuilder::setNodeWeight(node v, std::uint64_t weight) { nodeWeight_.at(v) = weight; }

void GraphBuilder::setWinner(node v, bool winner) { winner_.at(v) = winner ? 1 : 0; }

void GraphBuilder::addEdge(node u, node v, double weight) {
    if (u >= ids_.size() || v >= ids_.size())
        throw ValidationError("edge references unknown node");
    if (u == v)
        throw ValidationError("self-loop on node '" + ids_[u] + "'");
    if (!std::isfinite(weight) || weight <= 0.0)
        throw ValidationError("edge weight must be finite and positive");
    if (u > v)
        std::swap(u, v);
    pending_.push_back({u, v, weight});
}

void GraphBuilder::addEdge(const std::string &u, const std::string &v, double weight) {
    if (u == v)
        throw ValidationError("self-loop on node '" + u + "'");
    addEdge(addNode(u), addNode(v), weight);
}

Graph GraphBuilder::build() const {
    auto edges = pending_;
    std::sort(edges.begin(), edges.end(), [](const Edge &a, const Edge &b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    Graph g;
    g.ids_ = ids_;
    g.nodeWeight_ = nodeWeight_;
    g.winner_ = winner_;
    for (const auto &e : edges) {
        if (!g.edges_.empty() && g.edges_.back().u == e.u && g.edges_.back().v == e.v)
            g.edges_.back().weight += e.weight;
        else
            g.edges_.push_back(e);
    }
    g.finalize();
    return g;
}

Graph buildGraph(std::span<const EdgeRecord> edges, std::span<const NodeAttributes> nodes) {
    GraphBuilder b;
    for (const auto &a : nodes)
        b.addNode(a.id, a.weight, a.winner);
    for (const auto &e : edges)
        b.addEdge(e.u, e.v, e.weight);
    return b.build();
}

Graph complement(const Graph &g) {
    GraphBuilder b;
    const auto n = g.numberOfNodes();
    for (node v = 0; v < n; ++v)
        b.addNode(g.id(v), g.nodeWeight(v), g.isWinner(v));
    for (node u = 0; u < n; ++u) {
        auto nb = g.neighbors(u);
        std::size_t k = 0;
        for (node v = u + 1; v < n; ++v) {
            while (k < nb.size() && nb[k] < v)
                ++k;
            if (k < nb.size() && nb[k] == v)
                continue;
            b.addEdge(u, v, 1.0);
        }
    }
    return b.build();
}

Graph completeGraph(std::size_t n) {
    GraphBuilder b(n);
    for (node u = 0; u < n; ++u)
        for (node v = u + 1; v < n; ++v)
            b.addEdge(u, v);
    return b.build();
}

} // namespace heronet
