#include <heronet/entropy.hpp>
#include <heronet/metrics.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace heronet {

std::vector<double> DistanceProfile::nodeDistribution(node v) const {
    const auto n = counts.n;
    std::vector<double> p(n, 0.0);
    auto row = counts.row(v);
    const double norm = static_cast<double>(n - 1);
    for (std::size_t k = 0; k < counts.maxDistance; ++k)
        p[k] = row[k] / norm;
    p[n - 1] = row[counts.maxDistance] / norm;
    return p;
}

DistanceProfile distanceProfile(kernels::DistanceCounts counts) {
    const auto n = counts.n;
    if (n < 2)
        throw ValidationError("distance profile needs at least two nodes");
    DistanceProfile out;
    out.diameter = counts.maxDistance;
    // Integer totals keep mu bitwise identical across relabelings.
    std::vector<std::uint64_t> total(counts.columns(), 0);
    for (std::size_t v = 0; v < n; ++v) {
        auto row = counts.row(v);
        for (std::size_t k = 0; k < counts.columns(); ++k)
            total[k] += row[k];
    }
    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
    out.mu.assign(n, 0.0);
    for (std::size_t k = 0; k < counts.maxDistance; ++k)
        out.mu[k] = static_cast<double>(total[k]) / pairs;
    out.mu[n - 1] = static_cast<double>(total[counts.maxDistance]) / pairs;
    if (out.diameter > 0)
        out.nnd = std::clamp(jensenShannonRows(counts) / std::log(static_cast<double>(out.diameter) + 1.0), 0.0, 1.0);
    out.counts = std::move(counts);
    return out;
}

DistanceProfile distanceProfile(const Graph &g) {
    if (g.numberOfNodes() < 2)
        throw ValidationError("distance profile needs at least two nodes");
    return distanceProfile(kernels::distanceCounts(g));
}

double globalEfficiency(const kernels::DistanceCounts &counts) {
    const auto n = counts.n;
    if (n < 2)
        return 0.0;
    double s = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        auto row = counts.row(v);
        for (std::size_t k = 0; k < counts.maxDistance; ++k)
            s += row[k] / static_cast<double>(k + 1);
    }
    return s / (static_cast<double>(n) * static_cast<double>(n - 1));
}

double globalEfficiency(const Graph &g) {
    if (g.numberOfNodes() < 2)
        return 0.0;
    return globalEfficiency(kernels::distanceCounts(g));
}

std::vector<double> localClustering(const Graph &g) {
    const auto n = g.numberOfNodes();
    std::vector<double> c(n, 0.0);
    std::vector<std::uint8_t> mark(n, 0);
    for (node v = 0; v < n; ++v) {
        const auto k = g.degree(v);
        if (k < 2)
            continue;
        for (node u : g.neighbors(v))
            mark[u] = 1;
        std::size_t links = 0;
        for (node u : g.neighbors(v))
            for (node w : g.neighbors(u))
                if (w > u && mark[w])
                    ++links;
        for (node u : g.neighbors(v))
            mark[u] = 0;
        c[v] = 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
    }
    return c;
}

double meanClustering(const Graph &g) {
    const auto c = localClustering(g);
    if (c.empty())
        return 0.0;
    return std::accumulate(c.begin(), c.end(), 0.0) / static_cast<double>(c.size());
}

double modularity(const Graph &g, const std::vector<std::size_t> &community) {
    if (community.size() != g.numberOfNodes())
        throw ValidationError("community assignment size does not match node count");
    const double m = static_cast<double>(g.numberOfEdges());
    if (m == 0.0)
        return 0.0;
    std::map<std::size_t, double> inside, degreeSum;
    for (const auto &e : g.edges())
        if (community[e.u] == community[e.v])
            inside[community[e.u]] += 1.0;
    for (node v = 0; v < g.numberOfNodes(); ++v)
        degreeSum[community[v]] += static_cast<double>(g.degree(v));
    double q = 0.0;
    for (const auto &[c, d] : degreeSum) {
        const double frac = d / (2.0 * m);
        q += inside[c] / m - frac * frac;
    }
    return q;
}

std::vector<std::size_t> detectCommunities(const Graph &g) {
    const auto n = g.numberOfNodes();
    std::vector<std::size_t> label(n);
    std::iota(label.begin(), label.end(), 0);
    const double twoM = 2.0 * static_cast<double>(g.numberOfEdges());
    if (twoM == 0.0)
        return label;
    std::vector<double> tot(n);
    for (node v = 0; v < n; ++v)
        tot[v] = static_cast<double>(g.degree(v));

    std::map<std::size_t, double> links;
    for (int pass = 0; pass < 100; ++pass) {
        bool moved = false;
        for (node v = 0; v < n; ++v) {
            const double k = static_cast<double>(g.degree(v));
            if (k == 0.0)
                continue;
            links.clear();
            for (node u : g.neighbors(v))
                links[label[u]] += 1.0;
            const auto own = label[v];
            tot[own] -= k;
            auto gain = [&](std::size_t c) { return links[c] - tot[c] * k / twoM; };
            std::size_t best = own;
            double bestGain = gain(own);
            for (const auto &[c, _] : links) {
                const double gc = gain(c);
                if (gc > bestGain + 1e-12) {
                    best = c;
                    bestGain = gc;
                }
            }
            tot[best] += k;
            if (best != own) {
                label[v] = best;
                moved = true;
            }
        }
        if (!moved)
            break;
    }
    std::map<std::size_t, std::size_t> relabel;
    for (auto &l : label) {
        auto [it, _] = relabel.try_emplace(l, relabel.size());
        l = it->second;
    }
    return label;
}

MetricBundle structuralMetrics(const Graph &g, const std::optional<std::vector<std::size_t>> &communities) {
    MetricBundle out;
    out.globalEfficiency = globalEfficiency(g);
    out.meanClustering = meanClustering(g);
    if (communities)
        out.modularity = modularity(g, *communities);
    for (node v = 0; v < g.numberOfNodes(); ++v)
        out.degreeSequence.push_back(g.degree(v));
    return out;
}

std::vector<double> edgeBetweenness(const Graph &g) { return kernels::betweenness(g).edge; }

std::vector<double> nodeBetweenness(const Graph &g) { return kernels::betweenness(g).node; }

std::vector<std::vector<node>> components(const Graph &g) {
    const auto n = g.numberOfNodes();
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<std::vector<node>> out;
    for (node s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<node> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (node w : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto &a, const auto &b) { return a.size() > b.size(); });
    return out;
}

std::size_t largestComponentSize(const Graph &g) {
    const auto comps = components(g);
    return comps.empty() ? 0 : comps.front().size();
}

} // namespace heronet
