#include <heronet/generators.hpp>
#include <heronet/random.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace heronet {

std::string toString(TopologyModel m) {
    switch (m) {
    case TopologyModel::Complete:
        return "complete";
    case TopologyModel::ErdosRenyi:
        return "er";
    case TopologyModel::BarabasiAlbert:
        return "barabasi-albert";
    case TopologyModel::WattsStrogatz:
        return "watts-strogatz";
    case TopologyModel::PlantedPartition:
        return "planted-partition";
    case TopologyModel::HubAndSpoke:
        return "hub-and-spoke";
    }
    return "unknown";
}

TopologyModel topologyModelFromString(const std::string &s) {
    for (auto m : {TopologyModel::Complete, TopologyModel::ErdosRenyi, TopologyModel::BarabasiAlbert,
                   TopologyModel::WattsStrogatz, TopologyModel::PlantedPartition, TopologyModel::HubAndSpoke})
        if (toString(m) == s)
            return m;
    if (s == "ba")
        return TopologyModel::BarabasiAlbert;
    if (s == "ws")
        return TopologyModel::WattsStrogatz;
    throw ValidationError("unknown topology model '" + s + "'");
}

namespace {

bool isProbability(double p) { return p >= 0.0 && p <= 1.0; }

} // namespace

void TopologySpec::validate() const {
    if (!isProbability(p) || !isProbability(beta) || !isProbability(pIn) || !isProbability(pOut) ||
        !isProbability(pPeripheral))
        throw ValidationError("topology probabilities must lie in [0,1]");
    switch (model) {
    case TopologyModel::BarabasiAlbert:
        if (m < 1 || n < m + 1)
            throw ValidationError("barabasi-albert needs m >= 1 and n > m");
        break;
    case TopologyModel::WattsStrogatz:
        if (k % 2 != 0 || k < 2 || k >= n)
            throw ValidationError("watts-strogatz needs an even k with 2 <= k < n");
        break;
    case TopologyModel::PlantedPartition:
        if (blocks < 1 || blocks > n)
            throw ValidationError("planted partition needs 1 <= blocks <= n");
        break;
    case TopologyModel::HubAndSpoke:
        if (n < 2)
            throw ValidationError("hub-and-spoke needs at least two nodes");
        break;
    default:
        break;
    }
}

Graph generateTopology(const TopologySpec &spec) {
    spec.validate();
    const auto n = spec.n;
    GraphBuilder b(n);
    Rng rng(spec.seed);
    switch (spec.model) {
    case TopologyModel::Complete:
        for (node u = 0; u < n; ++u)
            for (node v = u + 1; v < n; ++v)
                b.addEdge(u, v);
        break;
    case TopologyModel::ErdosRenyi:
        for (node u = 0; u < n; ++u)
            for (node v = u + 1; v < n; ++v)
                if (bernoulli(rng, spec.p))
                    b.addEdge(u, v);
        break;
    case TopologyModel::BarabasiAlbert: {
        // Seed clique on m+1 nodes, then m preferential targets per new node.
        std::vector<node> stubs;
        for (node u = 0; u <= spec.m; ++u)
            for (node v = u + 1; v <= spec.m; ++v) {
                b.addEdge(u, v);
                stubs.push_back(u);
                stubs.push_back(v);
            }
        for (auto v = static_cast<node>(spec.m + 1); v < n; ++v) {
            std::set<node> targets;
            while (targets.size() < spec.m)
                targets.insert(stubs[rng() % stubs.size()]);
            for (node t : targets) {
                b.addEdge(v, t);
                stubs.push_back(v);
                stubs.push_back(t);
            }
        }
        break;
    }
    case TopologyModel::WattsStrogatz: {
        std::set<std::pair<node, node>> edges;
        auto key = [](node a, node c) { return std::make_pair(std::min(a, c), std::max(a, c)); };
        for (node u = 0; u < n; ++u)
            for (std::size_t j = 1; j <= spec.k / 2; ++j)
                edges.insert(key(u, static_cast<node>((u + j) % n)));
        for (node u = 0; u < n; ++u)
            for (std::size_t j = 1; j <= spec.k / 2; ++j) {
                const auto v = static_cast<node>((u + j) % n);
                if (!bernoulli(rng, spec.beta) || !edges.count(key(u, v)))
                    continue;
                if (edges.size() >= n * (n - 1) / 2)
                    continue;
                node w;
                do {
                    w = static_cast<node>(rng() % n);
                } while (w == u || edges.count(key(u, w)));
                edges.erase(key(u, v));
                edges.insert(key(u, w));
            }
        for (const auto &[u, v] : edges)
            b.addEdge(u, v);
        break;
    }
    case TopologyModel::PlantedPartition: {
        auto block = [&](node v) { return v * spec.blocks / n; };
        for (node u = 0; u < n; ++u)
            for (node v = u + 1; v < n; ++v)
                if (bernoulli(rng, block(u) == block(v) ? spec.pIn : spec.pOut))
                    b.addEdge(u, v);
        break;
    }
    case TopologyModel::HubAndSpoke:
        for (node v = 1; v < n; ++v)
            b.addEdge(0, v);
        for (node u = 1; u < n; ++u)
            for (node v = u + 1; v < n; ++v)
                if (bernoulli(rng, spec.pPeripheral))
                    b.addEdge(u, v);
        break;
    }
    return b.build();
}

std::vector<TopologySpec> benchmarkTopologies(std::size_t n, std::uint64_t seed) {
    std::vector<TopologySpec> out;
    for (auto model : {TopologyModel::BarabasiAlbert, TopologyModel::WattsStrogatz, TopologyModel::ErdosRenyi,
                       TopologyModel::PlantedPartition, TopologyModel::HubAndSpoke}) {
        TopologySpec s;
        s.model = model;
        s.n = n;
        s.seed = deriveSeed(seed, {static_cast<std::uint64_t>(model)});
        out.push_back(s);
    }
    return out;
}

void CovertSpec::validate() const {
    if (!(corruptFraction >= 0.0 && corruptFraction < 1.0))
        throw ValidationError("corrupt fraction must lie in [0,1)");
    if (!isProbability(pIntraCorrupt) || !isProbability(pInterCorrupt) || !isProbability(pBackground) ||
        !isProbability(weightP) || !isProbability(winRateCorrupt) || !isProbability(winRateHonest))
        throw ValidationError("covert densities and rates must lie in [0,1]");
    if (weightTrials < 1 || weightP <= 0.0)
        throw ValidationError("edge weights need weightTrials >= 1 and weightP > 0");
    if (groups < 1)
        throw ValidationError("covert generator needs at least one corrupt group");
    if (n < 2)
        throw ValidationError("covert generator needs at least two agents");
}

std::size_t CovertSpec::corruptCount() const {
    return static_cast<std::size_t>(std::llround(corruptFraction * static_cast<double>(n)));
}

LabeledNetwork generateCovert(const CovertSpec &spec) {
    spec.validate();
    const auto n = spec.n;
    Rng rng(spec.seed);

    std::vector<node> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto nc = spec.corruptCount();
    const auto groups = std::max<std::size_t>(1, std::min(spec.groups, nc));
    // group id per node, -1 for honest
    std::vector<std::int64_t> group(n, -1);
    std::vector<std::vector<node>> members(groups);
    for (std::size_t i = 0; i < nc; ++i) {
        const auto g = i * groups / nc;
        group[order[i]] = static_cast<std::int64_t>(g);
        members[g].push_back(order[i]);
    }
    std::vector<std::uint8_t> leader(n, 0);
    for (auto &m : members) {
        std::sort(m.begin(), m.end());
        for (std::size_t i = 0; i < std::min(spec.hierarchyLevels, m.size()); ++i)
            leader[m[i]] = 1;
    }

    std::binomial_distribution<std::uint32_t> weightDist(spec.weightTrials, spec.weightP);
    auto drawWeight = [&] {
        std::uint32_t w = 0;
        while (w == 0)
            w = weightDist(rng);
        return static_cast<double>(w);
    };

    GraphBuilder b(n);
    for (node u = 0; u < n; ++u)
        for (node v = u + 1; v < n; ++v) {
            double p;
            if (group[u] < 0 && group[v] < 0)
                p = spec.pBackground;
            else if (group[u] >= 0 && group[u] == group[v])
                p = (leader[u] || leader[v]) ? 1.0 : spec.pIntraCorrupt;
            else
                p = spec.pInterCorrupt;
            if (bernoulli(rng, p))
                b.addEdge(u, v, drawWeight());
        }
    LabeledNetwork out;
    out.corrupt.assign(n, false);
    for (node v = 0; v < n; ++v)
        out.corrupt[v] = group[v] >= 0;
    for (node v = 0; v < n; ++v)
        b.setWinner(v, bernoulli(rng, out.corrupt[v] ? spec.winRateCorrupt : spec.winRateHonest));
    Graph provisional = b.build();
    for (node v = 0; v < n; ++v)
        b.setNodeWeight(v, static_cast<std::uint64_t>(std::llround(provisional.strength(v))));
    out.graph = b.build();
    return out;
}

std::vector<LabeledNetwork> growPartial(const LabeledNetwork &net, const std::vector<double> &fractions,
                                        std::uint64_t seed) {
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        if (!(fractions[i] > 0.0 && fractions[i] <= 1.0))
            throw ValidationError("growth fractions must lie in (0,1]");
        if (i > 0 && !(fractions[i] > fractions[i - 1]))
            throw ValidationError("growth fractions must be strictly ascending");
    }
    const auto n = net.graph.numberOfNodes();
    std::vector<node> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<LabeledNetwork> out;
    for (double f : fractions) {
        const auto keep = std::clamp<std::size_t>(
            static_cast<std::size_t>(std::llround(f * static_cast<double>(n))), 1, n);
        std::vector<node> subset(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep));
        std::sort(subset.begin(), subset.end());
        LabeledNetwork sub;
        sub.graph = net.graph.induced(subset);
        for (node v : subset)
            sub.corrupt.push_back(net.corrupt[v]);
        out.push_back(std::move(sub));
    }
    return out;
}

} // namespace heronet
