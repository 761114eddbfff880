#include <heronet/kernels.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace heronet::kernels {

namespace {

constexpr std::size_t kSourceBlock = 32;

DistanceCounts assemble(std::size_t n, const std::vector<std::vector<std::uint32_t>> &levels,
                        const std::vector<std::uint32_t> &reached) {
    DistanceCounts out;
    out.n = n;
    out.maxDistance = levels.size();
    out.counts.assign(n * out.columns(), 0);
    for (std::size_t v = 0; v < n; ++v) {
        auto *row = out.counts.data() + v * out.columns();
        for (std::size_t k = 0; k < levels.size(); ++k)
            row[k] = levels[k][v];
        row[out.maxDistance] = static_cast<std::uint32_t>(n - 1 - reached[v]);
    }
    return out;
}

// Accumulates the dependency of `source` into node/edge scores (both endpoints ordered).
void brandesFromSource(const Graph &g, node source, std::vector<double> &nodeScore,
                       std::vector<double> &edgeScore, std::vector<std::int64_t> &dist,
                       std::vector<double> &sigma, std::vector<double> &delta,
                       std::vector<node> &order) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();

    dist[source] = 0;
    sigma[source] = 1.0;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const node v = order[head];
        for (node w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                order.push_back(w);
            }
            if (dist[w] == dist[v] + 1)
                sigma[w] += sigma[v];
        }
    }
    for (std::size_t i = order.size(); i-- > 1;) {
        const node w = order[i];
        auto nb = g.neighbors(w);
        auto inc = g.incidentEdges(w);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            const node v = nb[k];
            if (dist[v] == dist[w] - 1) {
                const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
                edgeScore[inc[k]] += c;
                delta[v] += c;
            }
        }
        nodeScore[w] += delta[w];
    }
}

} // namespace

int threadCount() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace reference {

DistanceCounts distanceCounts(const Graph &g) {
    const auto n = g.numberOfNodes();
    std::vector<std::vector<std::uint32_t>> levels;
    std::vector<std::uint32_t> reached(n, 0);
    std::vector<std::int64_t> dist(n);
    std::vector<node> queue;
    for (node s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.assign(1, s);
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const node v = queue[head];
            for (node w : g.neighbors(v)) {
                if (dist[w] >= 0)
                    continue;
                dist[w] = dist[v] + 1;
                queue.push_back(w);
                const auto d = static_cast<std::size_t>(dist[w]);
                if (levels.size() < d)
                    levels.resize(d, std::vector<std::uint32_t>(n, 0));
                ++levels[d - 1][s];
            }
        }
        reached[s] = static_cast<std::uint32_t>(queue.size() - 1);
    }
    return assemble(n, levels, reached);
}

Betweenness betweenness(const Graph &g) {
    const auto n = g.numberOfNodes();
    Betweenness out{std::vector<double>(n, 0.0), std::vector<double>(g.numberOfEdges(), 0.0)};
    std::vector<std::int64_t> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<node> order;
    for (node s = 0; s < n; ++s)
        brandesFromSource(g, s, out.node, out.edge, dist, sigma, delta, order);
    for (auto &x : out.node)
        x *= 0.5;
    for (auto &x : out.edge)
        x *= 0.5;
    return out;
}

std::vector<double> alphaCentrality(const Graph &g, Adjacency which, double attenuation,
                                    std::span<const double> exo) {
    const auto n = static_cast<Eigen::Index>(g.numberOfNodes());
    if (static_cast<std::size_t>(n) != exo.size())
        throw ValidationError("exogenous vector size mismatch");
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
    for (Eigen::Index u = 0; u < n; ++u)
        for (Eigen::Index v = 0; v < n; ++v) {
            if (u == v)
                continue;
            const bool adjacent = g.hasEdge(static_cast<node>(u), static_cast<node>(v));
            if (adjacent == (which == Adjacency::Graph))
                m(u, v) -= attenuation;
        }
    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; ++i)
        b(i) = exo[static_cast<std::size_t>(i)];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    if (!lu.isInvertible())
        throw std::runtime_error("alpha centrality system is singular");
    Eigen::VectorXd x = lu.solve(b);
    return {x.data(), x.data() + n};
}

} // namespace reference

DistanceCounts distanceCounts(const Graph &g) {
    const auto n = g.numberOfNodes();
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> cur(n * words, 0), next(n * words, 0);
    std::vector<std::uint32_t> reached(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        cur[v * words + v / 64] = std::uint64_t{1} << (v % 64);

    std::vector<std::vector<std::uint32_t>> levels;
    const auto sn = static_cast<std::int64_t>(n);
    while (true) {
        std::vector<std::uint32_t> fresh(n, 0);
        std::int64_t changed = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : changed)
        for (std::int64_t iv = 0; iv < sn; ++iv) {
            const auto v = static_cast<node>(iv);
            std::uint64_t *dst = next.data() + v * words;
            const std::uint64_t *own = cur.data() + v * words;
            std::copy(own, own + words, dst);
            for (node u : g.neighbors(v)) {
                const std::uint64_t *src = cur.data() + u * words;
                for (std::size_t w = 0; w < words; ++w)
                    dst[w] |= src[w];
            }
            std::uint32_t total = 0;
            for (std::size_t w = 0; w < words; ++w)
                total += static_cast<std::uint32_t>(std::popcount(dst[w]));
            // popcount includes v itself
            fresh[v] = total - 1 - reached[v];
            reached[v] = total - 1;
            changed += fresh[v] > 0 ? 1 : 0;
        }
        if (changed == 0)
            break;
        levels.push_back(std::move(fresh));
        cur.swap(next);
    }
    return assemble(n, levels, reached);
}

Betweenness betweenness(const Graph &g) {
    const auto n = g.numberOfNodes();
    const auto m = g.numberOfEdges();
    const std::size_t blocks = (n + kSourceBlock - 1) / kSourceBlock;
    std::vector<std::vector<double>> nodePart(blocks), edgePart(blocks);
    const auto sb = static_cast<std::int64_t>(blocks);
#pragma omp parallel
    {
        std::vector<std::int64_t> dist(n);
        std::vector<double> sigma(n), delta(n);
        std::vector<node> order;
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t b = 0; b < sb; ++b) {
            auto &np = nodePart[static_cast<std::size_t>(b)];
            auto &ep = edgePart[static_cast<std::size_t>(b)];
            np.assign(n, 0.0);
            ep.assign(m, 0.0);
            const auto first = static_cast<std::size_t>(b) * kSourceBlock;
            const auto last = std::min(n, first + kSourceBlock);
            for (auto s = first; s < last; ++s)
                brandesFromSource(g, static_cast<node>(s), np, ep, dist, sigma, delta, order);
        }
    }
    Betweenness out{std::vector<double>(n, 0.0), std::vector<double>(m, 0.0)};
    for (std::size_t b = 0; b < blocks; ++b) {
        for (std::size_t v = 0; v < n; ++v)
            out.node[v] += nodePart[b][v];
        for (std::size_t e = 0; e < m; ++e)
            out.edge[e] += edgePart[b][e];
    }
    for (auto &x : out.node)
        x *= 0.5;
    for (auto &x : out.edge)
        x *= 0.5;
    return out;
}

std::vector<double> alphaCentrality(const Graph &g, Adjacency which, double attenuation,
                                    std::span<const double> exo) {
    const auto n = g.numberOfNodes();
    if (n != exo.size())
        throw ValidationError("exogenous vector size mismatch");
    if (n == 0)
        return {};

    auto apply = [&](const std::vector<double> &x, std::vector<double> &y) {
        double total = 0.0;
        if (which == Adjacency::Complement)
            for (double xi : x)
                total += xi;
        for (node v = 0; v < n; ++v) {
            double ax = 0.0;
            for (node u : g.neighbors(v))
                ax += x[u];
            if (which == Adjacency::Complement)
                ax = total - x[v] - ax;
            y[v] = x[v] - attenuation * ax;
        }
    };
    auto dot = [](const std::vector<double> &a, const std::vector<double> &b) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            s += a[i] * b[i];
        return s;
    };

    std::vector<double> x(exo.begin(), exo.end());
    std::vector<double> r(n), p(n), ap(n);
    apply(x, ap);
    for (std::size_t i = 0; i < n; ++i)
        r[i] = exo[i] - ap[i];
    p = r;
    const double bnorm = std::sqrt(std::max(dot(x, x), std::numeric_limits<double>::min()));
    double rr = dot(r, r);
    const std::size_t maxIter = 4 * n + 100;
    double best = std::sqrt(rr);
    std::size_t stalled = 0;
    for (std::size_t it = 0; it < maxIter && std::sqrt(rr) > 1e-15 * bnorm && stalled < 8; ++it) {
        apply(p, ap);
        const double pap = dot(p, ap);
        if (!(pap > 0.0))
            throw std::runtime_error("alpha centrality system is not positive definite");
        const double step = rr / pap;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += step * p[i];
            r[i] -= step * ap[i];
        }
        const double rrNew = dot(r, r);
        if (std::sqrt(rrNew) < best) {
            best = std::sqrt(rrNew);
            stalled = 0;
        } else {
            ++stalled;
        }
        const double beta = rrNew / rr;
        rr = rrNew;
        for (std::size_t i = 0; i < n; ++i)
            p[i] = r[i] + beta * p[i];
    }
    if (best > 1e-10 * bnorm)
        throw std::runtime_error("alpha centrality solve did not converge");
    return x;
}

} // namespace heronet::kernels
