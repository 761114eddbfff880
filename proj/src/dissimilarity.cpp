#include <heronet/dissimilarity.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace heronet {

void DissimilarityWeights::validate() const {
    if (w1 < 0.0 || w2 < 0.0 || w3 < 0.0)
        throw ValidationError("dissimilarity weights must be nonnegative");
    if (std::abs(w1 + w2 + w3 - 1.0) > 1e-12)
        throw ValidationError("dissimilarity weights must sum to 1");
}

std::vector<double> alphaCentralityDistribution(const Graph &g, AlphaConvention convention,
                                                kernels::Adjacency which) {
    const auto n = g.numberOfNodes();
    if (n == 0)
        return {};
    const double nn = static_cast<double>(n);
    std::vector<double> exo(n, 1.0 / nn);
    if (convention == AlphaConvention::DegreeExogenous) {
        for (node v = 0; v < n; ++v) {
            double deg = static_cast<double>(g.degree(v));
            if (which == kernels::Adjacency::Complement)
                deg = nn - 1.0 - deg;
            exo[v] = n > 1 ? deg / (nn - 1.0) : 0.0;
        }
    }
    auto x = kernels::alphaCentrality(g, which, 1.0 / nn, exo);
    if (convention == AlphaConvention::UniformNormalized) {
        double s = 0.0;
        for (double xi : x)
            s += xi;
        for (auto &xi : x)
            xi /= s;
        std::sort(x.begin(), x.end(), std::greater<>());
        return x;
    }
    double s = 0.0;
    for (auto &xi : x) {
        xi /= nn * nn;
        s += xi;
    }
    std::sort(x.begin(), x.end(), std::greater<>());
    x.push_back(std::max(0.0, 1.0 - s));
    return x;
}

double nnd(const DistanceProfile &profile) { return profile.nnd; }

GraphSignature signature(const Graph &g, const DistanceProfile &profile, const DissimilarityOptions &options) {
    GraphSignature s;
    s.n = g.numberOfNodes();
    s.mu = profile.mu;
    s.nnd = profile.nnd;
    if (options.weights.w3 > 0.0) {
        s.alpha = alphaCentralityDistribution(g, options.convention, kernels::Adjacency::Graph);
        s.alphaComplement = alphaCentralityDistribution(g, options.convention, kernels::Adjacency::Complement);
    }
    return s;
}

GraphSignature signature(const Graph &g, const DissimilarityOptions &options) {
    return signature(g, distanceProfile(g), options);
}

namespace {

double normalizedRoot(std::span<const double> p, std::span<const double> q) {
    const double js = jensenShannon(p, q) / std::numbers::ln2;
    return std::sqrt(std::clamp(js, 0.0, 1.0));
}

} // namespace

DissimilarityResult dissimilarity(const GraphSignature &a, const GraphSignature &b, const DissimilarityWeights &w) {
    w.validate();
    DissimilarityResult r;
    if (w.w1 > 0.0)
        r.term1 = w.w1 * normalizedRoot(a.mu, b.mu);
    if (w.w2 > 0.0)
        r.term2 = w.w2 * std::abs(std::sqrt(a.nnd) - std::sqrt(b.nnd));
    if (w.w3 > 0.0) {
        if (a.alpha.empty() || b.alpha.empty())
            throw ValidationError("signature lacks centrality data required by w3 > 0");
        r.term3 = w.w3 / 2.0 *
                  (normalizedRoot(a.alpha, b.alpha) + normalizedRoot(a.alphaComplement, b.alphaComplement));
    }
    r.value = r.term1 + r.term2 + r.term3;
    return r;
}

DissimilarityResult dissimilarity(const Graph &a, const Graph &b, const DissimilarityOptions &options) {
    options.weights.validate();
    return dissimilarity(signature(a, options), signature(b, options), options.weights);
}

} // namespace heronet
