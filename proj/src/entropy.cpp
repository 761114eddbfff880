#include <heronet/entropy.hpp>
#include <heronet/graph.hpp>

#include <algorithm>
#include <cmath>

namespace heronet {

double entropy(std::span<const double> p) {
    double h = 0.0;
    for (double x : p)
        if (x > 0.0)
            h -= x * std::log(x);
    return h;
}

namespace {

void checkNormalized(std::span<const double> p) {
    double s = 0.0;
    for (double x : p) {
        if (!(x >= 0.0))
            throw ValidationError("probability vector has a negative or NaN entry");
        s += x;
    }
    if (std::abs(s - 1.0) > 1e-9)
        throw ValidationError("probability vector does not sum to 1");
}

} // namespace

double jensenShannon(const std::vector<std::vector<double>> &distributions) {
    if (distributions.size() < 2)
        throw ValidationError("Jensen-Shannon divergence needs at least two distributions");
    std::size_t len = 0;
    for (const auto &p : distributions) {
        checkNormalized(p);
        len = std::max(len, p.size());
    }
    const double k = static_cast<double>(distributions.size());
    std::vector<double> mix(len, 0.0);
    for (const auto &p : distributions)
        for (std::size_t i = 0; i < p.size(); ++i)
            mix[i] += p[i];
    for (auto &m : mix)
        m /= k;
    double js = 0.0;
    for (const auto &p : distributions)
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] > 0.0)
                js += p[i] * std::log(p[i] / mix[i]);
    return std::max(0.0, js / k);
}

double jensenShannon(std::span<const double> p, std::span<const double> q) {
    checkNormalized(p);
    checkNormalized(q);
    // Per-bin terms are added pairwise so that swapping p and q is bit-exact.
    const auto len = std::max(p.size(), q.size());
    double js = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        const double a = i < p.size() ? p[i] : 0.0;
        const double b = i < q.size() ? q[i] : 0.0;
        const double m = 0.5 * (a + b);
        if (m == 0.0)
            continue;
        // log1p of the relative offset keeps near-identical bins from cancelling.
        const double x = 0.5 * (a - b) / m;
        const double ta = a > 0.0 ? a * std::log1p(x) : 0.0;
        const double tb = b > 0.0 ? b * std::log1p(-x) : 0.0;
        js += ta + tb;
    }
    return std::max(0.0, 0.5 * js);
}

double jensenShannonRows(const kernels::DistanceCounts &counts) {
    const auto n = counts.n;
    if (n < 2)
        return 0.0;
    const auto cols = counts.columns();
    std::vector<std::uint64_t> total(cols, 0);
    for (std::size_t v = 0; v < n; ++v) {
        auto row = counts.row(v);
        for (std::size_t k = 0; k < cols; ++k)
            total[k] += row[k];
    }
    // p_vk / m_k = count_vk * N / total_k
    const double nn = static_cast<double>(n);
    const double norm = static_cast<double>(n - 1);
    double js = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        auto row = counts.row(v);
        for (std::size_t k = 0; k < cols; ++k)
            if (row[k] > 0)
                js += static_cast<double>(row[k]) / norm *
                      std::log(static_cast<double>(row[k]) * nn / static_cast<double>(total[k]));
    }
    return std::max(0.0, js / nn);
}

} // namespace heronet
