#include <heronet/graph.hpp>
#include <heronet/stats.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace heronet::stats {

double mean(std::span<const double> x) {
    if (x.empty())
        return 0.0;
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double stddev(std::span<const double> x) {
    if (x.size() < 2)
        return 0.0;
    const double m = mean(x);
    double s = 0.0;
    for (double v : x)
        s += (v - m) * (v - m);
    return std::sqrt(s / static_cast<double>(x.size() - 1));
}

std::vector<double> ranks(std::span<const double> x) {
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return x[a] < x[b]; });
    std::vector<double> r(x.size());
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j + 1 < idx.size() && x[idx[j + 1]] == x[idx[i]])
            ++j;
        const double avg = (static_cast<double>(i + j) / 2.0) + 1.0;
        for (auto k = i; k <= j; ++k)
            r[idx[k]] = avg;
        i = j + 1;
    }
    return r;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw ValidationError("correlation inputs differ in length");
    const double mx = mean(x), my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0)
        return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

Correlation spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw ValidationError("spearman needs two equally long series of length >= 2");
    const auto rx = ranks(x), ry = ranks(y);
    Correlation c;
    c.rho = pearson(rx, ry);
    const auto n = x.size();
    if (n <= 8) {
        std::vector<double> perm = ry;
        std::sort(perm.begin(), perm.end());
        std::size_t extreme = 0, total = 0;
        do {
            ++total;
            if (std::abs(pearson(rx, perm)) >= std::abs(c.rho) - 1e-12)
                ++extreme;
        } while (std::next_permutation(perm.begin(), perm.end()));
        c.pValue = static_cast<double>(extreme) / static_cast<double>(total);
    } else {
        const double z = std::abs(c.rho) * std::sqrt(static_cast<double>(n - 1));
        c.pValue = std::erfc(z / std::sqrt(2.0));
    }
    return c;
}

} // namespace heronet::stats
