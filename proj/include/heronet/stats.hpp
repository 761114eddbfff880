#pragma once

#include <span>
#include <vector>

namespace heronet::stats {

double mean(std::span<const double> x);
/// Sample standard deviation (n-1); 0 for fewer than two values.
double stddev(std::span<const double> x);

/// Average ranks (1-based), ties share the mean rank.
std::vector<double> ranks(std::span<const double> x);

double pearson(std::span<const double> x, std::span<const double> y);

struct Correlation {
    double rho = 0.0;
    double pValue = 1.0; ///< two-sided
};

/// Spearman rank correlation. Exact permutation p-value for n <= 8, normal approximation above.
Correlation spearman(std::span<const double> x, std::span<const double> y);

} // namespace heronet::stats
