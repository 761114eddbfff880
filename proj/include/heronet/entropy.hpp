#pragma once

#include <heronet/kernels.hpp>

#include <span>
#include <vector>

namespace heronet {

/// Shannon entropy in nats with 0·log 0 = 0.
double entropy(std::span<const double> p);

/**
 * Jensen-Shannon divergence (nats) of two or more probability vectors.
 *
 * Shorter vectors are zero-padded to the longest. Each vector must sum to 1
 * within 1e-9 (ValidationError otherwise). Evaluated as the mean
 * Kullback-Leibler divergence to the mixture, which equals H(mean) - mean(H)
 * but does not cancel catastrophically for nearly identical inputs.
 */
double jensenShannon(const std::vector<std::vector<double>> &distributions);
double jensenShannon(std::span<const double> p, std::span<const double> q);

/// JSD across the per-node rows of a distance histogram (rows normalized by N-1).
double jensenShannonRows(const kernels::DistanceCounts &counts);

} // namespace heronet
