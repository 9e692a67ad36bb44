#pragma once

#include <cstdint>

#include "edgewave/mask.hpp"
#include "edgewave/spectral.hpp"

namespace edgewave {

enum class SamplingStrategy { random, greedy_lowfreq };

struct SamplingSpec {
    SamplingStrategy strategy = SamplingStrategy::random;
    double fraction = 1.0;       // observed share of edges, in (0, 1]
    int bandwidth = 1;           // K, greedy only
    std::uint64_t seed = 0;      // random only
};

// round(fraction * n_edges), the observed-edge budget shared by both
// strategies. Rejects fractions outside (0, 1] and budgets below 1.
int mask_budget(double fraction, int n_edges);

// Uniform sample of exactly mask_budget(...) observed edges, drawn without
// replacement from the stream seeded by spec.seed. Callers draw a fresh mask
// (fresh seed) per experiment run.
Mask random_mask(int n_edges, const SamplingSpec& spec);

// Greedy E-optimal sampling against the K lowest-frequency basis columns:
// grow the observed set by the edge maximizing the smallest eigenvalue of
// U_K^T M U_K, ties to the lowest edge index, until the budget is reached.
// Deterministic. Requires spec.bandwidth <= budget.
Mask greedy_lowfreq_mask(const GftBasis& basis, const SamplingSpec& spec);

}  // namespace edgewave
