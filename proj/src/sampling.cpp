#include "edgewave/sampling.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgewave/rng.hpp"

namespace edgewave {

int mask_budget(double fraction, int n_edges) {
    if (!(fraction > 0.0 && fraction <= 1.0)) {
        throw std::invalid_argument("mask_budget: fraction must lie in (0, 1]");
    }
    if (n_edges < 1) {
        throw std::invalid_argument("mask_budget: need at least one edge");
    }
    const int budget = static_cast<int>(std::lround(fraction * n_edges));
    if (budget < 1) {
        throw std::invalid_argument("mask_budget: fraction " + std::to_string(fraction) +
                                    " of " + std::to_string(n_edges) +
                                    " edges rounds to zero observed");
    }
    return budget;
}

Mask random_mask(int n_edges, const SamplingSpec& spec) {
    if (spec.strategy != SamplingStrategy::random) {
        throw std::invalid_argument("random_mask: spec strategy is not 'random'");
    }
    const int budget = mask_budget(spec.fraction, n_edges);

    // Partial Fisher-Yates: the first `budget` slots end up as a uniform
    // sample without replacement.
    std::vector<int> indices(static_cast<std::size_t>(n_edges));
    std::iota(indices.begin(), indices.end(), 0);
    SeededRng rng(spec.seed);
    for (int j = 0; j < budget; ++j) {
        const int k = j + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n_edges - j)));
        std::swap(indices[static_cast<std::size_t>(j)], indices[static_cast<std::size_t>(k)]);
    }

    Mask m;
    m.observed.assign(static_cast<std::size_t>(n_edges), 0);
    for (int j = 0; j < budget; ++j) {
        m.observed[static_cast<std::size_t>(indices[static_cast<std::size_t>(j)])] = 1;
    }
    return m;
}

Mask greedy_lowfreq_mask(const GftBasis& basis, const SamplingSpec& spec) {
    if (spec.strategy != SamplingStrategy::greedy_lowfreq) {
        throw std::invalid_argument("greedy_lowfreq_mask: spec strategy is not 'greedy-lowfreq'");
    }
    const int n = basis.size();
    const int budget = mask_budget(spec.fraction, n);
    const int k = spec.bandwidth;
    if (k < 1 || k > n) {
        throw std::invalid_argument("greedy_lowfreq_mask: bandwidth " + std::to_string(k) +
                                    " out of range [1, " + std::to_string(n) + "]");
    }
    if (k > budget) {
        throw std::invalid_argument("greedy_lowfreq_mask: bandwidth " + std::to_string(k) +
                                    " exceeds budget " + std::to_string(budget) +
                                    "; the sampled frame could never reach full rank");
    }

    const Eigen::MatrixXd u_k = basis.vectors().leftCols(k);

    std::vector<std::uint8_t> selected(static_cast<std::size_t>(n), 0);
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(k, k);  // U_K^T M_S U_K

    // Scores within tie_eps count as equal so the lowest index wins even
    // when mathematically tied candidates differ by eigensolver roundoff.
    constexpr double tie_eps = 1e-12;

    for (int step = 0; step < budget; ++step) {
        int best_index = -1;
        double best_score = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            if (selected[static_cast<std::size_t>(i)]) continue;
            const Eigen::MatrixXd candidate =
                gram + u_k.row(i).transpose() * u_k.row(i);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(candidate,
                                                                  Eigen::EigenvaluesOnly);
            const double score = solver.eigenvalues().minCoeff();
            if (score > best_score + tie_eps) {
                best_score = score;
                best_index = i;
            }
        }
        selected[static_cast<std::size_t>(best_index)] = 1;
        gram += u_k.row(best_index).transpose() * u_k.row(best_index);
    }

    Mask m;
    m.observed = std::move(selected);
    return m;
}

}  // namespace edgewave
