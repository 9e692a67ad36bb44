#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "edgewave/sampling.hpp"
#include "edgewave/spectral.hpp"
#include "test_util.hpp"

using edgewave::gft_basis;
using edgewave::GftBasis;
using edgewave::greedy_lowfreq_mask;
using edgewave::laplacian;
using edgewave::line_graph;
using edgewave::Mask;
using edgewave::mask_budget;
using edgewave::random_mask;
using edgewave::SamplingSpec;
using edgewave::SamplingStrategy;

namespace {

SamplingSpec random_spec(double fraction, std::uint64_t seed) {
    SamplingSpec s;
    s.strategy = SamplingStrategy::random;
    s.fraction = fraction;
    s.seed = seed;
    return s;
}

SamplingSpec greedy_spec(double fraction, int bandwidth) {
    SamplingSpec s;
    s.strategy = SamplingStrategy::greedy_lowfreq;
    s.fraction = fraction;
    s.bandwidth = bandwidth;
    return s;
}

GftBasis dual_basis(const edgewave::Graph& g) {
    return gft_basis(laplacian(line_graph(g).graph).cast<double>());
}

// Smallest eigenvalue of U_K^T M U_K for an observed set.
double frame_lambda_min(const GftBasis& basis, const Mask& m, int k) {
    Eigen::MatrixXd frame = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < basis.size(); ++i) {
        if (m.observed[static_cast<std::size_t>(i)]) {
            frame += basis.vectors().row(i).head(k).transpose() *
                     basis.vectors().row(i).head(k);
        }
    }
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(frame, Eigen::EigenvaluesOnly)
        .eigenvalues()
        .minCoeff();
}

}  // namespace

TEST_CASE("mask budget rounding") {
    CHECK(mask_budget(1.0, 10) == 10);
    CHECK(mask_budget(2.0 / 3.0, 38) == 25);
    CHECK(mask_budget(0.5, 3) == 2);  // round half away from zero
    CHECK_THROWS_AS(mask_budget(0.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(mask_budget(1.2, 10), std::invalid_argument);
    CHECK_THROWS_AS(mask_budget(-0.5, 10), std::invalid_argument);
    CHECK_THROWS_AS(mask_budget(0.01, 10), std::invalid_argument);  // rounds to zero
    CHECK_THROWS_AS(mask_budget(0.5, 0), std::invalid_argument);
}

TEST_CASE("random mask counts and determinism") {
    const Mask full = random_mask(12, random_spec(1.0, 3));
    CHECK(full.observed_count() == 12);
    CHECK(full.all_observed());

    const Mask two_thirds = random_mask(38, random_spec(2.0 / 3.0, 17));
    CHECK(two_thirds.size() == 38);
    CHECK(two_thirds.observed_count() == 25);

    CHECK(random_mask(38, random_spec(2.0 / 3.0, 17)).observed == two_thirds.observed);

    std::set<std::vector<std::uint8_t>> distinct;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        distinct.insert(random_mask(38, random_spec(2.0 / 3.0, seed)).observed);
    }
    CHECK(distinct.size() >= 99);

    CHECK_THROWS_AS(random_mask(10, greedy_spec(0.5, 2)), std::invalid_argument);
}

TEST_CASE("random mask is unbiased across positions") {
    Eigen::VectorXi hits = Eigen::VectorXi::Zero(10);
    const int trials = 2000;
    for (int s = 0; s < trials; ++s) {
        const Mask m = random_mask(10, random_spec(0.5, static_cast<std::uint64_t>(s)));
        for (int i = 0; i < 10; ++i) hits(i) += m.observed[static_cast<std::size_t>(i)];
    }
    // Each position should be observed about half the time.
    for (int i = 0; i < 10; ++i) {
        CHECK(hits(i) > trials / 2 - 150);
        CHECK(hits(i) < trials / 2 + 150);
    }
}

TEST_CASE("greedy mask with K = 1 picks indices in order") {
    // Connected dual: the first eigenvector is constant, so every candidate
    // ties and the lowest index wins each round.
    const GftBasis basis = dual_basis(testutil::star4());
    const Mask m = greedy_lowfreq_mask(basis, greedy_spec(2.0 / 3.0, 1));
    CHECK(m.observed_count() == 2);
    CHECK(m.observed == std::vector<std::uint8_t>{1, 1, 0});
}

TEST_CASE("greedy mask on the P3 dual reaches the identity frame") {
    const GftBasis basis = dual_basis(testutil::path3());
    const Mask m = greedy_lowfreq_mask(basis, greedy_spec(1.0, 2));
    CHECK(m.all_observed());
    CHECK(frame_lambda_min(basis, m, 2) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("greedy mask determinism and validation") {
    const GftBasis basis = dual_basis(testutil::random_connected_graph(8, 12, 9));
    const Mask a = greedy_lowfreq_mask(basis, greedy_spec(0.5, 3));
    const Mask b = greedy_lowfreq_mask(basis, greedy_spec(0.5, 3));
    CHECK(a.observed == b.observed);
    CHECK(a.observed_count() == 6);

    CHECK_THROWS_AS(greedy_lowfreq_mask(basis, greedy_spec(0.5, 7)),
                    std::invalid_argument);  // K > budget
    CHECK_THROWS_AS(greedy_lowfreq_mask(basis, greedy_spec(0.5, 0)), std::invalid_argument);
    CHECK_THROWS_AS(greedy_lowfreq_mask(basis, random_spec(0.5, 1)), std::invalid_argument);
}

TEST_CASE("greedy mask achieves full rank whenever some set of its size can") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const auto g = testutil::random_graph(5, 0.6, 400 + seed);
        if (g.num_edges() < 3 || g.num_edges() > 10) continue;
        const GftBasis basis = dual_basis(g);
        const int n = basis.size();
        const int k = 2;
        const int budget = std::min(n, k + 1);
        const double fraction = static_cast<double>(budget) / n;

        const Mask greedy = greedy_lowfreq_mask(basis, greedy_spec(fraction, k));
        const double greedy_min = frame_lambda_min(basis, greedy, k);

        // Brute force over every size-budget subset.
        double best_min = -1.0;
        std::vector<int> pick(static_cast<std::size_t>(budget));
        const auto enumerate = [&](auto&& self, int start, int depth) -> void {
            if (depth == budget) {
                Mask m;
                m.observed.assign(static_cast<std::size_t>(n), 0);
                for (int idx : pick) m.observed[static_cast<std::size_t>(idx)] = 1;
                best_min = std::max(best_min, frame_lambda_min(basis, m, k));
                return;
            }
            for (int i = start; i < n; ++i) {
                pick[static_cast<std::size_t>(depth)] = i;
                self(self, i + 1, depth + 1);
            }
        };
        enumerate(enumerate, 0, 0);

        CHECK(greedy_min <= best_min + 1e-9);  // greedy can never beat the optimum
        if (best_min > 1e-9) {
            CHECK(greedy_min > 1e-9);  // rank-K achievable, greedy must achieve it
        }
    }
}
