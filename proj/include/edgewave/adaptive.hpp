#pragma once

#include <cstdint>
#include <memory>

#include "edgewave/graph.hpp"
#include "edgewave/mask.hpp"
#include "edgewave/spectral.hpp"

namespace edgewave {

// State of the online LMS estimator on the line-graph nodes. Basis and
// filter are shared read-only so Monte Carlo runs can hold independent
// states over the same spectral data.
struct LglmsState {
    Eigen::VectorXd estimate;
    double step_size = 0.5;
    std::shared_ptr<const GftBasis> basis;
    std::shared_ptr<const FilterSpectrum> filter;
    std::int64_t iteration = 0;
};

// Fresh state with a zero estimate. step_size must be positive.
LglmsState make_lglms_state(std::shared_ptr<const GftBasis> basis,
                            std::shared_ptr<const FilterSpectrum> filter, double step_size);

// One adaptive update
//   x^[t+1] = x^[t] + a U S U^T M (y[t] - x^[t])
// where y is the masked noisy observation (unobserved entries already zero).
// Pure: returns the advanced state, inputs untouched.
LglmsState lglms_step(const LglmsState& state, const Eigen::VectorXd& y, const Mask& m);

// Squared spectral norm |a M U S U^T|_2^2. The estimator is mean-square
// stable iff this is <= 1. With every entry observed the operator's singular
// values are exactly a * gain_j, so the margin is computed in closed form;
// otherwise it is the largest eigenvalue of the support-restricted Gram
// matrix (M U S)^T (M U S), scaled by a^2.
double stability_margin(double step_size, const Mask& m, const GftBasis& basis,
                        const FilterSpectrum& f);

// Non-adaptive projection baseline: x^ = U S U^T y. Stateless.
Eigen::VectorXd spectral_baseline_step(const GftBasis& basis, const FilterSpectrum& f,
                                       const Eigen::VectorXd& y);

// Parameters of the simplicial-convolution baseline.
struct ScParams {
    double theta = -0.1;
    double gamma = -0.1;
    double xi = 1.0;
};

// One simplicial-convolution step:
//   z    = estimate with observed entries overwritten by y (data injection)
//   out  = theta L_l z + gamma L_u z + xi z
// The injection is what lets the recursion consume new observations.
Eigen::VectorXd simplicial_conv_step(const Eigen::VectorXd& estimate, const HodgePair& hodge,
                                     const ScParams& p, const Eigen::VectorXd& y, const Mask& m);

// Core of the SC step over pre-cast real Laplacians; the HodgePair overload
// forwards here.
Eigen::VectorXd simplicial_conv_step(const Eigen::VectorXd& estimate,
                                     const Eigen::MatrixXd& lower, const Eigen::MatrixXd& upper,
                                     const ScParams& p, const Eigen::VectorXd& y, const Mask& m);

// Ordinary least squares fit of the one-step predictor
//   x[t+1] ~ theta L_l x[t] + gamma L_u x[t] + xi x[t]
// over consecutive rows of the reference window. Falls back to
// theta = gamma = -0.1, xi = 1 when the system is rank-deficient (for
// example on triangle-free graphs, where the L_u column vanishes) or the
// window has fewer than two rows.
ScParams fit_sc_params(const HodgePair& hodge, const Eigen::MatrixXd& reference);

}  // namespace edgewave
