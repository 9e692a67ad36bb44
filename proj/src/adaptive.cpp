#include "edgewave/adaptive.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgewave {

namespace {

void require_size(int got, int want, const char* where, const char* what) {
    if (got != want) {
        throw std::invalid_argument(std::string(where) + ": " + what + " has length " +
                                    std::to_string(got) + ", expected " + std::to_string(want));
    }
}

}  // namespace

LglmsState make_lglms_state(std::shared_ptr<const GftBasis> basis,
                            std::shared_ptr<const FilterSpectrum> filter, double step_size) {
    if (!basis || !filter) {
        throw std::invalid_argument("make_lglms_state: basis and filter must be non-null");
    }
    if (filter->size() != basis->size()) {
        throw std::invalid_argument("make_lglms_state: filter size does not match basis size");
    }
    if (!(step_size > 0.0)) {
        throw std::invalid_argument("make_lglms_state: step_size must be positive");
    }
    LglmsState state;
    state.estimate = Eigen::VectorXd::Zero(basis->size());
    state.step_size = step_size;
    state.basis = std::move(basis);
    state.filter = std::move(filter);
    state.iteration = 0;
    return state;
}

LglmsState lglms_step(const LglmsState& state, const Eigen::VectorXd& y, const Mask& m) {
    const int n = state.basis->size();
    require_size(static_cast<int>(y.size()), n, "lglms_step", "observation");
    require_size(m.size(), n, "lglms_step", "mask");
    require_size(static_cast<int>(state.estimate.size()), n, "lglms_step", "estimate");

    const Eigen::VectorXd innovation = m.apply(y - state.estimate);
    Eigen::VectorXd s = state.basis->vectors().transpose() * innovation;
    s.array() *= state.filter->gains().array();

    LglmsState next = state;
    next.estimate = state.estimate + state.step_size * (state.basis->vectors() * s);
    next.iteration = state.iteration + 1;
    return next;
}

double stability_margin(double step_size, const Mask& m, const GftBasis& basis,
                        const FilterSpectrum& f) {
    const int n = basis.size();
    require_size(m.size(), n, "stability_margin", "mask");
    require_size(f.size(), n, "stability_margin", "filter");

    const Eigen::VectorXd& gains = f.gains();

    if (m.all_observed()) {
        // U diag(g) U^T has singular values exactly g_j.
        const double gmax = (n > 0) ? gains.maxCoeff() : 0.0;
        return step_size * step_size * gmax * gmax;
    }

    // |a M U S U^T|_2 = |a M U S|_2; columns with zero gain contribute
    // nothing, so restrict to the filter support before forming the Gram.
    std::vector<int> support;
    for (int j = 0; j < n; ++j) {
        if (gains(j) > 0.0) support.push_back(j);
    }
    if (support.empty()) return 0.0;

    Eigen::MatrixXd w(n, static_cast<int>(support.size()));
    for (std::size_t c = 0; c < support.size(); ++c) {
        w.col(static_cast<int>(c)) = basis.vectors().col(support[c]) * gains(support[c]);
    }
    for (int i = 0; i < n; ++i) {
        if (!m.observed[static_cast<std::size_t>(i)]) w.row(i).setZero();
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(w.transpose() * w,
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("stability_margin: eigensolve failed");
    }
    const double lambda_max = solver.eigenvalues().maxCoeff();
    return step_size * step_size * std::max(lambda_max, 0.0);
}

Eigen::VectorXd spectral_baseline_step(const GftBasis& basis, const FilterSpectrum& f,
                                       const Eigen::VectorXd& y) {
    require_size(static_cast<int>(y.size()), basis.size(), "spectral_baseline_step",
                 "observation");
    return apply_filter(basis, f, y);
}

Eigen::VectorXd simplicial_conv_step(const Eigen::VectorXd& estimate,
                                     const Eigen::MatrixXd& lower, const Eigen::MatrixXd& upper,
                                     const ScParams& p, const Eigen::VectorXd& y, const Mask& m) {
    const int n = static_cast<int>(estimate.size());
    require_size(static_cast<int>(y.size()), n, "simplicial_conv_step", "observation");
    require_size(m.size(), n, "simplicial_conv_step", "mask");
    require_size(static_cast<int>(lower.rows()), n, "simplicial_conv_step", "lower Laplacian");
    require_size(static_cast<int>(upper.rows()), n, "simplicial_conv_step", "upper Laplacian");

    Eigen::VectorXd z = estimate;
    for (int i = 0; i < n; ++i) {
        if (m.observed[static_cast<std::size_t>(i)]) z(i) = y(i);
    }
    return p.theta * (lower * z) + p.gamma * (upper * z) + p.xi * z;
}

Eigen::VectorXd simplicial_conv_step(const Eigen::VectorXd& estimate, const HodgePair& hodge,
                                     const ScParams& p, const Eigen::VectorXd& y, const Mask& m) {
    return simplicial_conv_step(estimate, hodge.lower.cast<double>(), hodge.upper.cast<double>(),
                                p, y, m);
}

ScParams fit_sc_params(const HodgePair& hodge, const Eigen::MatrixXd& reference) {
    const ScParams fallback{};

    const Eigen::Index t_ref = reference.rows();
    const Eigen::Index n = reference.cols();
    if (t_ref < 2) return fallback;
    if (hodge.lower.rows() != n) {
        throw std::invalid_argument("fit_sc_params: reference width does not match edge count");
    }

    const Eigen::MatrixXd lower = hodge.lower.cast<double>();
    const Eigen::MatrixXd upper = hodge.upper.cast<double>();

    Eigen::MatrixXd design((t_ref - 1) * n, 3);
    Eigen::VectorXd target((t_ref - 1) * n);
    for (Eigen::Index t = 0; t + 1 < t_ref; ++t) {
        const Eigen::VectorXd x = reference.row(t).transpose();
        design.block(t * n, 0, n, 1) = lower * x;
        design.block(t * n, 1, n, 1) = upper * x;
        design.block(t * n, 2, n, 1) = x;
        target.segment(t * n, n) = reference.row(t + 1).transpose();
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < 3) return fallback;

    const Eigen::Vector3d sol = qr.solve(target);
    if (!sol.allFinite()) return fallback;
    return ScParams{sol(0), sol(1), sol(2)};
}

}  // namespace edgewave
