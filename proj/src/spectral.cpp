#include "edgewave/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgewave {

namespace {

void require_length(const GftBasis& basis, const Eigen::VectorXd& v, const char* where) {
    if (v.size() != basis.size()) {
        throw std::invalid_argument(std::string(where) + ": signal length " +
                                    std::to_string(v.size()) + " does not match basis size " +
                                    std::to_string(basis.size()));
    }
}

}  // namespace

GftBasis gft_basis(const Eigen::MatrixXd& lap) {
    if (lap.rows() != lap.cols() || lap.rows() < 1) {
        throw std::invalid_argument("gft_basis: matrix must be square and non-empty");
    }
    if ((lap - lap.transpose()).cwiseAbs().maxCoeff() > 1e-9) {
        throw std::invalid_argument("gft_basis: matrix is not symmetric within 1e-9");
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("gft_basis: eigendecomposition failed to converge");
    }

    // Eigen returns eigenvalues in increasing order already.
    Eigen::VectorXd values = solver.eigenvalues();
    Eigen::MatrixXd vectors = solver.eigenvectors();

    if (values(0) < -1e-9) {
        throw std::invalid_argument("gft_basis: matrix has eigenvalue " +
                                    std::to_string(values(0)) +
                                    " below -1e-9; expected a PSD Laplacian");
    }

    const int n = static_cast<int>(values.size());
    for (int j = 0; j < n; ++j) {
        int lead = 0;
        double best = std::abs(vectors(0, j));
        for (int i = 1; i < n; ++i) {
            const double a = std::abs(vectors(i, j));
            if (a > best) {
                best = a;
                lead = i;
            }
        }
        if (vectors(lead, j) < 0.0) vectors.col(j) = -vectors.col(j);
    }

    if ((vectors.transpose() * vectors - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() >
        1e-9) {
        throw std::runtime_error("gft_basis: eigenvector matrix lost orthonormality");
    }

    return GftBasis(std::move(vectors), std::move(values));
}

FilterSpectrum::FilterSpectrum(Eigen::VectorXd gains) : gains_(std::move(gains)) {
    for (Eigen::Index j = 0; j < gains_.size(); ++j) {
        if (!(gains_(j) >= 0.0 && gains_(j) <= 1.0)) {
            throw std::invalid_argument("FilterSpectrum: gain at bin " + std::to_string(j) +
                                        " is outside [0, 1]");
        }
    }
}

Eigen::VectorXd forward_gft(const GftBasis& basis, const Eigen::VectorXd& x) {
    require_length(basis, x, "forward_gft");
    return basis.vectors().transpose() * x;
}

Eigen::VectorXd inverse_gft(const GftBasis& basis, const Eigen::VectorXd& s) {
    require_length(basis, s, "inverse_gft");
    return basis.vectors() * s;
}

FilterSpectrum lowpass_filter(const GftBasis& basis, int cutoff_count) {
    const int n = basis.size();
    if (cutoff_count < 1 || cutoff_count > n) {
        throw std::invalid_argument("lowpass_filter: cutoff_count " +
                                    std::to_string(cutoff_count) + " out of range [1, " +
                                    std::to_string(n) + "]");
    }
    Eigen::VectorXd gains = Eigen::VectorXd::Zero(n);
    gains.head(cutoff_count).setOnes();
    return FilterSpectrum(std::move(gains));
}

FilterSpectrum bandlimited_filter(const GftBasis& basis, const Eigen::MatrixXd& reference,
                                  int bandwidth) {
    const int n = basis.size();
    if (reference.rows() < 1) {
        throw std::invalid_argument("bandlimited_filter: reference must have at least one row");
    }
    if (reference.cols() != n) {
        throw std::invalid_argument("bandlimited_filter: reference width " +
                                    std::to_string(reference.cols()) +
                                    " does not match basis size " + std::to_string(n));
    }
    if (bandwidth < 1 || bandwidth > n) {
        throw std::invalid_argument("bandlimited_filter: bandwidth " + std::to_string(bandwidth) +
                                    " out of range [1, " + std::to_string(n) + "]");
    }

    // Average spectral energy per bin over the reference snapshots.
    const Eigen::MatrixXd spectra = reference * basis.vectors();  // row t = (U^T x_t)^T
    const Eigen::VectorXd energy =
        spectra.array().square().colwise().mean().transpose();

    std::vector<int> bins(static_cast<std::size_t>(n));
    std::iota(bins.begin(), bins.end(), 0);
    std::stable_sort(bins.begin(), bins.end(),
                     [&energy](int a, int b) { return energy(a) > energy(b); });

    Eigen::VectorXd gains = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < bandwidth; ++k) {
        gains(bins[static_cast<std::size_t>(k)]) = 1.0;
    }
    return FilterSpectrum(std::move(gains));
}

Eigen::VectorXd apply_filter(const GftBasis& basis, const FilterSpectrum& f,
                             const Eigen::VectorXd& x) {
    require_length(basis, x, "apply_filter");
    if (f.size() != basis.size()) {
        throw std::invalid_argument("apply_filter: filter size does not match basis size");
    }
    Eigen::VectorXd s = basis.vectors().transpose() * x;
    s.array() *= f.gains().array();
    return basis.vectors() * s;
}

}  // namespace edgewave
