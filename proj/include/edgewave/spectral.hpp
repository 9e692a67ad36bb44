#pragma once

#include <Eigen/Dense>

namespace edgewave {

// Eigenpairs (U, lambda) of a symmetric positive-semidefinite matrix,
// typically a graph Laplacian. Eigenvalues are sorted ascending; each
// eigenvector is sign-fixed so that its largest-magnitude entry (lowest
// index on ties) is positive, making the decomposition reproducible.
class GftBasis {
public:
    const Eigen::MatrixXd& vectors() const noexcept { return vectors_; }
    const Eigen::VectorXd& values() const noexcept { return values_; }
    int size() const noexcept { return static_cast<int>(values_.size()); }

private:
    friend GftBasis gft_basis(const Eigen::MatrixXd&);

    GftBasis(Eigen::MatrixXd vectors, Eigen::VectorXd values)
        : vectors_(std::move(vectors)), values_(std::move(values)) {}

    Eigen::MatrixXd vectors_;
    Eigen::VectorXd values_;
};

// Full dense symmetric eigendecomposition. Rejects matrices that are not
// symmetric within 1e-9 or that have an eigenvalue below -1e-9.
GftBasis gft_basis(const Eigen::MatrixXd& lap);

// Diagonal spectral filter: one gain per frequency bin, each in [0, 1].
// The low-pass and bandlimited constructors produce exact 0/1 gains.
class FilterSpectrum {
public:
    explicit FilterSpectrum(Eigen::VectorXd gains);

    const Eigen::VectorXd& gains() const noexcept { return gains_; }
    int size() const noexcept { return static_cast<int>(gains_.size()); }

private:
    Eigen::VectorXd gains_;
};

// s = U^T x
Eigen::VectorXd forward_gft(const GftBasis& basis, const Eigen::VectorXd& x);

// x = U s
Eigen::VectorXd inverse_gft(const GftBasis& basis, const Eigen::VectorXd& s);

// Unit gain on the cutoff_count smallest-eigenvalue bins, zero elsewhere.
FilterSpectrum lowpass_filter(const GftBasis& basis, int cutoff_count);

// Unit gain on the `bandwidth` bins with the largest average spectral energy
// over the reference rows (ties go to the lower bin index), zero elsewhere.
// reference is T_ref x N, one signal snapshot per row.
FilterSpectrum bandlimited_filter(const GftBasis& basis, const Eigen::MatrixXd& reference,
                                  int bandwidth);

// U diag(gains) U^T x
Eigen::VectorXd apply_filter(const GftBasis& basis, const FilterSpectrum& f,
                             const Eigen::VectorXd& x);

}  // namespace edgewave
