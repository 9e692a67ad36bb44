#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <numeric>
#include <vector>

namespace edgewave {

// Observed-edge indicator: the diagonal of the masking matrix M. Estimation
// runs require at least one observed entry; that is enforced where masks
// enter an estimator, not here, because a fully unobserved mask is still a
// valid argument to observe().
struct Mask {
    std::vector<std::uint8_t> observed;

    int size() const noexcept { return static_cast<int>(observed.size()); }

    int observed_count() const {
        return std::accumulate(observed.begin(), observed.end(), 0,
                               [](int acc, std::uint8_t o) { return acc + (o ? 1 : 0); });
    }

    bool all_observed() const {
        for (std::uint8_t o : observed) {
            if (!o) return false;
        }
        return true;
    }

    // M * x: zeroes the unobserved entries.
    Eigen::VectorXd apply(const Eigen::VectorXd& x) const {
        Eigen::VectorXd y = x;
        for (int i = 0; i < size(); ++i) {
            if (!observed[static_cast<std::size_t>(i)]) y(i) = 0.0;
        }
        return y;
    }
};

}  // namespace edgewave
