#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgewave/graph.hpp"
#include "edgewave/mask.hpp"
#include "edgewave/rng.hpp"

namespace edgewave {

// T x N_e time-varying edge signal. Column k is bound to edge k of the graph
// the series was loaded or generated against.
struct EdgeSignalSeries {
    Eigen::MatrixXd values;  // row t = signal at time t

    int steps() const noexcept { return static_cast<int>(values.rows()); }
    int width() const noexcept { return static_cast<int>(values.cols()); }
};

struct SinusoidComponent {
    double amplitude = 0.0;
    double frequency = 0.0;  // cycles per series length
};

// Modulation recipe for synthesizing time-varying behavior from a static
// signal. The amplitudes must satisfy sum |a_k| < 1 so the modulation factor
// stays positive and the synthetic flows keep the sign of the base flow.
struct SinusoidSpec {
    std::vector<SinusoidComponent> components;

    static SinusoidSpec defaults() {
        return SinusoidSpec{{{0.3, 1.0}, {0.15, 3.0}, {0.1, 5.0}}};
    }
};

// Graph CSV: header "u,v", one 0-based edge per line; line order defines the
// edge indices. Node count defaults to max index + 1.
Graph load_graph_csv(const std::string& path, std::optional<int> num_nodes = std::nullopt);

// Series CSV: no header, T rows of num_edges comma-separated reals.
EdgeSignalSeries load_series_csv(const std::string& path, const Graph& g);

// Node-signal CSV with the same shape rules, width bound to num_nodes.
Eigen::MatrixXd load_node_series_csv(const std::string& path, const Graph& g);

void write_graph_csv(const Graph& g, const std::string& path);

// Mask CSV: header "edge_index,observed", observed in {0,1}.
void write_mask_csv(const Mask& m, const std::string& path);

// x[t]_i = base_i * (1 + sum_k a_k sin(2 pi f_k t / horizon + phi_{k,i}))
// with per-edge phases drawn once, uniform on [0, 2 pi), from the seed.
EdgeSignalSeries synth_timevarying(const Eigen::VectorXd& base, const SinusoidSpec& spec,
                                   int horizon, std::uint64_t seed);

// Edge value = mean of the two endpoint node values, per time step.
EdgeSignalSeries node_to_edge_projection(const Graph& g, const Eigen::MatrixXd& node_series);

// Adds i.i.d. zero-mean Gaussian noise of deviation sigma to every entry,
// drawn row-major from the stream.
EdgeSignalSeries add_noise(const EdgeSignalSeries& series, double sigma, std::uint64_t seed);
EdgeSignalSeries add_noise(const EdgeSignalSeries& series, double sigma, SeededRng& rng);

// y = M(x + w): Gaussian noise on every entry, then unobserved entries
// zeroed. The stream variant advances rng by exactly x.size() samples.
Eigen::VectorXd observe(const Eigen::VectorXd& x, const Mask& m, double sigma,
                        std::uint64_t seed);
Eigen::VectorXd observe(const Eigen::VectorXd& x, const Mask& m, double sigma, SeededRng& rng);

}  // namespace edgewave
