#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgewave/adaptive.hpp"
#include "edgewave/sampling.hpp"
#include "edgewave/signal_io.hpp"

namespace edgewave {

enum class Algorithm { lglms, spectral, sc };
enum class FilterKind { lowpass, bandlimited };

// Full description of one experiment: graph, ground-truth source, sampling,
// filtering, algorithms, and Monte Carlo parameters. Exactly one of
// series_path / synth_base_path / node_series_path must be set; the synth
// source needs horizon >= 1 and the node-series source needs project = true.
struct ExperimentConfig {
    std::string graph_path;
    std::optional<int> num_nodes;  // override; default max edge index + 1

    std::optional<std::string> series_path;
    std::optional<std::string> synth_base_path;
    int horizon = 0;
    std::optional<std::string> node_series_path;
    bool project = false;

    SinusoidSpec synth = SinusoidSpec::defaults();

    SamplingStrategy mask_strategy = SamplingStrategy::random;
    double fraction = 2.0 / 3.0;

    std::vector<FilterKind> filters = {FilterKind::lowpass, FilterKind::bandlimited};
    std::optional<int> bandwidth;  // K; default ceil(N_e / 4)

    std::vector<Algorithm> algorithms = {Algorithm::lglms, Algorithm::spectral, Algorithm::sc};
    double alpha = 0.5;
    std::optional<double> noise_sigma;  // default 0.1 * RMS of the base signal
    int runs = 1;
    std::uint64_t seed = 0;

    std::string output_path;  // consumed by the CLI, not by run_experiment
};

struct ResultRow {
    int t = 0;
    std::string algorithm;  // e.g. "lglms_bl"
    double nmse = 0.0;
};

struct ResultTable {
    std::vector<ResultRow> rows;
};

// "lglms_lp", "spectral_bl", ...
std::string algorithm_label(Algorithm a, FilterKind f);

// Per-timestep normalized error, averaged over runs:
//   (1/N_r) sum_r sum_i (x_i - x^_{r,i})^2 / x_i^2
// summed over the edges whose ground truth satisfies |x_i| > 1e-12. Rejects
// the degenerate case where every edge is excluded.
double nmse(const Eigen::VectorXd& truth, const std::vector<Eigen::VectorXd>& run_estimates);

// Runs the configured Monte Carlo experiment: per run it draws a mask (the
// greedy mask is computed once and shared, random masks are redrawn per
// run), streams observations y[t] = M(x[t] + w[t]) through every configured
// algorithm, and aggregates NMSE[t] per algorithm label. LGLMS stability is
// validated against every mask before any run starts; a margin above 1
// raises StabilityError.
ResultTable run_experiment(const ExperimentConfig& cfg);

// CSV with header "t,algorithm,nmse", rows sorted by (t, label), reals with
// 15 significant digits. Re-emitting the same table is byte-identical.
void emit_results(const ResultTable& table, const std::string& path);

}  // namespace edgewave
