#include "edgewave/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>

#include "edgewave/errors.hpp"

namespace edgewave {

namespace {

constexpr double kZeroTruthEps = 1e-12;

// Stream salts for deriving independent seeds from the base seed.
constexpr std::uint64_t kSynthStream = 0;
constexpr std::uint64_t kMaskStream = 1;
constexpr std::uint64_t kNoiseStream = 2;

std::vector<int> included_edges(const Eigen::VectorXd& truth) {
    std::vector<int> included;
    included.reserve(static_cast<std::size_t>(truth.size()));
    for (Eigen::Index i = 0; i < truth.size(); ++i) {
        if (std::abs(truth(i)) > kZeroTruthEps) included.push_back(static_cast<int>(i));
    }
    if (included.empty()) {
        throw std::invalid_argument(
            "nmse: every ground-truth entry is within 1e-12 of zero; the "
            "normalized error is undefined");
    }
    return included;
}

double run_error_sum(const Eigen::VectorXd& truth, const Eigen::VectorXd& estimate,
                     const std::vector<int>& included) {
    double sum = 0.0;
    for (int i : included) {
        const double diff = truth(i) - estimate(i);
        sum += diff * diff / (truth(i) * truth(i));
    }
    return sum;
}

double rms(const Eigen::MatrixXd& values) {
    return std::sqrt(values.array().square().mean());
}

template <typename T>
std::vector<T> deduplicate(const std::vector<T>& items) {
    std::vector<T> out;
    for (const T& item : items) {
        if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
    }
    return out;
}

struct TruthData {
    EdgeSignalSeries series;
    double default_sigma = 0.0;
};

TruthData build_truth(const ExperimentConfig& cfg, const Graph& g) {
    const int sources = (cfg.series_path ? 1 : 0) + (cfg.synth_base_path ? 1 : 0) +
                        (cfg.node_series_path ? 1 : 0);
    if (sources != 1) {
        throw std::invalid_argument(
            "config: exactly one of series, synth-base, or node-series must be given");
    }

    TruthData truth;
    if (cfg.series_path) {
        truth.series = load_series_csv(*cfg.series_path, g);
        truth.default_sigma = 0.1 * rms(truth.series.values);
    } else if (cfg.synth_base_path) {
        if (cfg.horizon < 1) {
            throw std::invalid_argument("config: synth-base requires a horizon of at least 1");
        }
        const EdgeSignalSeries base_rows = load_series_csv(*cfg.synth_base_path, g);
        if (base_rows.steps() != 1) {
            throw IoError(*cfg.synth_base_path + ": synth base must contain exactly one row, got " +
                          std::to_string(base_rows.steps()));
        }
        const Eigen::VectorXd base = base_rows.values.row(0).transpose();
        truth.series =
            synth_timevarying(base, cfg.synth, cfg.horizon, mix_seed(cfg.seed, kSynthStream));
        truth.default_sigma = 0.1 * std::sqrt(base.array().square().mean());
    } else {
        if (!cfg.project) {
            throw std::invalid_argument("config: node-series input requires the project flag");
        }
        const Eigen::MatrixXd node_series = load_node_series_csv(*cfg.node_series_path, g);
        truth.series = node_to_edge_projection(g, node_series);
        truth.default_sigma = 0.1 * rms(truth.series.values);
    }
    return truth;
}

}  // namespace

std::string algorithm_label(Algorithm a, FilterKind f) {
    std::string label;
    switch (a) {
        case Algorithm::lglms: label = "lglms"; break;
        case Algorithm::spectral: label = "spectral"; break;
        case Algorithm::sc: label = "sc"; break;
    }
    label += (f == FilterKind::lowpass) ? "_lp" : "_bl";
    return label;
}

double nmse(const Eigen::VectorXd& truth, const std::vector<Eigen::VectorXd>& run_estimates) {
    if (run_estimates.empty()) {
        throw std::invalid_argument("nmse: need at least one run estimate");
    }
    const std::vector<int> included = included_edges(truth);
    double total = 0.0;
    for (const Eigen::VectorXd& estimate : run_estimates) {
        if (estimate.size() != truth.size()) {
            throw std::invalid_argument("nmse: estimate length does not match ground truth");
        }
        total += run_error_sum(truth, estimate, included);
    }
    return total / static_cast<double>(run_estimates.size());
}

ResultTable run_experiment(const ExperimentConfig& cfg) {
    if (cfg.runs < 1) throw std::invalid_argument("config: runs must be at least 1");
    if (!(cfg.alpha > 0.0)) throw std::invalid_argument("config: alpha must be positive");
    if (!(cfg.fraction > 0.0 && cfg.fraction <= 1.0)) {
        throw std::invalid_argument("config: fraction must lie in (0, 1]");
    }
    const std::vector<FilterKind> filters = deduplicate(cfg.filters);
    const std::vector<Algorithm> algorithms = deduplicate(cfg.algorithms);
    if (filters.empty()) throw std::invalid_argument("config: at least one filter is required");
    if (algorithms.empty()) {
        throw std::invalid_argument("config: at least one algorithm is required");
    }
    if (cfg.noise_sigma && *cfg.noise_sigma < 0.0) {
        throw std::invalid_argument("config: noise sigma must be non-negative");
    }

    const Graph g = load_graph_csv(cfg.graph_path, cfg.num_nodes);
    if (g.num_edges() < 1) throw std::invalid_argument("config: graph has no edges");

    const TruthData truth = build_truth(cfg, g);
    const int n_edges = truth.series.width();
    const int t_steps = truth.series.steps();
    const double sigma = cfg.noise_sigma.value_or(truth.default_sigma);

    const int bandwidth = cfg.bandwidth.value_or((n_edges + 3) / 4);
    if (bandwidth < 1 || bandwidth > n_edges) {
        throw std::invalid_argument("config: bandwidth " + std::to_string(bandwidth) +
                                    " out of range [1, " + std::to_string(n_edges) + "]");
    }

    const LineGraph lg = line_graph(g);
    const auto basis = std::make_shared<const GftBasis>(
        gft_basis(laplacian(lg.graph).cast<double>()));

    // Clean warm-up window: reference for the bandlimited filter and the SC
    // parameter fit. Estimation still runs over all T steps.
    const int t_ref = std::min(10, t_steps);
    const Eigen::MatrixXd reference = truth.series.values.topRows(t_ref);

    std::map<FilterKind, std::shared_ptr<const FilterSpectrum>> filter_bank;
    for (FilterKind kind : filters) {
        filter_bank[kind] = std::make_shared<const FilterSpectrum>(
            kind == FilterKind::lowpass ? lowpass_filter(*basis, bandwidth)
                                        : bandlimited_filter(*basis, reference, bandwidth));
    }

    const bool wants_sc =
        std::find(algorithms.begin(), algorithms.end(), Algorithm::sc) != algorithms.end();
    const bool wants_lglms =
        std::find(algorithms.begin(), algorithms.end(), Algorithm::lglms) != algorithms.end();

    Eigen::MatrixXd sc_lower, sc_upper;
    ScParams sc_params;
    if (wants_sc) {
        const HodgePair hodge = hodge_laplacians(g);
        sc_lower = hodge.lower.cast<double>();
        sc_upper = hodge.upper.cast<double>();
        sc_params = fit_sc_params(hodge, reference);
    }

    // Masks: the greedy set is deterministic, computed once and shared; the
    // random strategy redraws per run from a per-run derived seed.
    std::vector<Mask> masks;
    if (cfg.mask_strategy == SamplingStrategy::greedy_lowfreq) {
        SamplingSpec spec;
        spec.strategy = SamplingStrategy::greedy_lowfreq;
        spec.fraction = cfg.fraction;
        spec.bandwidth = bandwidth;
        masks.push_back(greedy_lowfreq_mask(*basis, spec));
    } else {
        const std::uint64_t mask_base = mix_seed(cfg.seed, kMaskStream);
        for (int r = 0; r < cfg.runs; ++r) {
            SamplingSpec spec;
            spec.strategy = SamplingStrategy::random;
            spec.fraction = cfg.fraction;
            spec.seed = mix_seed(mask_base, static_cast<std::uint64_t>(r));
            masks.push_back(random_mask(n_edges, spec));
        }
    }

    if (wants_lglms) {
        for (FilterKind kind : filters) {
            for (const Mask& mask : masks) {
                const double margin = stability_margin(cfg.alpha, mask, *basis,
                                                       *filter_bank.at(kind));
                if (margin > 1.0) {
                    throw StabilityError(
                        "LGLMS is unstable for filter '" +
                            std::string(kind == FilterKind::lowpass ? "lowpass" : "bandlimited") +
                            "': squared operator norm " + std::to_string(margin) + " exceeds 1",
                        margin);
                }
            }
        }
    }

    // Label order fixes both the update order inside a step and the row
    // order of the output table.
    std::vector<std::pair<std::string, std::pair<Algorithm, FilterKind>>> lanes;
    for (Algorithm a : algorithms) {
        for (FilterKind f : filters) {
            lanes.emplace_back(algorithm_label(a, f), std::make_pair(a, f));
        }
    }
    std::sort(lanes.begin(), lanes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::map<std::string, Eigen::VectorXd> error_sums;
    for (const auto& lane : lanes) {
        error_sums[lane.first] = Eigen::VectorXd::Zero(t_steps);
    }

    const std::uint64_t noise_base = mix_seed(cfg.seed, kNoiseStream);

    for (int r = 0; r < cfg.runs; ++r) {
        const Mask& mask = masks[static_cast<std::size_t>(masks.size() == 1 ? 0 : r)];
        SeededRng noise_rng(mix_seed(noise_base, static_cast<std::uint64_t>(r)));

        std::map<std::string, LglmsState> lglms_states;
        std::map<std::string, Eigen::VectorXd> sc_states;
        std::map<std::string, Eigen::VectorXd> estimates;
        for (const auto& [label, combo] : lanes) {
            if (combo.first == Algorithm::lglms) {
                lglms_states.emplace(
                    label, make_lglms_state(basis, filter_bank.at(combo.second), cfg.alpha));
            } else if (combo.first == Algorithm::sc) {
                sc_states[label] = Eigen::VectorXd::Zero(n_edges);
            }
            estimates[label] = Eigen::VectorXd::Zero(n_edges);
        }

        for (int t = 0; t < t_steps; ++t) {
            const Eigen::VectorXd truth_row = truth.series.values.row(t).transpose();
            const std::vector<int> included = included_edges(truth_row);
            const Eigen::VectorXd y = observe(truth_row, mask, sigma, noise_rng);

            for (const auto& [label, combo] : lanes) {
                const auto& [algo, kind] = combo;
                if (algo == Algorithm::lglms) {
                    LglmsState& state = lglms_states.at(label);
                    state = lglms_step(state, y, mask);
                    estimates[label] = state.estimate;
                } else if (algo == Algorithm::spectral) {
                    estimates[label] =
                        spectral_baseline_step(*basis, *filter_bank.at(kind), y);
                } else {
                    Eigen::VectorXd& state = sc_states.at(label);
                    state = simplicial_conv_step(state, sc_lower, sc_upper, sc_params, y, mask);
                    estimates[label] = state;
                }
                error_sums.at(label)(t) += run_error_sum(truth_row, estimates.at(label), included);
            }
        }
    }

    ResultTable table;
    table.rows.reserve(static_cast<std::size_t>(t_steps) * lanes.size());
    for (int t = 0; t < t_steps; ++t) {
        for (const auto& [label, combo] : lanes) {
            const double value = error_sums.at(label)(t) / static_cast<double>(cfg.runs);
            if (!std::isfinite(value)) {
                throw std::runtime_error("run_experiment: NMSE for '" + label + "' at t=" +
                                         std::to_string(t) + " is not finite");
            }
            table.rows.push_back(ResultRow{t, label, value});
        }
    }
    return table;
}

void emit_results(const ResultTable& table, const std::string& path) {
    if (table.rows.empty()) {
        throw std::invalid_argument("emit_results: table is empty");
    }

    std::vector<ResultRow> rows = table.rows;
    std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
        return a.t != b.t ? a.t < b.t : a.algorithm < b.algorithm;
    });

    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << "t,algorithm,nmse\n";
    char buffer[64];
    for (const ResultRow& row : rows) {
        std::snprintf(buffer, sizeof(buffer), "%.15g", row.nmse);
        out << row.t << "," << row.algorithm << "," << buffer << "\n";
    }
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace edgewave
