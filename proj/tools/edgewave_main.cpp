// edgewave — experiment CLI for online estimation of time-varying edge
// signals via the line-graph transform.
//
// Exit codes: 0 success, 2 config error, 3 stability failure, 4 I/O error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "edgewave/errors.hpp"
#include "edgewave/experiment.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitStability = 3;
constexpr int kExitIo = 4;

edgewave::Algorithm parse_algorithm(const std::string& name) {
    if (name == "lglms") return edgewave::Algorithm::lglms;
    if (name == "spectral") return edgewave::Algorithm::spectral;
    if (name == "sc") return edgewave::Algorithm::sc;
    throw CLI::ValidationError("--algos", "unknown algorithm '" + name + "'");
}

edgewave::FilterKind parse_filter(const std::string& name) {
    if (name == "lowpass") return edgewave::FilterKind::lowpass;
    if (name == "bandlimited") return edgewave::FilterKind::bandlimited;
    throw CLI::ValidationError("--filter", "unknown filter '" + name + "'");
}

struct RunOptions {
    edgewave::ExperimentConfig cfg;
    std::vector<std::string> filter_names{"lowpass", "bandlimited"};
    std::vector<std::string> algo_names{"lglms", "spectral", "sc"};
    std::string mask_name = "random";
    std::string series, synth_base, node_series;
    int num_nodes = -1;
    double noise_sigma = -1.0;
    int bandwidth = -1;
};

int do_run(RunOptions& opt) {
    edgewave::ExperimentConfig& cfg = opt.cfg;
    if (!opt.series.empty()) cfg.series_path = opt.series;
    if (!opt.synth_base.empty()) cfg.synth_base_path = opt.synth_base;
    if (!opt.node_series.empty()) cfg.node_series_path = opt.node_series;
    if (opt.num_nodes >= 0) cfg.num_nodes = opt.num_nodes;
    if (opt.noise_sigma >= 0.0) cfg.noise_sigma = opt.noise_sigma;
    if (opt.bandwidth >= 0) cfg.bandwidth = opt.bandwidth;
    cfg.mask_strategy = (opt.mask_name == "greedy") ? edgewave::SamplingStrategy::greedy_lowfreq
                                                    : edgewave::SamplingStrategy::random;
    cfg.filters.clear();
    for (const std::string& name : opt.filter_names) cfg.filters.push_back(parse_filter(name));
    cfg.algorithms.clear();
    for (const std::string& name : opt.algo_names) {
        cfg.algorithms.push_back(parse_algorithm(name));
    }

    const edgewave::ResultTable table = edgewave::run_experiment(cfg);
    edgewave::emit_results(table, cfg.output_path);
    return 0;
}

struct SampleOptions {
    std::string graph_path, out_path;
    std::string mask_name = "greedy";
    double fraction = 2.0 / 3.0;
    int bandwidth = -1;
    std::uint64_t seed = 0;
    int num_nodes = -1;
};

int do_sample(const SampleOptions& opt) {
    std::optional<int> nodes;
    if (opt.num_nodes >= 0) nodes = opt.num_nodes;
    const edgewave::Graph g = edgewave::load_graph_csv(opt.graph_path, nodes);
    if (g.num_edges() < 1) throw std::invalid_argument("graph has no edges");

    edgewave::SamplingSpec spec;
    spec.fraction = opt.fraction;
    edgewave::Mask mask;
    if (opt.mask_name == "greedy") {
        const edgewave::LineGraph lg = edgewave::line_graph(g);
        const edgewave::GftBasis basis =
            edgewave::gft_basis(edgewave::laplacian(lg.graph).cast<double>());
        spec.strategy = edgewave::SamplingStrategy::greedy_lowfreq;
        spec.bandwidth = (opt.bandwidth >= 0) ? opt.bandwidth : (g.num_edges() + 3) / 4;
        mask = edgewave::greedy_lowfreq_mask(basis, spec);
    } else {
        spec.strategy = edgewave::SamplingStrategy::random;
        spec.seed = opt.seed;
        mask = edgewave::random_mask(g.num_edges(), spec);
    }
    edgewave::write_mask_csv(mask, opt.out_path);
    return 0;
}

int do_linegraph(const std::string& graph_path, const std::string& out_path, int num_nodes) {
    std::optional<int> nodes;
    if (num_nodes >= 0) nodes = num_nodes;
    const edgewave::Graph g = edgewave::load_graph_csv(graph_path, nodes);
    const edgewave::LineGraph lg = edgewave::line_graph(g);
    edgewave::write_graph_csv(lg.graph, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Online spatio-temporal estimation of time-varying edge signals"};
    app.require_subcommand(1);

    // --- run ---
    RunOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "Run a Monte Carlo estimation experiment");
    run->add_option("--graph", run_opt.cfg.graph_path, "Graph CSV (header u,v)")->required();
    run->add_option("--nodes", run_opt.num_nodes, "Node count override");
    auto* series_opt = run->add_option("--series", run_opt.series, "Edge-signal series CSV");
    auto* synth_opt =
        run->add_option("--synth-base", run_opt.synth_base,
                        "Static edge-signal CSV (one row); modulated sinusoidally over time");
    run->add_option("--horizon", run_opt.cfg.horizon, "Synthetic series length T");
    auto* node_opt =
        run->add_option("--node-series", run_opt.node_series, "Node-signal series CSV");
    run->add_flag("--project", run_opt.cfg.project,
                  "Project node series onto edges by endpoint averaging");
    series_opt->excludes(synth_opt)->excludes(node_opt);
    synth_opt->excludes(node_opt);
    run->add_option("--mask", run_opt.mask_name, "Sampling strategy")
        ->check(CLI::IsMember({"random", "greedy"}));
    run->add_option("--fraction", run_opt.cfg.fraction, "Observed fraction of edges, in (0, 1]");
    run->add_option("--filter", run_opt.filter_names, "Filter kinds (comma separated)")
        ->delimiter(',')
        ->check(CLI::IsMember({"lowpass", "bandlimited"}));
    run->add_option("--bandwidth", run_opt.bandwidth, "Filter/sampling bandwidth K");
    run->add_option("--alpha", run_opt.cfg.alpha, "LGLMS step size");
    run->add_option("--noise-sigma", run_opt.noise_sigma,
                    "Observation noise std dev (default 0.1 * RMS of the base signal)");
    run->add_option("--runs", run_opt.cfg.runs, "Number of Monte Carlo runs");
    run->add_option("--seed", run_opt.cfg.seed, "Base seed for masks, noise, and synthesis");
    run->add_option("--algos", run_opt.algo_names, "Algorithms (comma separated)")
        ->delimiter(',')
        ->check(CLI::IsMember({"lglms", "spectral", "sc"}));
    run->add_option("--out", run_opt.cfg.output_path, "Result CSV path")->required();

    // --- linegraph ---
    std::string lg_graph, lg_out;
    int lg_nodes = -1;
    CLI::App* linegraph =
        app.add_subcommand("linegraph", "Emit the edge-to-vertex dual as an edge list");
    linegraph->add_option("--graph", lg_graph, "Graph CSV (header u,v)")->required();
    linegraph->add_option("--nodes", lg_nodes, "Node count override");
    linegraph->add_option("--out", lg_out, "Output CSV path")->required();

    // --- sample ---
    SampleOptions sample_opt;
    CLI::App* sample = app.add_subcommand("sample", "Compute and export an observation mask");
    sample->add_option("--graph", sample_opt.graph_path, "Graph CSV (header u,v)")->required();
    sample->add_option("--nodes", sample_opt.num_nodes, "Node count override");
    sample->add_option("--mask", sample_opt.mask_name, "Sampling strategy")
        ->check(CLI::IsMember({"random", "greedy"}));
    sample->add_option("--fraction", sample_opt.fraction, "Observed fraction of edges");
    sample->add_option("--bandwidth", sample_opt.bandwidth, "Greedy bandwidth K");
    sample->add_option("--seed", sample_opt.seed, "Seed for the random strategy");
    sample->add_option("--out", sample_opt.out_path, "Mask CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (run->parsed()) return do_run(run_opt);
        if (linegraph->parsed()) return do_linegraph(lg_graph, lg_out, lg_nodes);
        if (sample->parsed()) return do_sample(sample_opt);
    } catch (const edgewave::StabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStability;
    } catch (const edgewave::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
