#include "edgewave/signal_io.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "edgewave/errors.hpp"

namespace edgewave {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream stream(line);
    while (std::getline(stream, cell, ',')) {
        cells.push_back(trim(cell));
    }
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

int parse_int_cell(const std::string& cell, const std::string& path, int line_no, int col) {
    errno = 0;
    char* end = nullptr;
    const long value = std::strtol(cell.c_str(), &end, 10);
    if (cell.empty() || end != cell.c_str() + cell.size() || errno != 0) {
        throw IoError(path + ":" + std::to_string(line_no) + ": column " + std::to_string(col) +
                      ": expected an integer, got '" + cell + "'");
    }
    return static_cast<int>(value);
}

double parse_real_cell(const std::string& cell, const std::string& path, int line_no, int col) {
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(cell.c_str(), &end);
    if (cell.empty() || end != cell.c_str() + cell.size() || errno != 0) {
        throw IoError(path + ":" + std::to_string(line_no) + ": column " + std::to_string(col) +
                      ": expected a number, got '" + cell + "'");
    }
    return value;
}

std::ifstream open_for_read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

// Shared rectangular-CSV reader for signal matrices: no header, every row
// must have expected_cols numeric cells.
Eigen::MatrixXd load_matrix_csv(const std::string& path, int expected_cols) {
    std::ifstream in = open_for_read(path);

    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split_cells(line);
        if (static_cast<int>(cells.size()) != expected_cols) {
            throw IoError(path + ":" + std::to_string(line_no) + ": row has " +
                          std::to_string(cells.size()) + " columns, expected " +
                          std::to_string(expected_cols));
        }
        std::vector<double> row(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            row[c] = parse_real_cell(cells[c], path, line_no, static_cast<int>(c) + 1);
            if (!std::isfinite(row[c])) {
                throw IoError(path + ":" + std::to_string(line_no) + ": column " +
                              std::to_string(c + 1) + ": value is not finite");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw IoError(path + ": no data rows");

    Eigen::MatrixXd values(static_cast<Eigen::Index>(rows.size()), expected_cols);
    for (std::size_t t = 0; t < rows.size(); ++t) {
        for (int c = 0; c < expected_cols; ++c) {
            values(static_cast<Eigen::Index>(t), c) = rows[t][static_cast<std::size_t>(c)];
        }
    }
    return values;
}

}  // namespace

Graph load_graph_csv(const std::string& path, std::optional<int> num_nodes) {
    std::ifstream in = open_for_read(path);

    std::string line;
    if (!std::getline(in, line) || trim(line) != "u,v") {
        throw IoError(path + ":1: expected header 'u,v'");
    }

    std::vector<std::pair<int, int>> pairs;
    int max_index = -1;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split_cells(line);
        if (cells.size() != 2) {
            throw IoError(path + ":" + std::to_string(line_no) + ": expected two columns");
        }
        const int u = parse_int_cell(cells[0], path, line_no, 1);
        const int v = parse_int_cell(cells[1], path, line_no, 2);
        max_index = std::max({max_index, u, v});
        pairs.emplace_back(u, v);
    }

    const int n = num_nodes.value_or(max_index + 1);
    try {
        return build_graph(n, pairs);
    } catch (const std::invalid_argument& e) {
        throw IoError(path + ": " + e.what());
    }
}

EdgeSignalSeries load_series_csv(const std::string& path, const Graph& g) {
    return EdgeSignalSeries{load_matrix_csv(path, g.num_edges())};
}

Eigen::MatrixXd load_node_series_csv(const std::string& path, const Graph& g) {
    return load_matrix_csv(path, g.num_nodes());
}

void write_graph_csv(const Graph& g, const std::string& path) {
    std::ofstream out = open_for_write(path);
    out << "u,v\n";
    for (const auto& [u, v] : g.edges()) {
        out << u << "," << v << "\n";
    }
    if (!out) throw IoError("failed writing '" + path + "'");
}

void write_mask_csv(const Mask& m, const std::string& path) {
    std::ofstream out = open_for_write(path);
    out << "edge_index,observed\n";
    for (int i = 0; i < m.size(); ++i) {
        out << i << "," << (m.observed[static_cast<std::size_t>(i)] ? 1 : 0) << "\n";
    }
    if (!out) throw IoError("failed writing '" + path + "'");
}

EdgeSignalSeries synth_timevarying(const Eigen::VectorXd& base, const SinusoidSpec& spec,
                                   int horizon, std::uint64_t seed) {
    if (horizon < 1) {
        throw std::invalid_argument("synth_timevarying: horizon must be at least 1");
    }
    double amplitude_sum = 0.0;
    for (const auto& c : spec.components) amplitude_sum += std::abs(c.amplitude);
    if (amplitude_sum >= 1.0) {
        throw std::invalid_argument(
            "synth_timevarying: sum of |amplitudes| must stay below 1 so the "
            "modulation factor cannot cross zero");
    }

    const int n = static_cast<int>(base.size());
    const int kc = static_cast<int>(spec.components.size());

    // One phase per (component, edge), drawn component-major.
    SeededRng rng(seed);
    Eigen::MatrixXd phases(kc, n);
    for (int k = 0; k < kc; ++k) {
        for (int i = 0; i < n; ++i) {
            phases(k, i) = rng.uniform(0.0, kTwoPi);
        }
    }

    EdgeSignalSeries series;
    series.values.resize(horizon, n);
    for (int t = 0; t < horizon; ++t) {
        for (int i = 0; i < n; ++i) {
            double factor = 1.0;
            for (int k = 0; k < kc; ++k) {
                const auto& c = spec.components[static_cast<std::size_t>(k)];
                factor += c.amplitude *
                          std::sin(kTwoPi * c.frequency * t / horizon + phases(k, i));
            }
            series.values(t, i) = base(i) * factor;
        }
    }
    return series;
}

EdgeSignalSeries node_to_edge_projection(const Graph& g, const Eigen::MatrixXd& node_series) {
    if (node_series.cols() != g.num_nodes()) {
        throw std::invalid_argument("node_to_edge_projection: series width " +
                                    std::to_string(node_series.cols()) +
                                    " does not match node count " +
                                    std::to_string(g.num_nodes()));
    }
    EdgeSignalSeries series;
    series.values.resize(node_series.rows(), g.num_edges());
    for (int k = 0; k < g.num_edges(); ++k) {
        const auto& [u, v] = g.edge(k);
        series.values.col(k) = 0.5 * (node_series.col(u) + node_series.col(v));
    }
    return series;
}

EdgeSignalSeries add_noise(const EdgeSignalSeries& series, double sigma, SeededRng& rng) {
    if (sigma < 0.0) {
        throw std::invalid_argument("add_noise: sigma must be non-negative");
    }
    EdgeSignalSeries out = series;
    if (sigma == 0.0) return out;
    for (Eigen::Index t = 0; t < out.values.rows(); ++t) {
        for (Eigen::Index i = 0; i < out.values.cols(); ++i) {
            out.values(t, i) += rng.gaussian(0.0, sigma);
        }
    }
    return out;
}

EdgeSignalSeries add_noise(const EdgeSignalSeries& series, double sigma, std::uint64_t seed) {
    SeededRng rng(seed);
    return add_noise(series, sigma, rng);
}

Eigen::VectorXd observe(const Eigen::VectorXd& x, const Mask& m, double sigma, SeededRng& rng) {
    if (m.size() != static_cast<int>(x.size())) {
        throw std::invalid_argument("observe: mask length does not match signal length");
    }
    if (sigma < 0.0) {
        throw std::invalid_argument("observe: sigma must be non-negative");
    }
    Eigen::VectorXd noisy = x;
    if (sigma > 0.0) {
        for (Eigen::Index i = 0; i < noisy.size(); ++i) {
            noisy(i) += rng.gaussian(0.0, sigma);
        }
    }
    return m.apply(noisy);
}

Eigen::VectorXd observe(const Eigen::VectorXd& x, const Mask& m, double sigma,
                        std::uint64_t seed) {
    SeededRng rng(seed);
    return observe(x, m, sigma, rng);
}

}  // namespace edgewave
