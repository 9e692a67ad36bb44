#pragma once

// Shared fixtures and brute-force oracles for the test suites. Everything
// here is independent of the library's construction paths so it can serve
// as a second route for cross-checking.

#include <Eigen/Dense>

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edgewave/graph.hpp"
#include "edgewave/rng.hpp"

namespace testutil {

inline edgewave::Graph path3() {
    return edgewave::build_graph(3, {{0, 1}, {1, 2}});
}

inline edgewave::Graph k3() {
    return edgewave::build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
}

// Center 0, leaves 1..3.
inline edgewave::Graph star4() {
    return edgewave::build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
}

// Erdos-Renyi style graph: every pair independently with probability p.
inline edgewave::Graph random_graph(int n, double p, std::uint64_t seed) {
    edgewave::SeededRng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.uniform01() < p) edges.emplace_back(u, v);
        }
    }
    return edgewave::build_graph(n, edges);
}

// Random connected graph with exactly m edges: random recursive tree plus
// uniformly chosen extra pairs.
inline edgewave::Graph random_connected_graph(int n, int m, std::uint64_t seed) {
    if (m < n - 1 || m > n * (n - 1) / 2) {
        throw std::invalid_argument("random_connected_graph: infeasible edge count");
    }
    edgewave::SeededRng rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<char>> have(static_cast<std::size_t>(n),
                                        std::vector<char>(static_cast<std::size_t>(n), 0));
    auto add = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        if (have[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) return false;
        have[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        edges.emplace_back(u, v);
        return true;
    };
    for (int v = 1; v < n; ++v) {
        add(static_cast<int>(rng.bounded(static_cast<std::uint64_t>(v))), v);
    }
    while (static_cast<int>(edges.size()) < m) {
        const int u = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));
        const int v = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));
        if (u != v) add(u, v);
    }
    return edgewave::build_graph(n, edges);
}

// Dual adjacency by definition: dual nodes i, j adjacent iff original edges
// i and j share exactly one endpoint.
inline Eigen::MatrixXi brute_force_line_adjacency(const edgewave::Graph& g) {
    const int m = g.num_edges();
    Eigen::MatrixXi adj = Eigen::MatrixXi::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            const auto& [a, b] = g.edge(i);
            const auto& [c, d] = g.edge(j);
            const int shared = static_cast<int>(a == c) + static_cast<int>(a == d) +
                               static_cast<int>(b == c) + static_cast<int>(b == d);
            if (shared == 1) adj(i, j) = 1;
        }
    }
    return adj;
}

// Scratch directory for file-based tests, wiped on construction.
class TempDir {
public:
    explicit TempDir(const std::string& name)
        : path_(std::filesystem::temp_directory_path() / ("edgewave_" + name)) {
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }

    std::string file(const std::string& name) const { return (path_ / name).string(); }

    void write(const std::string& name, const std::string& content) const {
        std::ofstream out(file(name));
        out << content;
    }

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace testutil
