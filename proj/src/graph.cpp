#include "edgewave/graph.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace edgewave {

Graph build_graph(int num_nodes, const std::vector<std::pair<int, int>>& edge_pairs) {
    if (num_nodes < 0) {
        throw std::invalid_argument("build_graph: num_nodes must be non-negative");
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_pairs.size());
    std::set<std::pair<int, int>> seen;

    for (std::size_t k = 0; k < edge_pairs.size(); ++k) {
        auto [u, v] = edge_pairs[k];
        if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes) {
            throw std::invalid_argument("build_graph: edge " + std::to_string(k) + " (" +
                                        std::to_string(u) + "," + std::to_string(v) +
                                        ") references a node outside [0, " +
                                        std::to_string(num_nodes) + ")");
        }
        if (u == v) {
            throw std::invalid_argument("build_graph: edge " + std::to_string(k) +
                                        " is a self-loop at node " + std::to_string(u));
        }
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) {
            throw std::invalid_argument("build_graph: duplicate edge (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") at position " +
                                        std::to_string(k));
        }
        edges.emplace_back(u, v);
    }

    return Graph(num_nodes, std::move(edges));
}

Eigen::MatrixXi incidence(const Graph& g) {
    Eigen::MatrixXi b = Eigen::MatrixXi::Zero(g.num_nodes(), g.num_edges());
    for (int k = 0; k < g.num_edges(); ++k) {
        const auto& [u, v] = g.edge(k);
        b(u, k) = -1;
        b(v, k) = +1;
    }
    return b;
}

Eigen::MatrixXi laplacian(const Graph& g) {
    Eigen::MatrixXi lap = Eigen::MatrixXi::Zero(g.num_nodes(), g.num_nodes());
    for (const auto& [u, v] : g.edges()) {
        lap(u, u) += 1;
        lap(v, v) += 1;
        lap(u, v) -= 1;
        lap(v, u) -= 1;
    }
    return lap;
}

LineGraph line_graph(const Graph& g) {
    const int m = g.num_edges();
    if (m < 1) {
        throw std::invalid_argument("line_graph: graph must have at least one edge");
    }

    const Eigen::MatrixXi b = incidence(g);
    Eigen::MatrixXi adj = (b.transpose() * b).cwiseAbs();
    adj.diagonal().array() -= 2;

    // For a simple graph two distinct edges share zero or one endpoint, so
    // entries land in {0, 1}; anything else signals corrupted input.
    std::vector<std::pair<int, int>> dual_edges;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const int a = adj(i, j);
            if (i == j ? a != 0 : (a != 0 && a != 1)) {
                throw std::logic_error("line_graph: dual adjacency entry outside {0,1}");
            }
            if (j > i && a == 1) dual_edges.emplace_back(i, j);
        }
    }

    return LineGraph{build_graph(m, dual_edges), std::move(adj)};
}

HodgePair hodge_laplacians(const Graph& g) {
    const int n = g.num_nodes();
    const int m = g.num_edges();

    const Eigen::MatrixXi b = incidence(g);
    Eigen::MatrixXi lower = b.transpose() * b;

    // Edge lookup by normalized endpoints.
    Eigen::MatrixXi edge_id = Eigen::MatrixXi::Constant(n, n, -1);
    for (int k = 0; k < m; ++k) {
        const auto& [u, v] = g.edge(k);
        edge_id(u, v) = k;
        edge_id(v, u) = k;
    }

    std::vector<std::array<int, 3>> triangles;
    for (int va = 0; va < n; ++va) {
        for (int vb = va + 1; vb < n; ++vb) {
            if (edge_id(va, vb) < 0) continue;
            for (int vc = vb + 1; vc < n; ++vc) {
                if (edge_id(va, vc) >= 0 && edge_id(vb, vc) >= 0) {
                    triangles.push_back({va, vb, vc});
                }
            }
        }
    }

    const int nt = static_cast<int>(triangles.size());
    Eigen::MatrixXi upper = Eigen::MatrixXi::Zero(m, m);
    if (nt > 0) {
        Eigen::MatrixXi b2 = Eigen::MatrixXi::Zero(m, nt);
        for (int t = 0; t < nt; ++t) {
            const auto& [ta, tb, tc] = triangles[static_cast<std::size_t>(t)];
            b2(edge_id(ta, tb), t) = +1;
            b2(edge_id(ta, tc), t) = -1;
            b2(edge_id(tb, tc), t) = +1;
        }
        upper = b2 * b2.transpose();
    }

    return HodgePair{std::move(lower), std::move(upper), std::move(triangles)};
}

}  // namespace edgewave
