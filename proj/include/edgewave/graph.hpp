#pragma once

#include <Eigen/Dense>

#include <array>
#include <utility>
#include <vector>

namespace edgewave {

// Undirected, unweighted graph held as a canonical edge list. Edge order is
// part of the graph's identity: edge k is column k of the incidence matrix
// and row/column k of every edge-indexed matrix downstream.
class Graph {
public:
    int num_nodes() const noexcept { return num_nodes_; }
    int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

    // Each pair is stored with u < v; positions follow insertion order.
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    const std::pair<int, int>& edge(int k) const { return edges_.at(static_cast<std::size_t>(k)); }

private:
    friend Graph build_graph(int, const std::vector<std::pair<int, int>>&);

    Graph(int num_nodes, std::vector<std::pair<int, int>> edges)
        : num_nodes_(num_nodes), edges_(std::move(edges)) {}

    int num_nodes_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

// Validates and normalizes an edge list. Pairs are reordered to u < v while
// keeping their original positions. Self-loops, duplicate edges, and node
// indices outside [0, num_nodes) are rejected with std::invalid_argument.
Graph build_graph(int num_nodes, const std::vector<std::pair<int, int>>& edge_pairs);

// Signed incidence matrix B (num_nodes x num_edges). For edge k = (u, v)
// with u < v the column carries -1 at row u (tail) and +1 at row v (head).
// The orientation is canonical, not random: tail = lower node index. Every
// consumer of B is invariant to consistent re-orientation.
Eigen::MatrixXi incidence(const Graph& g);

// Combinatorial Laplacian D - A, computed in integer arithmetic.
// Equals incidence(g) * incidence(g)^T exactly.
Eigen::MatrixXi laplacian(const Graph& g);

// Edge-to-vertex dual. Dual node k is original edge k (identity mapping),
// and two dual nodes are adjacent iff their edges share exactly one endpoint.
struct LineGraph {
    Graph graph;                // the dual, with num_edges(original) nodes
    Eigen::MatrixXi adjacency;  // abs(B^T B) - 2 I; symmetric 0/1, zero diagonal
};

// Requires at least one edge in g.
LineGraph line_graph(const Graph& g);

// Lower and upper Hodge Laplacians on edge space. lower = B^T B;
// upper = B2 B2^T where B2 is the edge-triangle boundary map with the sign
// convention (+1, -1, +1) on the sorted edges (a,b), (a,c), (b,c) of a
// triangle a < b < c. upper is zero when the graph has no triangles.
struct HodgePair {
    Eigen::MatrixXi lower;
    Eigen::MatrixXi upper;
    std::vector<std::array<int, 3>> triangles;  // lexicographic, a < b < c
};

HodgePair hodge_laplacians(const Graph& g);

}  // namespace edgewave
