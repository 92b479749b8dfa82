#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "nashgrid/errors.hpp"

namespace nashgrid {

/// Undirected communication graph on nodes 0..n-1. Edges are stored as
/// unordered pairs (normalized to i < j, deduplicated), so the adjacency
/// matrix is symmetric by construction. Immutable after construction and
/// safe to share across concurrent runs.
class Graph {
  public:
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    static Graph ring(int n);
    static Graph complete(int n);
    static Graph path(int n);

    int size() const noexcept { return n_; }
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
    const std::vector<int>& neighbors(int i) const { return adjacency_.at(static_cast<size_t>(i)); }
    int degree(int i) const { return static_cast<int>(neighbors(i).size()); }
    bool connected() const noexcept { return connected_; }

  private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    bool connected_;
};

/// True iff every pair of distinct nodes is joined by a path (BFS).
bool is_connected(const Graph& g);

/// L = D - A with D the diagonal degree matrix.
Eigen::MatrixXd laplacian(const Graph& g);

/// Second-smallest eigenvalue of the Laplacian; positive exactly when the
/// graph is connected. Throws NotConnected otherwise.
double fiedler_value(const Graph& g);

}  // namespace nashgrid
