#include "nashgrid/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace nashgrid {

namespace {

bool bfs_reaches_all(const std::vector<std::vector<int>>& adjacency, int n) {
    if (n <= 1) {
        return true;
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v : adjacency[static_cast<size_t>(u)]) {
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                ++reached;
                frontier.push(v);
            }
        }
    }
    return reached == n;
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("graph: node count must be >= 1, got " + std::to_string(n));
    }
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "graph: edge (" + std::to_string(a) + ", " + std::to_string(b) +
                            ") out of range for " + std::to_string(n) + " nodes");
        }
        if (a == b) {
            throw Error(ErrorCode::SelfLoop, "graph: self-loop at node " + std::to_string(a));
        }
        edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adjacency_.assign(static_cast<size_t>(n), {});
    for (const auto& [a, b] : edges_) {
        adjacency_[static_cast<size_t>(a)].push_back(b);
        adjacency_[static_cast<size_t>(b)].push_back(a);
    }
    connected_ = bfs_reaches_all(adjacency_, n_);
}

Graph Graph::ring(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    if (n >= 3) {
        edges.emplace_back(n - 1, 0);
    }
    return Graph(n, edges);
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(n, edges);
}

bool is_connected(const Graph& g) {
    return g.connected();
}

Eigen::MatrixXd laplacian(const Graph& g) {
    const int n = g.size();
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        lap(i, i) = static_cast<double>(g.degree(i));
    }
    for (const auto& [a, b] : g.edges()) {
        lap(a, b) = -1.0;
        lap(b, a) = -1.0;
    }
    return lap;
}

double fiedler_value(const Graph& g) {
    if (!g.connected()) {
        throw Error(ErrorCode::NotConnected, "fiedler_value: graph is not connected");
    }
    if (g.size() == 1) {
        throw std::invalid_argument("fiedler_value: undefined for a single-node graph");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian(g),
                                                          Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(1);  // eigenvalues are sorted ascending
}

}  // namespace nashgrid
