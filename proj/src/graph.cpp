#include "gsu/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "gsu/error.hpp"
#include "gsu/format.hpp"

namespace gsu {

namespace {

std::vector<std::vector<std::size_t>> build_adjacency(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : edges) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

std::vector<std::size_t> bfs(const std::vector<std::vector<std::size_t>>& adj, std::size_t source) {
    constexpr auto unreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(adj.size(), unreached);
    std::queue<std::size_t> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        const auto v = q.front();
        q.pop();
        for (auto u : adj[v]) {
            if (dist[u] == unreached) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
        }
    }
    return dist;
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges, GraphKind kind, std::optional<std::uint64_t> seed)
    : n_(n), edges_(std::move(edges)), kind_(std::move(kind)), seed_(seed) {
    if (n_ < 2) throw ValidationError("graph needs at least 2 vertices");
    for (auto& e : edges_) {
        if (e.i >= n_ || e.j >= n_)
            throw ValidationError("edge (" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) +
                                  ") references a vertex outside 1.." + std::to_string(n_));
        if (e.i == e.j) throw ValidationError("self loop at vertex " + std::to_string(e.i + 1));
        if (!std::isfinite(e.w) || e.w <= 0.0)
            throw ValidationError("edge (" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) +
                                  ") has non-positive or non-finite weight");
        if (e.i > e.j) std::swap(e.i, e.j);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
    for (std::size_t k = 1; k < edges_.size(); ++k) {
        if (edges_[k].i == edges_[k - 1].i && edges_[k].j == edges_[k - 1].j)
            throw ValidationError("duplicate edge (" + std::to_string(edges_[k].i + 1) + "," +
                                  std::to_string(edges_[k].j + 1) + ")");
    }
    adjacency_ = build_adjacency(n_, edges_);
    const auto dist = bfs(adjacency_, 0);
    if (std::any_of(dist.begin(), dist.end(), [](std::size_t d) { return d == std::numeric_limits<std::size_t>::max(); }))
        throw DisconnectedGraphError("graph is not connected");
}

Eigen::VectorXd Graph::degrees() const {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n_));
    for (const auto& e : edges_) {
        d(static_cast<Eigen::Index>(e.i)) += e.w;
        d(static_cast<Eigen::Index>(e.j)) += e.w;
    }
    return d;
}

Eigen::MatrixXd Graph::weight_matrix() const {
    const auto n = static_cast<Eigen::Index>(n_);
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : edges_) {
        W(static_cast<Eigen::Index>(e.i), static_cast<Eigen::Index>(e.j)) = e.w;
        W(static_cast<Eigen::Index>(e.j), static_cast<Eigen::Index>(e.i)) = e.w;
    }
    return W;
}

std::string Graph::label() const {
    std::string s = kind_.name + "(n=" + std::to_string(n_);
    for (const auto& [key, value] : kind_.params) s += "," + key + "=" + format_short(value);
    if (seed_) s += ",seed=" + std::to_string(*seed_);
    return s + ")";
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
}

bool is_connected(std::size_t n, const std::vector<Edge>& edges) {
    if (n == 0) return false;
    for (const auto& e : edges)
        if (e.i >= n || e.j >= n) return false;
    const auto dist = bfs(build_adjacency(n, edges), 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](std::size_t d) { return d == std::numeric_limits<std::size_t>::max(); });
}

Eigen::MatrixXd laplacian(const Graph& g, LaplacianVariant variant) {
    const Eigen::MatrixXd W = g.weight_matrix();
    const Eigen::VectorXd d = W.rowwise().sum();
    Eigen::MatrixXd L = -W;
    L.diagonal() = d;
    if (variant == LaplacianVariant::normalized) {
        Eigen::VectorXd s = d.unaryExpr([](double x) { return x > 0.0 ? 1.0 / std::sqrt(x) : 0.0; });
        L = s.asDiagonal() * L * s.asDiagonal();
        for (Eigen::Index i = 0; i < L.rows(); ++i)
            if (d(i) > 0.0) L(i, i) = 1.0;
    }
    return L;
}

std::vector<std::size_t> hop_distances_from(const Graph& g, std::size_t source) {
    if (source >= g.size()) throw ValidationError("vertex out of range");
    return bfs(g.neighbors(), source);
}

std::size_t hop_distance(const Graph& g, std::size_t i, std::size_t j) {
    if (i >= g.size() || j >= g.size()) throw ValidationError("vertex out of range");
    if (i == j) return 0;
    return bfs(g.neighbors(), i)[j];
}

}  // namespace gsu
