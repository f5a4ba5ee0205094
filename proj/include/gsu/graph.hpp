#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gsu {

// Vertices are 0-based here; files and the CLI use 1-based indices.
struct Edge {
    std::size_t i = 0;
    std::size_t j = 0;
    double w = 1.0;

    bool operator==(const Edge&) const = default;
};

using ParamMap = std::map<std::string, double>;

struct GraphKind {
    std::string name = "custom";
    ParamMap params;

    bool operator==(const GraphKind&) const = default;
};

enum class LaplacianVariant { combinatorial, normalized };

class Graph {
public:
    // Edges are canonicalized to i < j and sorted. Throws ValidationError on
    // self loops, duplicates, bad weights or out-of-range vertices, and
    // DisconnectedGraphError if the graph is not connected.
    Graph(std::size_t n, std::vector<Edge> edges, GraphKind kind = {},
          std::optional<std::uint64_t> seed = std::nullopt);

    std::size_t size() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const GraphKind& kind() const { return kind_; }
    std::optional<std::uint64_t> seed() const { return seed_; }
    const std::vector<std::vector<std::size_t>>& neighbors() const { return adjacency_; }

    Eigen::VectorXd degrees() const;
    Eigen::MatrixXd weight_matrix() const;

    // Short identifier used in reports, e.g. "path(n=64)".
    std::string label() const;

    // Equality is on the vertex count and edge list only.
    bool operator==(const Graph& other) const;

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    GraphKind kind_;
    std::optional<std::uint64_t> seed_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

bool is_connected(std::size_t n, const std::vector<Edge>& edges);

Eigen::MatrixXd laplacian(const Graph& g, LaplacianVariant variant = LaplacianVariant::combinatorial);

std::size_t hop_distance(const Graph& g, std::size_t i, std::size_t j);
std::vector<std::size_t> hop_distances_from(const Graph& g, std::size_t source);

}  // namespace gsu
