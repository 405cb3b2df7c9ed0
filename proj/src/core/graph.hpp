#pragma once

#include <compare>
#include <span>
#include <vector>

#include "core/error.hpp"

namespace mostar {

// Unordered vertex pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    // Normalizes endpoint order and sorts the edge list.
    // Rejects loops, duplicate edges, and out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;   // sorted by (u, v)
    std::vector<int> adj_;      // concatenated sorted neighbor lists
    std::vector<int> offset_;   // n_ + 1 prefix offsets into adj_
};

inline constexpr int kUnreachable = -1;

// Distances from s; kUnreachable marks vertices in other components.
std::vector<int> bfs_distances(const Graph& g, int s);

// n = 0 counts as connected.
bool is_connected(const Graph& g);

// Bridges of a connected graph, sorted by (u, v).
std::vector<Edge> cut_edges(const Graph& g);

bool is_pendent_edge(const Graph& g, Edge e);

// Identifies v2 of g2 with v1 of g1. g1 keeps its labels; the remaining
// vertices of g2 are appended in label order, so the result is reproducible
// byte for byte.
Graph join_at(const Graph& g1, int v1, const Graph& g2, int v2);

}  // namespace mostar
