#pragma once

#include <string>
#include <vector>

#include "core/graph.hpp"

namespace mostar {

// Edge-side distance split for one edge uv. The distance from a vertex x to
// an edge f is the smaller of the distances from x to f's endpoints; the
// edge uv itself is always equidistant.
struct EdgeSplit {
    Edge edge;
    int m_u = 0;         // edges strictly closer to u
    int m_v = 0;         // edges strictly closer to v
    int equidistant = 0;  // the rest, never zero
    int psi = 0;          // |m_u - m_v|
};

// Vertex-side split for one edge uv; each endpoint is closer to itself.
struct VertexSplit {
    Edge edge;
    int n_u = 0;
    int n_v = 0;
    int equidistant_vertices = 0;
    int contribution = 0;  // |n_u - n_v|
};

EdgeSplit edge_split(const Graph& g, Edge e);

// One row per edge, ordered by (u, v); psi values sum to edge_mostar(g).
std::vector<EdgeSplit> edge_split_table(const Graph& g);

std::vector<VertexSplit> vertex_split_table(const Graph& g);

long long edge_mostar(const Graph& g);

long long mostar(const Graph& g);

// CSV with header u,v,m_u,m_v,eq,psi and one row per edge.
std::string edge_split_csv(const Graph& g);

}  // namespace mostar
