#include "core/indices.hpp"

#include <cstdlib>
#include <numeric>

namespace mostar {

namespace {

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw DomainError("index is defined for connected graphs only");
}

EdgeSplit split_from_distances(const Graph& g, Edge e, const std::vector<int>& du,
                               const std::vector<int>& dv) {
    EdgeSplit s{e, 0, 0, 0, 0};
    for (const Edge& f : g.edges()) {
        int fu = std::min(du[f.u], du[f.v]);
        int fv = std::min(dv[f.u], dv[f.v]);
        if (fu < fv)
            ++s.m_u;
        else if (fv < fu)
            ++s.m_v;
        else
            ++s.equidistant;
    }
    s.psi = std::abs(s.m_u - s.m_v);
    return s;
}

}  // namespace

EdgeSplit edge_split(const Graph& g, Edge e) {
    require_connected(g);
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!g.has_edge(e.u, e.v)) throw DomainError("edge not in graph");
    return split_from_distances(g, e, bfs_distances(g, e.u), bfs_distances(g, e.v));
}

std::vector<EdgeSplit> edge_split_table(const Graph& g) {
    require_connected(g);
    std::vector<std::vector<int>> dist;
    dist.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) dist.push_back(bfs_distances(g, v));
    std::vector<EdgeSplit> table;
    table.reserve(g.edges().size());
    for (const Edge& e : g.edges()) table.push_back(split_from_distances(g, e, dist[e.u], dist[e.v]));
    return table;
}

std::vector<VertexSplit> vertex_split_table(const Graph& g) {
    require_connected(g);
    std::vector<std::vector<int>> dist;
    dist.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) dist.push_back(bfs_distances(g, v));
    std::vector<VertexSplit> table;
    table.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        VertexSplit s{e, 0, 0, 0, 0};
        for (int w = 0; w < g.order(); ++w) {
            if (dist[e.u][w] < dist[e.v][w])
                ++s.n_u;
            else if (dist[e.v][w] < dist[e.u][w])
                ++s.n_v;
            else
                ++s.equidistant_vertices;
        }
        s.contribution = std::abs(s.n_u - s.n_v);
        table.push_back(s);
    }
    return table;
}

long long edge_mostar(const Graph& g) {
    auto table = edge_split_table(g);
    return std::accumulate(table.begin(), table.end(), 0LL,
                           [](long long acc, const EdgeSplit& s) { return acc + s.psi; });
}

long long mostar(const Graph& g) {
    auto table = vertex_split_table(g);
    return std::accumulate(table.begin(), table.end(), 0LL,
                           [](long long acc, const VertexSplit& s) { return acc + s.contribution; });
}

std::string edge_split_csv(const Graph& g) {
    std::string out = "u,v,m_u,m_v,eq,psi\n";
    for (const EdgeSplit& s : edge_split_table(g)) {
        out += std::to_string(s.edge.u) + "," + std::to_string(s.edge.v) + "," +
               std::to_string(s.m_u) + "," + std::to_string(s.m_v) + "," +
               std::to_string(s.equidistant) + "," + std::to_string(s.psi) + "\n";
    }
    return out;
}

}  // namespace mostar
