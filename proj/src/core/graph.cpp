#include "core/graph.hpp"

#include <algorithm>
#include <queue>
#include <utility>

namespace mostar {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw DomainError("vertex count must be non-negative");
    for (Edge& e : edges_) {
        if (e.u == e.v) throw DomainError("loop edge at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw DomainError("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + ") with n=" + std::to_string(n_));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw DomainError("duplicate edge");

    std::vector<int> deg(n_, 0);
    for (const Edge& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    offset_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + deg[v];
    adj_.resize(offset_[n_]);
    std::vector<int> fill(offset_.begin(), offset_.end() - 1);
    for (const Edge& e : edges_) {
        adj_[fill[e.u]++] = e.v;
        adj_[fill[e.v]++] = e.u;
    }
    // Neighbor lists must be sorted so has_edge can binary-search.
    for (int v = 0; v < n_; ++v)
        std::sort(adj_.begin() + offset_[v], adj_.begin() + offset_[v + 1]);
}

std::span<const int> Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
    return {adj_.data() + offset_[v], static_cast<size_t>(offset_[v + 1] - offset_[v])};
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    auto nu = neighbors(u);
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<int> bfs_distances(const Graph& g, int s) {
    if (s < 0 || s >= g.order()) throw DomainError("source vertex out of range");
    std::vector<int> dist(g.order(), kUnreachable);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (dist[w] != kUnreachable) continue;
            dist[w] = dist[v] + 1;
            q.push(w);
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

std::vector<Edge> cut_edges(const Graph& g) {
    if (!is_connected(g)) throw DomainError("cut_edges requires a connected graph");
    int n = g.order();
    std::vector<Edge> bridges;
    if (n == 0) return bridges;

    // Iterative low-link DFS. Each frame may skip its parent once; a simple
    // graph has no second parallel copy of the tree edge.
    struct Frame {
        int v;
        int parent;
        size_t next;
    };
    std::vector<int> entry(n, -1), low(n, 0);
    int timer = 0;
    std::vector<Frame> stack;
    stack.push_back({0, -1, 0});
    entry[0] = low[0] = timer++;
    while (!stack.empty()) {
        Frame& f = stack.back();
        auto nbrs = g.neighbors(f.v);
        if (f.next < nbrs.size()) {
            int w = nbrs[f.next++];
            if (w == f.parent) {
                f.parent = -1;
                continue;
            }
            if (entry[w] != -1) {
                low[f.v] = std::min(low[f.v], entry[w]);
                continue;
            }
            entry[w] = low[w] = timer++;
            stack.push_back({w, f.v, 0});
        } else {
            int v = f.v;
            stack.pop_back();
            if (!stack.empty()) {
                int p = stack.back().v;
                low[p] = std::min(low[p], low[v]);
                if (low[v] > entry[p]) bridges.push_back(v < p ? Edge{v, p} : Edge{p, v});
            }
        }
    }
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

bool is_pendent_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v)) throw DomainError("edge not in graph");
    return g.degree(e.u) == 1 || g.degree(e.v) == 1;
}

Graph join_at(const Graph& g1, int v1, const Graph& g2, int v2) {
    if (v1 < 0 || v1 >= g1.order()) throw DomainError("join vertex out of range in first graph");
    if (v2 < 0 || v2 >= g2.order()) throw DomainError("join vertex out of range in second graph");
    int n1 = g1.order();
    auto map2 = [&](int w) {
        if (w == v2) return v1;
        return w < v2 ? n1 + w : n1 + w - 1;
    };
    std::vector<Edge> edges = g1.edges();
    edges.reserve(edges.size() + g2.edges().size());
    for (const Edge& e : g2.edges()) edges.push_back({map2(e.u), map2(e.v)});
    return Graph(n1 + g2.order() - 1, std::move(edges));
}

}  // namespace mostar
