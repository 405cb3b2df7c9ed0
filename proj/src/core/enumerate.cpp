#include "core/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <set>

#include "core/canonical.hpp"
#include "core/graph6.hpp"
#include "core/parallel.hpp"

namespace mostar {

namespace {

// Canonical graph6 keys in, canonical representatives out.
std::vector<Graph> decode_sorted_unique(std::vector<std::string>&& keys) {
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<Graph> out;
    out.reserve(keys.size());
    for (const std::string& key : keys) out.push_back(graph6_decode(key));
    return out;
}

std::vector<Edge> non_edges(const Graph& g) {
    std::vector<Edge> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) out.push_back({u, v});
    return out;
}

// Augments each seed tree by `extra` non-edges in every way, canonicalizes,
// and merges worker outputs deterministically.
std::vector<Graph> augment_trees(const std::vector<Graph>& trees, int extra, int jobs) {
    std::vector<std::vector<std::string>> parts(resolve_jobs(jobs));
    parallel_chunks(jobs, static_cast<long long>(trees.size()),
                    [&](int worker, long long begin, long long end) {
                        std::vector<std::string>& keys = parts[worker];
                        for (long long i = begin; i < end; ++i) {
                            const Graph& tree = trees[i];
                            auto candidates = non_edges(tree);
                            if (extra == 1) {
                                for (const Edge& e : candidates) {
                                    std::vector<Edge> edges = tree.edges();
                                    edges.push_back(e);
                                    keys.push_back(
                                        canonical_form(Graph(tree.order(), std::move(edges))).bytes);
                                }
                            } else {
                                for (size_t a = 0; a < candidates.size(); ++a)
                                    for (size_t b = a + 1; b < candidates.size(); ++b) {
                                        std::vector<Edge> edges = tree.edges();
                                        edges.push_back(candidates[a]);
                                        edges.push_back(candidates[b]);
                                        keys.push_back(
                                            canonical_form(Graph(tree.order(), std::move(edges)))
                                                .bytes);
                                    }
                            }
                        }
                    });
    std::vector<std::string> merged;
    for (auto& part : parts)
        merged.insert(merged.end(), std::make_move_iterator(part.begin()),
                      std::make_move_iterator(part.end()));
    return decode_sorted_unique(std::move(merged));
}

// Walks a degree-2 chain in the pendant-free core, marking edges used.
// Returns the reached branch vertex and the chain length.
struct Chain {
    int end;
    int length;
};

Chain walk_chain(const Graph& g, const std::vector<int>& core_degree, int hub, int first,
                 std::set<std::pair<int, int>>& used) {
    auto mark = [&](int a, int b) { used.insert({std::min(a, b), std::max(a, b)}); };
    mark(hub, first);
    int prev = hub;
    int cur = first;
    int length = 1;
    while (core_degree[cur] == 2) {
        int next = -1;
        for (int w : g.neighbors(cur))
            if (core_degree[w] > 0 && w != prev) next = w;
        mark(cur, next);
        prev = cur;
        cur = next;
        ++length;
    }
    return {cur, length};
}

}  // namespace

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1) throw DomainError("trees need n >= 1");
    std::vector<Graph> level = {Graph(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::vector<std::string> keys;
        for (const Graph& tree : level)
            for (int v = 0; v < tree.order(); ++v) {
                std::vector<Edge> edges = tree.edges();
                edges.push_back({v, tree.order()});
                keys.push_back(canonical_form(Graph(tree.order() + 1, std::move(edges))).bytes);
            }
        level = decode_sorted_unique(std::move(keys));
    }
    return level;
}

std::vector<Graph> enumerate_unicyclic(int m, int jobs) {
    if (m < 3) throw DomainError("unicyclic graphs need m >= 3");
    return augment_trees(enumerate_trees(m), 1, jobs);
}

std::vector<Graph> enumerate_bicyclic(int m, int jobs) {
    if (m < 4) throw DomainError("bicyclic graphs need m >= 4");
    return augment_trees(enumerate_trees(m - 1), 2, jobs);
}

std::vector<Graph> brute_force_oracle(int n, int m) {
    if (n < 0 || m < 0) throw DomainError("counts must be non-negative");
    if (n > 7) throw DomainError("oracle refuses n > 7");
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
    if (m > static_cast<int>(slots.size())) return {};

    std::vector<std::string> keys;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        if (std::popcount(mask) != m) continue;
        std::vector<Edge> edges;
        edges.reserve(m);
        for (size_t i = 0; i < slots.size(); ++i)
            if (mask & (1u << i)) edges.push_back(slots[i]);
        Graph g(n, std::move(edges));
        if (!is_connected(g)) continue;
        keys.push_back(canonical_form(g).bytes);
    }
    return decode_sorted_unique(std::move(keys));
}

BicyclicClass classify_bicyclic(const Graph& g) {
    if (g.size() != g.order() + 1 || !is_connected(g))
        throw DomainError("classify_bicyclic needs a connected graph with m = n + 1");

    // Strip pendants; core_degree > 0 marks survivors with their core degree.
    std::vector<int> core_degree(g.order());
    for (int v = 0; v < g.order(); ++v) core_degree[v] = g.degree(v);
    std::queue<int> leaves;
    for (int v = 0; v < g.order(); ++v)
        if (core_degree[v] == 1) leaves.push(v);
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop();
        core_degree[v] = 0;
        for (int w : g.neighbors(v))
            if (core_degree[w] > 0 && --core_degree[w] == 1) leaves.push(w);
    }

    std::vector<int> branch;  // core vertices of degree 3 or 4
    for (int v = 0; v < g.order(); ++v) {
        if (core_degree[v] > 2) branch.push_back(v);
        if (core_degree[v] < 0 || core_degree[v] == 1 || core_degree[v] > 4)
            throw DomainError("unexpected core degree in bicyclic graph");
    }

    std::set<std::pair<int, int>> used;
    BicyclicClass result{};
    if (branch.size() == 1 && core_degree[branch[0]] == 4) {
        // Two cycles sharing one vertex.
        int hub = branch[0];
        std::vector<int> lengths;
        for (int x : g.neighbors(hub)) {
            if (core_degree[x] == 0 || used.count({std::min(hub, x), std::max(hub, x)})) continue;
            Chain chain = walk_chain(g, core_degree, hub, x, used);
            if (chain.end != hub) throw DomainError("unexpected core shape");
            lengths.push_back(chain.length);
        }
        if (lengths.size() != 2) throw DomainError("unexpected core shape");
        std::sort(lengths.begin(), lengths.end());
        result.kind = BicyclicKind::G1;
        result.cycles = {lengths[0], lengths[1]};
        return result;
    }
    if (branch.size() != 2 || core_degree[branch[0]] != 3 || core_degree[branch[1]] != 3)
        throw DomainError("unexpected core shape");

    int u = branch[0];
    int v = branch[1];
    std::vector<Chain> chains;
    for (int x : g.neighbors(u)) {
        if (core_degree[x] == 0 || used.count({std::min(u, x), std::max(u, x)})) continue;
        chains.push_back(walk_chain(g, core_degree, u, x, used));
    }
    bool all_to_v = chains.size() == 3 && std::all_of(chains.begin(), chains.end(),
                                                      [&](const Chain& c) { return c.end == v; });
    if (all_to_v) {
        std::array<int, 3> brace{chains[0].length, chains[1].length, chains[2].length};
        std::sort(brace.begin(), brace.end());
        result.kind = BicyclicKind::G2;
        result.brace = brace;
        return result;
    }

    // Dumbbell: u carries its own cycle plus the path toward v's cycle.
    std::vector<int> lengths;
    for (const Chain& c : chains)
        if (c.end == u) lengths.push_back(c.length);
    for (int x : g.neighbors(v)) {
        if (core_degree[x] == 0 || used.count({std::min(v, x), std::max(v, x)})) continue;
        Chain chain = walk_chain(g, core_degree, v, x, used);
        if (chain.end == v) lengths.push_back(chain.length);
    }
    if (lengths.size() != 2) throw DomainError("unexpected core shape");
    std::sort(lengths.begin(), lengths.end());
    result.kind = BicyclicKind::G1;
    result.cycles = {lengths[0], lengths[1]};
    return result;
}

}  // namespace mostar
