#include "core/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "core/graph6.hpp"

namespace mostar {

namespace {

// Adjacency as per-vertex bitset rows. Nothing caps n; real workloads stay
// well under 64 vertices, where each row is a single word.
struct BitMatrix {
    int n;
    int words;
    std::vector<std::uint64_t> bits;

    explicit BitMatrix(const Graph& g)
        : n(g.order()), words((g.order() + 63) / 64), bits(static_cast<size_t>(n) * words, 0) {
        for (const Edge& e : g.edges()) {
            set(e.u, e.v);
            set(e.v, e.u);
        }
    }

    void set(int i, int j) { bits[static_cast<size_t>(i) * words + j / 64] |= 1ULL << (j % 64); }

    bool get(int i, int j) const {
        return (bits[static_cast<size_t>(i) * words + j / 64] >> (j % 64)) & 1;
    }

    const std::uint64_t* row(int i) const { return bits.data() + static_cast<size_t>(i) * words; }
};

// Ordered partition of the vertex set.
using Cells = std::vector<std::vector<int>>;

// Splits cells by neighbor count into each cell, fragments ordered by count
// ascending, until stable. Every decision depends on counts only, never on
// labels, so isomorphic graphs refine to matching cell sequences.
void refine(const BitMatrix& A, Cells& cells) {
    std::vector<std::uint64_t> mask(A.words);
    std::vector<std::pair<int, int>> keyed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t s = 0; s < cells.size() && !changed; ++s) {
            std::fill(mask.begin(), mask.end(), 0);
            for (int v : cells[s]) mask[v / 64] |= 1ULL << (v % 64);
            for (size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].size() < 2) continue;
                keyed.clear();
                for (int v : cells[c]) {
                    int count = 0;
                    const std::uint64_t* row = A.row(v);
                    for (int w = 0; w < A.words; ++w) count += std::popcount(row[w] & mask[w]);
                    keyed.emplace_back(count, v);
                }
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                if (keyed.front().first == keyed.back().first) continue;

                Cells fragments;
                int run_count = keyed.front().first - 1;
                for (const auto& [count, v] : keyed) {
                    if (count != run_count) {
                        fragments.push_back({});
                        run_count = count;
                    }
                    fragments.back().push_back(v);
                }
                cells.erase(cells.begin() + c);
                cells.insert(cells.begin() + c, fragments.begin(), fragments.end());
                changed = true;
                break;
            }
        }
    }
}

// Disjoint-set over vertices, merged by the given automorphisms.
struct Orbits {
    std::vector<int> parent;

    explicit Orbits(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }
};

struct Searcher {
    const BitMatrix& A;
    std::vector<std::vector<int>> generators;  // automorphisms found at leaf collisions
    std::vector<std::uint8_t> best_key;
    std::vector<int> best_order;  // best_order[i] = input vertex placed at position i
    bool have_best = false;

    explicit Searcher(const BitMatrix& a) : A(a) {}

    std::vector<std::uint8_t> pack_key(const std::vector<int>& order) const {
        int n = A.n;
        std::vector<std::uint8_t> key((static_cast<size_t>(n) * (n - 1) / 2 + 7) / 8, 0);
        size_t bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (A.get(order[i], order[j])) key[bit >> 3] |= static_cast<std::uint8_t>(0x80u >> (bit & 7));
        return key;
    }

    void leaf(const Cells& cells) {
        std::vector<int> order;
        order.reserve(A.n);
        for (const auto& cell : cells) order.push_back(cell[0]);
        auto key = pack_key(order);
        if (!have_best || key < best_key) {
            best_key = std::move(key);
            best_order = std::move(order);
            have_best = true;
            return;
        }
        if (key == best_key) {
            // Equal keys mean both orderings expose the same adjacency matrix,
            // so mapping one onto the other is an automorphism.
            std::vector<int> sigma(A.n);
            bool identity = true;
            for (int i = 0; i < A.n; ++i) {
                sigma[best_order[i]] = order[i];
                identity = identity && best_order[i] == order[i];
            }
            if (!identity) generators.push_back(std::move(sigma));
        }
    }

    // True if v lies in the orbit of an already-tried candidate under the
    // generators that fix every base vertex. Skipping such v is sound: its
    // subtree is the image of an explored one under an automorphism.
    bool in_tried_orbit(int v, const std::vector<int>& tried, const std::vector<int>& base) {
        if (tried.empty() || generators.empty()) return false;
        Orbits orbits(A.n);
        for (const auto& sigma : generators) {
            bool fixes_base = true;
            for (int b : base)
                if (sigma[b] != b) {
                    fixes_base = false;
                    break;
                }
            if (!fixes_base) continue;
            for (int x = 0; x < A.n; ++x) orbits.unite(x, sigma[x]);
        }
        for (int u : tried)
            if (orbits.find(u) == orbits.find(v)) return true;
        return false;
    }

    void search(Cells cells, std::vector<int>& base) {
        refine(A, cells);
        size_t target = cells.size();
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        std::vector<int> candidates = cells[target];
        std::vector<int> tried;
        for (int v : candidates) {
            if (in_tried_orbit(v, tried, base)) continue;
            tried.push_back(v);
            Cells child = cells;
            child[target].clear();
            for (int u : candidates)
                if (u != v) child[target].push_back(u);
            child.insert(child.begin() + target, {v});
            base.push_back(v);
            search(child, base);
            base.pop_back();
        }
    }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
    int n = g.order();
    if (n <= 1) return g;
    BitMatrix A(g);
    Searcher searcher(A);
    Cells cells(1);
    cells[0].resize(n);
    std::iota(cells[0].begin(), cells[0].end(), 0);
    std::vector<int> base;
    searcher.search(std::move(cells), base);

    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[searcher.best_order[i]] = i;
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) edges.push_back({position[e.u], position[e.v]});
    return Graph(n, std::move(edges));
}

CanonicalForm canonical_form(const Graph& g) { return {graph6_encode(canonical_graph(g))}; }

}  // namespace mostar
