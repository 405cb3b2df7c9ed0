#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "core/canonical.hpp"
#include "core/families.hpp"
#include "core/graph.hpp"
#include "core/graph6.hpp"
#include "oracles.hpp"

using namespace mostar;

TEST_SUITE("canonical") {
    TEST_CASE("relabeling leaves the canonical form unchanged") {
        std::mt19937_64 rng(7);
        std::vector<Graph> samples = {
            Graph(4, {{0, 1}, {1, 2}, {2, 3}}),
            make_basic(FamilyKind::Star, 6),
            make_basic(FamilyKind::Cycle, 7),
            make_b_family(FamilyKind::B5, 9),
            make_b_family(FamilyKind::B, 10),
        };
        for (const Graph& g : samples) {
            CanonicalForm base = canonical_form(g);
            std::vector<int> perm(g.order());
            std::iota(perm.begin(), perm.end(), 0);
            for (int trial = 0; trial < 30; ++trial) {
                std::shuffle(perm.begin(), perm.end(), rng);
                CHECK(canonical_form(oracle::apply_permutation(g, perm)) == base);
            }
        }
    }

    TEST_CASE("canonical graph is an isomorphic relabeling") {
        for (const Graph& g : oracle::all_graphs(5)) {
            Graph repr = canonical_graph(g);
            CHECK(repr.order() == g.order());
            CHECK(repr.size() == g.size());
            CHECK(oracle::isomorphic(repr, g));
            CHECK(canonical_form(repr) == canonical_form(g));
        }
    }

    TEST_CASE("canonical form bytes decode to the representative") {
        Graph g = make_b_family(FamilyKind::B3, 8);
        CanonicalForm form = canonical_form(g);
        Graph repr = graph6_decode(form.bytes);
        CHECK(graph6_encode(canonical_graph(g)) == form.bytes);
        CHECK(oracle::isomorphic(repr, g));
    }

    TEST_CASE("class counts on small vertex sets") {
        // Unlabeled simple graphs on 3, 4, 5 vertices.
        const int expected[] = {4, 11, 34};
        for (int n = 3; n <= 5; ++n) {
            std::vector<std::string> keys;
            for (const Graph& g : oracle::all_graphs(n)) keys.push_back(canonical_form(g).bytes);
            std::sort(keys.begin(), keys.end());
            keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
            CHECK(static_cast<int>(keys.size()) == expected[n - 3]);
        }
    }

    TEST_CASE("canonical equality agrees with the permutation oracle on n = 4") {
        std::vector<Graph> graphs = oracle::all_graphs(4);
        for (std::size_t i = 0; i < graphs.size(); ++i)
            for (std::size_t j = i + 1; j < graphs.size(); ++j) {
                bool same = canonical_form(graphs[i]) == canonical_form(graphs[j]);
                CHECK(same == oracle::isomorphic(graphs[i], graphs[j]));
            }
    }

    TEST_CASE("canonical equality agrees with the permutation oracle on n = 5") {
        std::vector<Graph> graphs = oracle::all_graphs(5);
        // Group by size first; different sizes are never isomorphic.
        std::map<int, std::vector<std::pair<const Graph*, std::string>>> by_size;
        for (const Graph& g : graphs)
            by_size[g.size()].emplace_back(&g, canonical_form(g).bytes);
        long long mismatches = 0;
        for (const auto& [m, group] : by_size)
            for (std::size_t i = 0; i < group.size(); ++i)
                for (std::size_t j = i + 1; j < group.size(); ++j) {
                    bool same = group[i].second == group[j].second;
                    if (same != oracle::isomorphic(*group[i].first, *group[j].first))
                        ++mismatches;
                }
        CHECK(mismatches == 0);
    }
}
