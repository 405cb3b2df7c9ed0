#include <algorithm>
#include <vector>

#include "doctest.h"

#include "core/error.hpp"
#include "core/graph.hpp"
#include "oracles.hpp"

using namespace mostar;

TEST_SUITE("graph") {
    TEST_CASE("construction validates input") {
        CHECK_THROWS_AS(Graph(2, {{0, 0}}), DomainError);
        CHECK_THROWS_AS(Graph(2, {{0, 2}}), DomainError);
        CHECK_THROWS_AS(Graph(2, {{-1, 0}}), DomainError);
        CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), DomainError);
        CHECK_THROWS_AS(Graph(-1, {}), DomainError);
    }

    TEST_CASE("adjacency on a path") {
        Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
        CHECK(p4.order() == 4);
        CHECK(p4.size() == 3);
        CHECK(p4.degree(0) == 1);
        CHECK(p4.degree(1) == 2);
        CHECK(p4.has_edge(1, 2));
        CHECK(p4.has_edge(2, 1));
        CHECK_FALSE(p4.has_edge(0, 3));
        auto around = p4.neighbors(1);
        CHECK(std::vector<int>(around.begin(), around.end()) == std::vector<int>{0, 2});
    }

    TEST_CASE("edges come back sorted") {
        Graph g(4, {{2, 3}, {0, 1}, {3, 1}});
        std::vector<Edge> expected{{0, 1}, {1, 3}, {2, 3}};
        CHECK(g.edges() == expected);
    }

    TEST_CASE("bfs distances") {
        Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
        CHECK(bfs_distances(p4, 0) == std::vector<int>{0, 1, 2, 3});
        CHECK(bfs_distances(p4, 2) == std::vector<int>{2, 1, 0, 1});
        Graph split(4, {{0, 1}, {2, 3}});
        auto dist = bfs_distances(split, 0);
        CHECK(dist[1] == 1);
        CHECK(dist[2] == kUnreachable);
        CHECK(dist[3] == kUnreachable);
    }

    TEST_CASE("connectivity") {
        CHECK(is_connected(Graph(0, {})));
        CHECK(is_connected(Graph(1, {})));
        CHECK_FALSE(is_connected(Graph(2, {})));
        CHECK(is_connected(Graph(3, {{0, 1}, {1, 2}})));
        CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    }

    TEST_CASE("cut edges match deletion oracle on all connected graphs up to n = 6") {
        for (int n = 2; n <= 6; ++n)
            for (const Graph& g : oracle::all_graphs(n)) {
                if (!is_connected(g)) continue;
                CHECK(cut_edges(g) == oracle::naive_bridges(g));
            }
    }

    TEST_CASE("pendent edges") {
        Graph s4(4, {{0, 1}, {0, 2}, {0, 3}});
        for (const Edge& e : s4.edges()) CHECK(is_pendent_edge(s4, e));
        Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
        CHECK(is_pendent_edge(p4, {0, 1}));
        CHECK_FALSE(is_pendent_edge(p4, {1, 2}));
    }

    TEST_CASE("join keeps the first graph's labels and appends the rest") {
        Graph c3(3, {{0, 1}, {1, 2}, {0, 2}});
        Graph p3(3, {{0, 1}, {1, 2}});
        Graph joined = join_at(c3, 0, p3, 1);
        CHECK(joined.order() == 5);
        CHECK(joined.size() == 5);
        std::vector<Edge> expected{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}};
        CHECK(joined.edges() == expected);
    }

    TEST_CASE("join size arithmetic") {
        Graph k2(2, {{0, 1}});
        Graph joined = join_at(k2, 1, k2, 0);
        CHECK(joined.order() == 3);
        CHECK(joined.size() == 2);
        CHECK(is_connected(joined));
        CHECK_THROWS_AS(join_at(k2, 2, k2, 0), DomainError);
        CHECK_THROWS_AS(join_at(k2, 0, k2, -1), DomainError);
    }
}
