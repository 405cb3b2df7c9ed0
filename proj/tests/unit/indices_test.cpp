#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"

#include "core/error.hpp"
#include "core/families.hpp"
#include "core/graph.hpp"
#include "core/indices.hpp"
#include "oracles.hpp"

using namespace mostar;

TEST_SUITE("indices") {
    TEST_CASE("star edge split") {
        Graph s4 = make_basic(FamilyKind::Star, 4);
        EdgeSplit split = edge_split(s4, {0, 1});
        CHECK(split.m_u == 2);
        CHECK(split.m_v == 0);
        CHECK(split.equidistant == 1);
        CHECK(split.psi == 2);
    }

    TEST_CASE("cycle edges are balanced") {
        Graph c4 = make_basic(FamilyKind::Cycle, 4);
        for (const EdgeSplit& split : edge_split_table(c4)) CHECK(split.psi == 0);
        CHECK(edge_mostar(c4) == 0);
        CHECK(mostar::mostar(c4) == 0);
        CHECK(mostar::mostar(make_basic(FamilyKind::Cycle, 7)) == 0);
    }

    TEST_CASE("pendant-heavy cycle vertex") {
        Graph g = make_s_m_r(9, 3);
        EdgeSplit split = edge_split(g, {0, 1});
        CHECK(split.m_u == 7);
        CHECK(split.m_v == 1);
        CHECK(split.equidistant == 1);
        CHECK(split.psi == 6);
    }

    TEST_CASE("path psi profile") {
        Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
        std::vector<int> psis;
        for (const EdgeSplit& split : edge_split_table(p4)) psis.push_back(split.psi);
        CHECK(psis == std::vector<int>{2, 0, 2});
    }

    TEST_CASE("theta cores") {
        std::vector<int> psis;
        for (const EdgeSplit& split : edge_split_table(make_theta(1, 2, 2)))
            psis.push_back(split.psi);
        std::sort(psis.begin(), psis.end());
        CHECK(psis == std::vector<int>{0, 1, 1, 1, 1});
        CHECK(edge_mostar(make_theta(1, 2, 2)) == 4);
        CHECK(edge_mostar(make_theta(2, 2, 2)) == 6);
        CHECK(edge_mostar(make_theta(1, 2, 3)) == 8);
    }

    TEST_CASE("small vertex-version values") {
        CHECK(mostar::mostar(Graph(3, {{0, 1}, {1, 2}})) == 2);
        CHECK(mostar::mostar(make_basic(FamilyKind::Star, 5)) == 12);
    }

    TEST_CASE("star identity across sizes") {
        for (int n = 2; n <= 50; ++n) {
            long long m = n - 1;
            CHECK(edge_mostar(make_basic(FamilyKind::Star, n)) == m * (m - 1));
        }
    }

    TEST_CASE("both indices match the naive oracle on all connected graphs up to n = 6") {
        for (int n = 1; n <= 6; ++n)
            for (const Graph& g : oracle::all_graphs(n)) {
                if (!is_connected(g)) continue;
                CHECK(edge_mostar(g) == oracle::naive_edge_mostar(g));
                CHECK(mostar::mostar(g) == oracle::naive_mostar(g));
            }
    }

    TEST_CASE("split table is consistent") {
        Graph g = make_b_family(FamilyKind::B4, 9);
        long long total = 0;
        for (const EdgeSplit& split : edge_split_table(g)) {
            CHECK(split.m_u + split.m_v + split.equidistant == g.size());
            CHECK(split.equidistant >= 1);
            CHECK(split.psi == std::abs(split.m_u - split.m_v));
            total += split.psi;
        }
        CHECK(total == edge_mostar(g));
    }

    TEST_CASE("disconnected input is refused") {
        Graph split(4, {{0, 1}, {2, 3}});
        CHECK_THROWS_AS(edge_mostar(split), DomainError);
        CHECK_THROWS_AS(mostar::mostar(split), DomainError);
        CHECK_THROWS_AS(edge_split_table(split), DomainError);
    }

    TEST_CASE("csv layout") {
        std::string csv = edge_split_csv(Graph(3, {{0, 1}, {1, 2}}));
        CHECK(csv.substr(0, csv.find('\n')) == "u,v,m_u,m_v,eq,psi");
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
        CHECK(csv.find("0,1,") != std::string::npos);
    }
}
