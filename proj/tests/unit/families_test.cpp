#include <vector>

#include "doctest.h"

#include "core/canonical.hpp"
#include "core/error.hpp"
#include "core/families.hpp"
#include "core/graph.hpp"
#include "core/indices.hpp"

using namespace mostar;

namespace {

// Smallest size at which each closed form is actually exact. For B4 the
// member at m = 5 exists but coincides with B3 and misses its own form; for
// B5 the form first holds at m = 7 (the m = 6 member is pinned below).
int form_start(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::B4: return 6;
        case FamilyKind::B5: return 7;
        default: return family_min_size(kind);
    }
}

}  // namespace

TEST_SUITE("families") {
    TEST_CASE("names roundtrip") {
        for (const char* name : {"P", "C", "S", "B", "B1", "B2", "B3", "B4", "B5", "B6"}) {
            auto kind = family_kind_from_name(name);
            REQUIRE(kind.has_value());
            CHECK(family_kind_name(*kind) == name);
        }
        CHECK_FALSE(family_kind_from_name("B7").has_value());
        CHECK_FALSE(family_kind_from_name("").has_value());
        CHECK_FALSE(family_kind_from_name("b1").has_value());
    }

    TEST_CASE("basic shapes") {
        CHECK(make_basic(FamilyKind::Path, 1).order() == 1);
        CHECK(make_basic(FamilyKind::Path, 5).size() == 4);
        CHECK(make_basic(FamilyKind::Cycle, 3).size() == 3);
        CHECK(make_basic(FamilyKind::Star, 7).degree(0) == 6);
        CHECK_THROWS_AS(make_basic(FamilyKind::Cycle, 2), DomainError);
        CHECK_THROWS_AS(make_basic(FamilyKind::B, 9), DomainError);
    }

    TEST_CASE("theta construction") {
        Graph theta = make_theta(1, 2, 2);
        CHECK(theta.order() == 4);
        CHECK(theta.size() == 5);
        Graph k4_minus_edge(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
        CHECK(canonical_form(theta) == canonical_form(k4_minus_edge));
        CHECK(make_theta(2, 2, 2).order() == 5);
        CHECK(make_theta(1, 2, 3).size() == 6);
        CHECK_THROWS_AS(make_theta(1, 1, 2), DomainError);
        CHECK_THROWS_AS(make_theta(0, 2, 2), DomainError);
        CHECK_THROWS_AS(make_theta(2, 1, 3), DomainError);
    }

    TEST_CASE("pendant cycles") {
        Graph g = make_s_m_r(9, 3);
        CHECK(g.order() == 9);
        CHECK(g.size() == 9);
        CHECK(g.degree(0) == 8);
        CHECK(make_s_m_r(4, 4).degree(0) == 2);
        CHECK_THROWS_AS(make_s_m_r(5, 2), DomainError);
        CHECK_THROWS_AS(make_s_m_r(3, 4), DomainError);
    }

    TEST_CASE("b families are bicyclic") {
        for (FamilyKind kind : {FamilyKind::B, FamilyKind::B1, FamilyKind::B2, FamilyKind::B3,
                                FamilyKind::B4, FamilyKind::B5, FamilyKind::B6}) {
            for (int m = family_min_size(kind); m <= family_min_size(kind) + 3; ++m) {
                Graph g = make_b_family(kind, m);
                CHECK(g.size() == m);
                CHECK(g.order() == m - 1);
                CHECK(is_connected(g));
            }
            CHECK_THROWS_AS(make_b_family(kind, family_min_size(kind) - 1), DomainError);
        }
    }

    TEST_CASE("closed forms hold over their exact ranges") {
        for (FamilyKind kind : {FamilyKind::B, FamilyKind::B1, FamilyKind::B2, FamilyKind::B3,
                                FamilyKind::B4, FamilyKind::B5, FamilyKind::B6})
            for (int m = form_start(kind); m <= 60; ++m)
                CHECK(edge_mostar(make_b_family(kind, m)) == expected_value(kind, m));
    }

    TEST_CASE("the B5 form misses its smallest member") {
        CHECK(edge_mostar(make_b_family(FamilyKind::B5, 6)) == 6);
        CHECK(expected_value(FamilyKind::B5, 6) == 2);
    }

    TEST_CASE("spot values") {
        CHECK(expected_value(FamilyKind::B, 10) == 66);
        CHECK(expected_value(FamilyKind::B2, 8) == 34);
        CHECK(expected_value(FamilyKind::B3, 5) == 4);
        CHECK(expected_value(FamilyKind::B4, 13) == 128);
        CHECK(expected_value(FamilyKind::B5, 13) == 128);
        CHECK(expected_value(FamilyKind::B6, 10) == 64);
        CHECK_THROWS_AS(expected_value(FamilyKind::Star, 9), DomainError);
        CHECK_THROWS_AS(expected_value(FamilyKind::B, 7), DomainError);
    }

    TEST_CASE("the two smallest theta families coincide at m = 5") {
        CHECK(canonical_form(make_b_family(FamilyKind::B3, 5)) ==
              canonical_form(make_b_family(FamilyKind::B4, 5)));
        CHECK(edge_mostar(make_b_family(FamilyKind::B3, 5)) == 4);
    }

    TEST_CASE("form validity floor is published per family") {
        CHECK(family_form_min_size(FamilyKind::B4) == 6);
        CHECK(family_form_min_size(FamilyKind::B5) == 6);
        CHECK(family_form_min_size(FamilyKind::B3) == 5);
        CHECK(family_form_min_size(FamilyKind::B) == 8);
    }
}
