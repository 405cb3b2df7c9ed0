#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"

#include "mostar/mostar.h"

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    mog_string_free(s);
    return out;
}

extern "C" int collect_line(const char* line, void* user) {
    static_cast<std::vector<std::string>*>(user)->push_back(line);
    return 0;
}

extern "C" int stop_after_one(const char* line, void* user) {
    static_cast<std::vector<std::string>*>(user)->push_back(line);
    return 1;
}

}  // namespace

TEST_SUITE("capi") {
    TEST_CASE("graph lifecycle") {
        mog_graph* g = nullptr;
        REQUIRE(mog_graph_from_graph6("Bg", &g) == MOG_OK);
        CHECK(mog_graph_order(g) == 3);
        CHECK(mog_graph_size(g) == 2);
        char* text = nullptr;
        REQUIRE(mog_graph_to_graph6(g, &text) == MOG_OK);
        CHECK(take(text) == "Bg");
        char* canon = nullptr;
        REQUIRE(mog_canonical_graph6(g, &canon) == MOG_OK);
        CHECK_FALSE(take(canon).empty());
        mog_graph_free(g);
        mog_graph_free(nullptr);
        mog_string_free(nullptr);
    }

    TEST_CASE("parse errors carry a byte offset") {
        mog_graph* g = nullptr;
        CHECK(mog_graph_from_graph6("B", &g) == MOG_ERROR_PARSE);
        CHECK(g == nullptr);
        CHECK(std::string(mog_last_error()).find("(byte 1)") != std::string::npos);
    }

    TEST_CASE("null arguments are rejected") {
        mog_graph* g = nullptr;
        CHECK(mog_graph_from_graph6(nullptr, &g) == MOG_ERROR_INVALID_ARGUMENT);
        CHECK(mog_graph_from_graph6("Bg", nullptr) == MOG_ERROR_INVALID_ARGUMENT);
        CHECK(mog_graph_to_graph6(nullptr, nullptr) == MOG_ERROR_INVALID_ARGUMENT);
        CHECK(mog_graph_order(nullptr) == -1);
        CHECK(mog_graph_size(nullptr) == -1);
        long long value = 0;
        CHECK(mog_edge_mostar_index(nullptr, &value) == MOG_ERROR_INVALID_ARGUMENT);
        CHECK(mog_enumerate("tree", 3, 1, nullptr, nullptr) == MOG_ERROR_INVALID_ARGUMENT);
    }

    TEST_CASE("families and their published values") {
        mog_graph* g = nullptr;
        REQUIRE(mog_make_family("B", 10, &g) == MOG_OK);
        CHECK(mog_graph_size(g) == 10);
        long long value = 0;
        REQUIRE(mog_edge_mostar_index(g, &value) == MOG_OK);
        CHECK(value == 66);
        long long expected = 0;
        REQUIRE(mog_family_expected_edge_mostar("B", 10, &expected) == MOG_OK);
        CHECK(expected == 66);
        mog_graph_free(g);

        CHECK(mog_make_family("Q", 10, &g) == MOG_ERROR_INVALID_ARGUMENT);
        CHECK(mog_make_family("B5", 5, &g) == MOG_ERROR_DOMAIN);
    }

    TEST_CASE("cycle-with-pendants and theta constructors") {
        mog_graph* g = nullptr;
        REQUIRE(mog_make_smr(9, 3, &g) == MOG_OK);
        CHECK(mog_graph_order(g) == 9);
        CHECK(mog_graph_size(g) == 9);
        mog_graph_free(g);
        CHECK(mog_make_smr(4, 5, &g) == MOG_ERROR_DOMAIN);

        REQUIRE(mog_make_theta(1, 2, 2, &g) == MOG_OK);
        CHECK(mog_graph_order(g) == 4);
        CHECK(mog_graph_size(g) == 5);
        mog_graph_free(g);
        CHECK(mog_make_theta(2, 1, 3, &g) == MOG_ERROR_DOMAIN);
    }

    TEST_CASE("vertex index of a path") {
        mog_graph* g = nullptr;
        REQUIRE(mog_make_family("P", 3, &g) == MOG_OK);
        long long value = 0;
        REQUIRE(mog_mostar_index(g, &value) == MOG_OK);
        CHECK(value == 2);
        mog_graph_free(g);
    }

    TEST_CASE("per-edge table") {
        mog_graph* g = nullptr;
        REQUIRE(mog_make_family("P", 3, &g) == MOG_OK);
        char* csv = nullptr;
        REQUIRE(mog_edge_split_csv(g, &csv) == MOG_OK);
        std::string text = take(csv);
        CHECK(text.rfind("u,v,m_u,m_v,eq,psi\n", 0) == 0);
        mog_graph_free(g);
    }

    TEST_CASE("disconnected input is a domain error") {
        mog_graph* g = nullptr;
        REQUIRE(mog_graph_from_graph6("A?", &g) == MOG_OK);
        long long value = 0;
        CHECK(mog_edge_mostar_index(g, &value) == MOG_ERROR_DOMAIN);
        mog_graph_free(g);
    }

    TEST_CASE("enumeration streams lines") {
        std::vector<std::string> lines;
        REQUIRE(mog_enumerate("unicyclic", 5, 1, collect_line, &lines) == MOG_OK);
        CHECK(lines.size() == 5);

        lines.clear();
        REQUIRE(mog_enumerate("unicyclic", 5, 1, stop_after_one, &lines) == MOG_OK);
        CHECK(lines.size() == 1);

        CHECK(mog_enumerate("lattice", 5, 1, collect_line, &lines) == MOG_ERROR_INVALID_ARGUMENT);
        CHECK(mog_enumerate("tree", -1, 1, collect_line, &lines) == MOG_ERROR_DOMAIN);
    }

    TEST_CASE("verification reports") {
        char* json = nullptr;
        REQUIRE(mog_verify_json("unicyclic", 4, nullptr, &json) == MOG_OK);
        std::string text = take(json);
        CHECK(text.find("\"max\": 5") != std::string::npos);
        CHECK(text.find("\"value_match\": true") != std::string::npos);

        mog_verify_options options = {1, 7, 10, 0};
        REQUIRE(mog_verify_json("shifts", 0, &options, &json) == MOG_OK);
        CHECK(take(json).find("\"population\": 90") != std::string::npos);

        CHECK(mog_verify_json("everything", 5, nullptr, &json) == MOG_ERROR_INVALID_ARGUMENT);
        CHECK(mog_verify_json("bicyclic", 20, nullptr, &json) == MOG_ERROR_DOMAIN);
    }

    TEST_CASE("ranged verification emits csv") {
        char* csv = nullptr;
        REQUIRE(mog_verify_range_csv("unicyclic", 3, 5, nullptr, &csv) == MOG_OK);
        std::string text = take(csv);
        CHECK(text.rfind("m,kind,population,max,expected,value_match,argmax_match\n", 0) == 0);
        int lines = 0;
        for (char c : text)
            if (c == '\n') ++lines;
        CHECK(lines == 4);
        CHECK(mog_verify_range_csv("unicyclic", 5, 3, nullptr, &csv) == MOG_ERROR_DOMAIN);
    }

    TEST_CASE("disproof csv") {
        char* csv = nullptr;
        REQUIRE(mog_disprove_csv(20, 20, &csv) == MOG_OK);
        CHECK(take(csv) == "m,B,B5,diff\n20,356,352,4\n");
        CHECK(mog_disprove_csv(5, 20, &csv) == MOG_ERROR_DOMAIN);
    }
}
