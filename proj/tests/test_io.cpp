#include <doctest.h>

#include "fuzzygraph/contraction.hpp"
#include "fuzzygraph/io.hpp"
#include "helpers.hpp"

using namespace fuzzygraph;
using namespace testing;

TEST_CASE("fig1 fixture is canonical") {
    const std::string text = read_text_file(fixture("fig1.fg"));
    CHECK(serialize_fuzzy_graph(parse_fuzzy_graph(text)) == text);
    CHECK(fig1().edge_membership("2", "3") == mu("0.7"));
}

TEST_CASE("golden cut files") {
    for (const char* a : {"0.8", "0.5"}) {
        const std::string golden = read_text_file(fixture(std::string("fig1_cut_") + a + ".cg"));
        CHECK(serialize_crisp_graph(alpha_cut(fig1(), level(a))) == golden);
        CHECK(serialize_crisp_graph(parse_crisp_graph(golden)) == golden);
    }
}

TEST_CASE("round trip of generated and contracted graphs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        FuzzyGraph g = random_fuzzy_graph(seed % 9, 0.5, seed);
        const std::string text = serialize_fuzzy_graph(g);
        CHECK(parse_fuzzy_graph(text) == g);
        CHECK(serialize_fuzzy_graph(parse_fuzzy_graph(text)) == text);
        if (g.edge_count() == 0) continue;
        for (const auto& t : TNorm::all()) {
            FuzzyGraph c = contract_edge(g, g.edges().begin()->first, t).graph;
            CHECK(parse_fuzzy_graph(serialize_fuzzy_graph(c)) == c);
        }
    }
}

TEST_CASE("serialization order does not depend on input order") {
    const char* shuffled = R"({"edges": [{"u": "b", "v": "a", "mu": "0.5"}],
                               "vertices": [{"id": "b", "mu": "1"}, {"id": "a", "mu": "0.50"}]})";
    CHECK(serialize_fuzzy_graph(parse_fuzzy_graph(shuffled)) ==
          "{\n  \"vertices\": [\n    {\n      \"id\": \"a\",\n      \"mu\": \"0.5\"\n    },\n    {\n      \"id\": \"b\",\n"
          "      \"mu\": \"1.0\"\n    }\n  ],\n  \"edges\": [\n    {\n      \"u\": \"a\",\n      \"v\": \"b\",\n"
          "      \"mu\": \"0.5\"\n    }\n  ]\n}\n");
}

TEST_CASE("malformed fuzzy documents") {
    const std::vector<const char*> bad{
        "",
        "[]",
        "{\"vertices\": []}",
        R"({"vertices": [{"id": "a"}], "edges": []})",
        R"({"vertices": [{"id": "a", "mu": 1}], "edges": []})",
        R"({"vertices": [{"id": "a", "mu": "1"}, {"id": "a", "mu": "1"}], "edges": []})",
        R"({"vertices": [{"id": "a", "mu": "1.5"}], "edges": []})",
        R"({"vertices": [{"id": "a", "mu": "1"}], "edges": [{"u": "a", "v": "a", "mu": "0.5"}]})",
        R"({"vertices": [{"id": "a", "mu": "1"}], "edges": [{"u": "a", "v": "b", "mu": "0.5"}]})",
        R"({"vertices": [{"id": "a", "mu": "1"}, {"id": "b", "mu": "1"}],
            "edges": [{"u": "a", "v": "b", "mu": "0.5"}, {"u": "b", "v": "a", "mu": "0.5"}]})",
        R"({"vertices": [{"id": "a", "mu": "1"}, {"id": "b", "mu": "1"}], "edges": [{"u": "a", "v": "b", "mu": "0"}]})",
        R"({"vertices": [{"id": "b+a", "mu": "1"}], "edges": []})",
        R"({"vertices": [{"id": "a+", "mu": "1"}], "edges": []})",
        R"({"vertices": [{"id": "", "mu": "1"}], "edges": []})",
        "{\"vertices\": [ {\"id\": \"a\", \"mu\": \"1\"} ], \"edges\": [",
    };
    for (const char* text : bad) {
        CAPTURE(text);
        CHECK_THROWS_AS(parse_fuzzy_graph(text), ParseError);
    }
    CHECK(parse_fuzzy_graph(R"({"vertices": [{"id": "a+b", "mu": "1"}], "edges": []})").has_vertex("a+b"));
}

TEST_CASE("parser does not enforce the edge bound") {
    FuzzyGraph g = parse_fuzzy_graph(R"({"vertices": [{"id": "a", "mu": "0.3"}, {"id": "b", "mu": "1"}],
                                         "edges": [{"u": "a", "v": "b", "mu": "0.9"}]})");
    CHECK_FALSE(validate(g).ok());
}

TEST_CASE("malformed crisp documents") {
    CHECK_THROWS_AS(parse_crisp_graph(R"({"vertices": [{"id": "a"}], "edges": [{"u": "a", "v": "z"}]})"), ParseError);
    CHECK_THROWS_AS(parse_crisp_graph(R"({"vertices": [{"id": "a"}, {"id": "a"}], "edges": []})"), ParseError);
    CHECK(parse_crisp_graph(serialize_crisp_graph(cycle(5))) == cycle(5));
}

TEST_CASE("missing files") { CHECK_THROWS(read_text_file("/nonexistent/nowhere.fg")); }
