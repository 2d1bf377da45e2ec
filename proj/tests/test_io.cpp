#include <doctest.h>

#include <string>
#include <vector>

#include "ndl/errors.hpp"
#include "ndl/graph.hpp"
#include "ndl/io.hpp"
#include "ndl/oracle.hpp"
#include "ndl/realization.hpp"
#include "ndl/reconstruction.hpp"
#include "ndl/tableau.hpp"

using ndl::Graph;
using ndl::parse_error;
using ndl::Tableau;

namespace {

Graph pendant_on_square() {
    return Graph(5, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("edge list codec") {
    Graph g = pendant_on_square();
    CHECK(ndl::to_edge_list(g) == "5 5\n0 1\n0 2\n0 4\n1 3\n2 3\n");
    CHECK(ndl::graph_from_edge_list(ndl::to_edge_list(g)) == g);
    CHECK(ndl::graph_from_edge_list("3 0\n") == Graph(3, {}));
    CHECK(ndl::graph_from_edge_list("0 0\n") == Graph(0, {}));
    CHECK(ndl::graph_from_edge_list("2 1\n\n1 0\n\n") == Graph(2, {{0, 1}}));

    CHECK_THROWS_AS(ndl::graph_from_edge_list(""), parse_error);
    CHECK_THROWS_AS(ndl::graph_from_edge_list("2\n"), parse_error);
    CHECK_THROWS_AS(ndl::graph_from_edge_list("2 1\n"), parse_error);
    CHECK_THROWS_AS(ndl::graph_from_edge_list("2 1\n0 1\n0 1\n"), parse_error);
    CHECK_THROWS_AS(ndl::graph_from_edge_list("2 1\n0 2\n"), parse_error);
    CHECK_THROWS_AS(ndl::graph_from_edge_list("2 1\n0 0\n"), parse_error);
    CHECK_THROWS_AS(ndl::graph_from_edge_list("2 1\n0 x\n"), parse_error);
    CHECK_THROWS_AS(ndl::graph_from_edge_list("-1 0\n"), parse_error);
    CHECK_THROWS_AS(ndl::graph_from_edge_list("2 1\n0 1 2\n"), parse_error);
}

TEST_CASE("graph6 encoding") {
    CHECK(ndl::to_graph6(pendant_on_square()) == "Dr_");
    CHECK(ndl::to_graph6(Graph(0, {})) == "?");
    CHECK(ndl::to_graph6(Graph(1, {})) == "@");
    CHECK(ndl::to_graph6(Graph(2, {{0, 1}})) == "A_");
    CHECK(ndl::to_graph6(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) ==
          "C~");
    CHECK(ndl::graph_from_graph6("Cl") ==
          Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    // As in countless text files: stray prefix and trailing newline.
    CHECK(ndl::graph_from_graph6(">>graph6<<Dr_") == pendant_on_square());
    CHECK(ndl::graph_from_graph6("Dr_\n") == pendant_on_square());
}

TEST_CASE("graph6 size-header boundaries") {
    for (int n : {61, 62, 63, 64, 100}) {
        Graph g(n, {{0, 1}, {0, n - 1}, {n - 2, n - 1}});
        CHECK(ndl::graph_from_graph6(ndl::to_graph6(g)) == g);
    }
    CHECK(ndl::to_graph6(Graph(62, {})).substr(0, 1) == "}");
    CHECK(ndl::to_graph6(Graph(63, {})).substr(0, 2) == "~?");
}

TEST_CASE("graph6 round trip at small scale") {
    for (int n = 0; n <= 4; ++n) {
        ndl::oracle::for_each_graph(n, [](const Graph& g) {
            std::string text = ndl::to_graph6(g);
            CHECK(ndl::graph_from_graph6(text) == g);
        });
    }
}

TEST_CASE("graph6 strict rejections") {
    CHECK_THROWS_AS(ndl::graph_from_graph6(""), parse_error);
    CHECK_THROWS_AS(ndl::graph_from_graph6("D"), parse_error);      // data missing
    CHECK_THROWS_AS(ndl::graph_from_graph6("Dr_r"), parse_error);   // data too long
    CHECK_THROWS_AS(ndl::graph_from_graph6("A@"), parse_error);     // nonzero padding
    CHECK_THROWS_AS(ndl::graph_from_graph6("D r_"), parse_error);   // byte below 63
    CHECK_THROWS_AS(ndl::graph_from_graph6("A\x7f"), parse_error);  // byte above 126
    CHECK_THROWS_AS(ndl::graph_from_graph6("~"), parse_error);      // truncated header
    // Sizes below 63 must use the one-byte header.
    CHECK_THROWS_AS(ndl::graph_from_graph6("~??Dr_"), parse_error);
    // Sizes below 258048 must not use the eight-byte header.
    CHECK_THROWS_AS(ndl::graph_from_graph6("~~??????"), parse_error);
    // Vertex counts beyond the supported limit.
    CHECK_THROWS_AS(ndl::graph_from_graph6("~~?C????"), parse_error);
}

TEST_CASE("graph json codec") {
    Graph g = pendant_on_square();
    CHECK(ndl::graph_from_json(ndl::to_json(g)) == g);
    CHECK(ndl::graph_from_json(R"({"n": 3, "edges": [[0,1],[1,2]]})") ==
          Graph(3, {{0, 1}, {1, 2}}));
    CHECK(ndl::graph_from_json(R"({"n": 0, "edges": []})") == Graph(0, {}));

    CHECK_THROWS_AS(ndl::graph_from_json("not json"), parse_error);
    CHECK_THROWS_AS(ndl::graph_from_json(R"({"n": 2})"), parse_error);
    CHECK_THROWS_AS(ndl::graph_from_json(R"({"edges": []})"), parse_error);
    CHECK_THROWS_AS(ndl::graph_from_json(R"({"n": 2, "edges": [[0]]})"), parse_error);
    CHECK_THROWS_AS(ndl::graph_from_json(R"({"n": 2, "edges": [[0,2]]})"), parse_error);
    CHECK_THROWS_AS(ndl::graph_from_json(R"({"n": -1, "edges": []})"), parse_error);
    CHECK_THROWS_AS(ndl::graph_from_json(R"({"n": 2, "edges": [[0,0]]})"), parse_error);
}

TEST_CASE("tableau json codec") {
    Tableau t({{2, 2, 1}, {3, 2}, {3, 2}, {2, 2}, {3}});
    CHECK(ndl::to_json(t) == "[[2,2,1],[3,2],[3,2],[2,2],[3]]");
    CHECK(ndl::tableau_from_json(ndl::to_json(t)) == t);
    CHECK(ndl::tableau_from_json("[]") == Tableau(std::vector<std::vector<int>>{}));
    CHECK(ndl::tableau_from_json("[[],[]]") == Tableau({{}, {}}));
    // Entries resort descending inside each row; row order is kept.
    CHECK(ndl::tableau_from_json("[[1,2],[3]]") == Tableau({{2, 1}, {3}}));

    CHECK_THROWS_AS(ndl::tableau_from_json("{}"), parse_error);
    CHECK_THROWS_AS(ndl::tableau_from_json("[[1,-2]]"), parse_error);
    CHECK_THROWS_AS(ndl::tableau_from_json("[[1], 2]"), parse_error);
    CHECK_THROWS_AS(ndl::tableau_from_json("[[1.5]]"), parse_error);
}

TEST_CASE("switch path json codec") {
    ndl::SwitchPath path{{{1, 4, 0, 3}, {0, 1, 2, 3}}};
    CHECK(ndl::switch_path_from_json(ndl::to_json(path)) == path);
    CHECK(ndl::to_json(ndl::SwitchPath{}) == "[]");
    CHECK(ndl::switch_path_from_json("[]") == ndl::SwitchPath{});
    CHECK(ndl::switch_path_from_json(R"([{"a":1,"b":4,"c":0,"d":3}])") ==
          ndl::SwitchPath{{{1, 4, 0, 3}}});

    CHECK_THROWS_AS(ndl::switch_path_from_json(R"([{"a":1,"b":4,"c":0}])"), parse_error);
    CHECK_THROWS_AS(ndl::switch_path_from_json("{}"), parse_error);
    CHECK_THROWS_AS(ndl::switch_path_from_json("[1]"), parse_error);
}

TEST_CASE("deck text codec") {
    ndl::Deck d = ndl::deck_of(Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(ndl::to_deck_text(d) == "3\nA_\nA_\nA_\n");
    ndl::Deck back = ndl::deck_from_text(ndl::to_deck_text(d));
    REQUIRE(back.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(back.card(i) == d.card(i));

    CHECK_THROWS_AS(ndl::deck_from_text(""), parse_error);
    CHECK_THROWS_AS(ndl::deck_from_text("0\n"), parse_error);
    CHECK_THROWS_AS(ndl::deck_from_text("2\nA_\n"), parse_error);
    CHECK_THROWS_AS(ndl::deck_from_text("1\nA_\nA_\n"), parse_error);
    CHECK_THROWS_AS(ndl::deck_from_text("1\n\x01\n"), parse_error);
    // Cards on mismatched vertex counts parse but do not form a deck.
    CHECK_THROWS_AS(ndl::deck_from_text("2\nA_\n@\n"), ndl::deck_error);
}

TEST_CASE("every n <= 4 graph survives all three codecs") {
    for (int n = 0; n <= 4; ++n) {
        ndl::oracle::for_each_graph(n, [](const Graph& g) {
            CHECK(ndl::graph_from_edge_list(ndl::to_edge_list(g)) == g);
            CHECK(ndl::graph_from_graph6(ndl::to_graph6(g)) == g);
            CHECK(ndl::graph_from_json(ndl::to_json(g)) == g);
        });
    }
}
