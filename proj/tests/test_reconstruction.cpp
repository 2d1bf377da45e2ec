#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "ndl/errors.hpp"
#include "ndl/graph.hpp"
#include "ndl/oracle.hpp"
#include "ndl/reconstruction.hpp"
#include "ndl/tableau.hpp"

using ndl::Deck;
using ndl::Graph;

namespace {

Graph k3() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }
Graph p4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("deck construction and validation") {
    Deck d = ndl::deck_of(k3());
    CHECK(d.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(d.card(i) == Graph(2, {{0, 1}}));

    Deck p = ndl::deck_of(Graph(3, {{0, 1}, {1, 2}}));
    CHECK(p.card(0) == Graph(2, {{0, 1}}));  // delete 0, keep 1-2
    CHECK(p.card(1) == Graph(2, {}));
    CHECK(p.card(2) == Graph(2, {{0, 1}}));

    CHECK(ndl::deck_of(Graph(1, {})).size() == 1);
    CHECK_THROWS_AS(ndl::deck_of(Graph(0, {})), std::invalid_argument);
    CHECK_THROWS_AS(Deck(std::vector<Graph>{}), ndl::deck_error);
    CHECK_THROWS_AS(Deck({Graph(2, {}), Graph(1, {})}), ndl::deck_error);
    CHECK_THROWS_AS(d.card(3), std::invalid_argument);
}

TEST_CASE("edge count from deck") {
    CHECK(ndl::edge_count_from_deck(ndl::deck_of(k3())) == 3);
    CHECK(ndl::edge_count_from_deck(ndl::deck_of(p4())) == 3);
    CHECK(ndl::edge_count_from_deck(ndl::deck_of(Graph(4, {}))) == 0);

    // 3 card edges across a 4-card deck: not divisible by n-2 = 2.
    Deck bad({k3(), Graph(3, {}), Graph(3, {}), Graph(3, {})});
    CHECK_THROWS_AS(ndl::edge_count_from_deck(bad), ndl::deck_error);
    // Too few cards to invert the count.
    Deck tiny({Graph(1, {}), Graph(1, {})});
    CHECK_THROWS_AS(ndl::edge_count_from_deck(tiny), ndl::deck_error);
}

TEST_CASE("degrees from deck") {
    ndl::DeckDegrees dd = ndl::degrees_from_deck(ndl::deck_of(p4()));
    CHECK(dd.missing_degree == std::vector<int>{1, 2, 2, 1});
    CHECK(dd.sequence == std::vector<int>{2, 2, 1, 1});

    // A card with more edges than the whole graph gives a negative degree.
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Graph e4(4, {});
    Deck bad({k4, e4, e4, e4, e4});
    CHECK_THROWS_AS(ndl::degrees_from_deck(bad), ndl::deck_error);
}

TEST_CASE("ndl recovery on fixed graphs") {
    Graph pendant(5, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {2, 3}});
    CHECK(ndl::ndl_from_deck(ndl::deck_of(pendant)) ==
          ndl::canonicalize(ndl::ndl_of(pendant)));
    CHECK(ndl::ndl_from_deck(ndl::deck_of(p4())) ==
          ndl::canonicalize(ndl::ndl_of(p4())));
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(ndl::ndl_from_deck(ndl::deck_of(c4)) ==
          ndl::canonicalize(ndl::ndl_of(c4)));
    // Disconnected, with an isolated vertex.
    Graph mixed(5, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(ndl::ndl_from_deck(ndl::deck_of(mixed)) ==
          ndl::canonicalize(ndl::ndl_of(mixed)));
}

TEST_CASE("ndl recovery flags inconsistent decks") {
    // Edge totals divide evenly but the positional pairing breaks down.
    Deck bad({k3(), k3(), Graph(3, {}), Graph(3, {})});
    CHECK_THROWS_AS(ndl::ndl_from_deck(bad), ndl::deck_error);
}

TEST_CASE("a consistent foreign deck reconstructs its own graph") {
    // This is the deck of an edge plus an isolated vertex.
    Deck d({Graph(2, {{0, 1}}), Graph(2, {}), Graph(2, {})});
    CHECK(ndl::edge_count_from_deck(d) == 1);
    CHECK(ndl::ndl_from_deck(d) ==
          ndl::canonicalize(ndl::ndl_of(Graph(3, {{0, 1}}))));
}

TEST_CASE("ndl recovery is exact at small scale") {
    for (int n = 3; n <= 5; ++n) {
        ndl::oracle::for_each_graph(n, [](const Graph& g) {
            Deck d = ndl::deck_of(g);
            REQUIRE(ndl::edge_count_from_deck(d) == g.edge_count());
            REQUIRE(ndl::degrees_from_deck(d).sequence == ndl::degree_sequence(g));
            REQUIRE(ndl::ndl_from_deck(d) == ndl::canonicalize(ndl::ndl_of(g)));
        });
    }
}
