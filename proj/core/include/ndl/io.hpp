#pragma once

#include <string>

#include "ndl/graph.hpp"
#include "ndl/realization.hpp"
#include "ndl/reconstruction.hpp"
#include "ndl/tableau.hpp"

// Text codecs.  Every parser raises parse_error on malformed input; every
// serialize/parse pair round-trips to an equal value.
namespace ndl {

// First line "n <edge-count>", then one "u v" line per edge, 0-indexed.
std::string to_edge_list(const Graph& g);
Graph graph_from_edge_list(const std::string& text);

// Standard graph6 ASCII encoding, one graph per string.  The parser accepts
// an optional ">>graph6<<" prefix and trailing newline, and rejects
// out-of-range bytes, wrong data length, nonzero padding, and non-shortest
// size headers.
std::string to_graph6(const Graph& g);
Graph graph_from_graph6(const std::string& text);

// {"n": int, "edges": [[u,v], ...]} with u < v.
std::string to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// Array of rows, e.g. [[2,2,1],[3,2],[3,2],[2,2],[3]].  Row order is
// preserved (labeled semantics); row contents are sorted descending.
std::string to_json(const Tableau& t);
Tableau tableau_from_json(const std::string& text);

// [{"a":int,"b":int,"c":int,"d":int}, ...] in application order.
std::string to_json(const SwitchPath& path);
SwitchPath switch_path_from_json(const std::string& text);

// First line the card count n, then n graph6 lines, one card per line in
// card-index order.
std::string to_deck_text(const Deck& d);
Deck deck_from_text(const std::string& text);

}  // namespace ndl
