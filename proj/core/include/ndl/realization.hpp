#pragma once

#include <vector>

#include "ndl/graph.hpp"
#include "ndl/tableau.hpp"

namespace ndl {

// A 2-switch restricted so the deleted-edge partners have equal degrees:
// deg(a) = deg(b) and deg(c) = deg(d).  Applying one preserves the labeled
// neighborhood degree list of every vertex.
struct NSwitch {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;
    TwoSwitch as_two_switch() const { return {a, b, c, d}; }
    friend bool operator==(const NSwitch&, const NSwitch&) = default;
    friend std::strong_ordering operator<=>(const NSwitch&, const NSwitch&) = default;
};

NSwitch inverse(const NSwitch& m);

// Moves in application order; move i must be valid against the graph
// produced by moves 0..i-1.
struct SwitchPath {
    std::vector<NSwitch> moves;
    friend bool operator==(const SwitchPath&, const SwitchPath&) = default;
};

bool is_valid_n_switch(const Graph& g, const NSwitch& m);

// Throws std::invalid_argument, distinguishing edge-pattern violations from
// degree-pairing violations.
Graph apply_n_switch(const Graph& g, const NSwitch& m);

// The valid two-switches whose degree pairings match, canonical
// representatives in lexicographic order.
std::vector<NSwitch> enumerate_n_switches(const Graph& g);

Graph apply_path(const Graph& g, const SwitchPath& path);

// The canonical realization of a graphic demand list (indexed by vertex):
// each vertex in index order is joined to its principal neighborhood, the
// first demand(v) remaining vertices ordered by residual demand descending,
// index ascending.
Graph canonical_realization(const std::vector<int>& demand);

// Bipartite counterpart on X = {0..p-1}, Y = {p..p+q-1}: each X vertex in
// index order takes the y-side vertices of highest residual demand (ties by
// original index).  Y indices never shift.
Graph canonical_bipartite_realization(const std::vector<int>& x_degrees,
                                      const std::vector<int>& y_degrees);

struct SteerResult {
    Graph graph;
    std::vector<TwoSwitch> moves;
};

// Rewires g with 2-switches until N(v) ∩ t = s, leaving N(v) − t untouched.
// Requires v ∉ t, s ⊆ t, |s| = |N(v) ∩ t|, and every s vertex to have degree
// at least that of every t − s vertex; under those conditions a valid move
// always exists and at most |s| moves are needed.
SteerResult steer_neighborhood(const Graph& g, int v, const std::vector<int>& t,
                               const std::vector<int>& s);

// A labeled graph whose neighborhood degree list equals t row-for-row:
// canonical realizations are placed on each same-length row class and
// between each class pair, and their edge sets are unioned.
Graph realize_ndl(const Tableau& t);

// A sequence of moves carrying g to h exactly, every intermediate graph
// sharing their common labeled neighborhood degree list.  Both graphs are
// steered class-by-class to the shared canonical realization; h's transcript
// is inverted and reversed.  Throws mismatch_error when the lists differ.
SwitchPath switch_sequence(const Graph& g, const Graph& h);

}  // namespace ndl
