#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace ndl {

struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend std::strong_ordering operator<=>(const Edge&, const Edge&) = default;
};

// Simple labeled graph on vertices 0..n-1.  Immutable after construction;
// adjacency is kept both as a sorted edge list and as per-vertex bitmask rows
// so edge queries are O(1).
class Graph {
public:
    Graph() = default;
    // Edges may arrive in either orientation.  Loops, duplicates, and
    // out-of-range endpoints are rejected with std::invalid_argument.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Sorted ascending, u < v within each edge.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const;

    // Indexed by vertex, not sorted.
    const std::vector<int>& degrees() const { return degrees_; }

    std::vector<int> neighbors(int v) const;  // ascending

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int stride_ = 0;                  // 64-bit words per adjacency row
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;  // n_ rows of stride_ words
    std::vector<int> degrees_;
};

// Multiset of vertex degrees, sorted descending.
std::vector<int> degree_sequence(const Graph& g);

// Subgraph together with the order-preserving relabeling:
// vertex_map[i] is the original index of subgraph vertex i.
struct IndexedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;
};

// Subgraph induced by s (set semantics: duplicates collapse).
IndexedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

// Subgraph on x ∪ y keeping only edges with one endpoint in each part.
// The parts must be disjoint.
IndexedSubgraph bipartite_subgraph(const Graph& g, const std::vector<int>& x,
                                   const std::vector<int>& y);

// The move {ac,bd} ⇉ {ad,bc}: valid against a graph iff ac and bd are edges,
// ad and bc are non-edges, and a,b,c,d are distinct.
struct TwoSwitch {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;
    friend bool operator==(const TwoSwitch&, const TwoSwitch&) = default;
    friend std::strong_ordering operator<=>(const TwoSwitch&, const TwoSwitch&) = default;
};

// (a,b,c,d), (b,a,d,c), (c,d,a,b), (d,c,b,a) perform the same edge
// replacement; the canonical representative is the lexicographically least,
// equivalently the one whose first vertex is the smallest of the four.
TwoSwitch canonical_form(const TwoSwitch& m);

// The move that restores the original graph.
TwoSwitch inverse(const TwoSwitch& m);

enum class MoveCheck { ok, repeated_vertex, missing_edge, present_nonedge };

MoveCheck check_two_switch(const Graph& g, const TwoSwitch& m);

// Throws std::invalid_argument when the move is not valid against g.
Graph apply_two_switch(const Graph& g, const TwoSwitch& m);

// Every valid move, one canonical representative per edge replacement,
// sorted lexicographically.
std::vector<TwoSwitch> enumerate_two_switches(const Graph& g);

}  // namespace ndl
