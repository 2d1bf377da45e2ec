#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ndl/graph.hpp"
#include "ndl/tableau.hpp"

// Brute-force ground truth at small scale.  Everything here enumerates
// labeled objects exhaustively and deterministically; hard caps throw
// cap_error instead of running forever.
namespace ndl::oracle {

inline constexpr int max_vertices = 7;

// Bit i of the mask is the i-th vertex pair in lexicographic order
// (0,1), (0,2), ..., (n-2,n-1).
std::uint64_t edge_mask_of(const Graph& g);
Graph graph_from_mask(int n, std::uint64_t mask);

// All 2^(n(n-1)/2) labeled graphs, in mask counting order, pulled one at a
// time so exhaustive scans run in constant memory.
class GraphStream {
public:
    explicit GraphStream(int n);
    std::optional<Graph> next();

private:
    int n_ = 0;
    std::uint64_t mask_ = 0;
    std::uint64_t end_ = 0;
};

inline GraphStream enumerate_graphs(int n) { return GraphStream(n); }

template <typename F>
void for_each_graph(int n, F&& f) {
    GraphStream stream(n);
    while (std::optional<Graph> g = stream.next()) f(*g);
}

// All labeled graphs whose vertex v has degree demand[v], found by a
// slot-by-slot search with degree-budget pruning.
std::vector<Graph> degree_realizations(const std::vector<int>& demand);

// All labeled graphs whose neighborhood degree list equals t row-for-row.
std::vector<Graph> enumerate_labeled_realizations(const Tableau& t);

// All bipartite labeled graphs on X = {0..p-1}, Y = {p..p+q-1} with the
// prescribed per-vertex degrees and edges only across the parts.
// Capped at |X|*|Y| <= 24 slots.
std::vector<Graph> enumerate_bipartite_realizations(const std::vector<int>& x_degrees,
                                                    const std::vector<int>& y_degrees);

// The graph whose nodes are the labeled realizations of t and whose edges
// join realizations one valid N-switch apart.
struct RealizationSpace {
    std::vector<Graph> nodes;                // enumeration order
    std::vector<std::pair<int, int>> edges;  // node index pairs, first < second
    int component_count = 0;
    bool connected() const { return component_count <= 1; }
};

RealizationSpace realization_space(const Tableau& t);

}  // namespace ndl::oracle
