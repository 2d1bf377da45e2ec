#include "ndl/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace ndl {

namespace {

std::string edge_text(int u, int v) {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    stride_ = (n_ + 63) / 64;
    adj_.assign(static_cast<std::size_t>(n_) * stride_, 0);
    degrees_.assign(n_, 0);
    for (Edge& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::invalid_argument("graph: edge endpoint out of range: " + edge_text(e.u, e.v));
        if (e.u == e.v)
            throw std::invalid_argument("graph: loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("graph: duplicate edge");
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u) * stride_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
        adj_[static_cast<std::size_t>(e.v) * stride_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
        ++degrees_[e.u];
        ++degrees_[e.v];
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("graph: vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (adj_[static_cast<std::size_t>(u) * stride_ + v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return degrees_[v];
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    out.reserve(degrees_[v]);
    for (int w = 0; w < stride_; ++w) {
        std::uint64_t bits = adj_[static_cast<std::size_t>(v) * stride_ + w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d = g.degrees();
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

IndexedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> map = s;
    std::sort(map.begin(), map.end());
    map.erase(std::unique(map.begin(), map.end()), map.end());
    for (int v : s)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    std::vector<int> position(g.vertex_count(), -1);
    for (std::size_t i = 0; i < map.size(); ++i) position[map[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (position[e.u] >= 0 && position[e.v] >= 0)
            edges.push_back({position[e.u], position[e.v]});
    return {Graph(static_cast<int>(map.size()), std::move(edges)), std::move(map)};
}

IndexedSubgraph bipartite_subgraph(const Graph& g, const std::vector<int>& x,
                                   const std::vector<int>& y) {
    for (int v : x)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("bipartite_subgraph: vertex " + std::to_string(v) + " out of range");
    for (int v : y)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("bipartite_subgraph: vertex " + std::to_string(v) + " out of range");
    // side: 0 unused, 1 in x, 2 in y
    std::vector<int> side(g.vertex_count(), 0);
    for (int v : x) side[v] = 1;
    for (int v : y) {
        if (side[v] == 1)
            throw std::invalid_argument("bipartite_subgraph: parts overlap at vertex " + std::to_string(v));
        side[v] = 2;
    }
    std::vector<int> map;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (side[v] != 0) map.push_back(v);
    std::vector<int> position(g.vertex_count(), -1);
    for (std::size_t i = 0; i < map.size(); ++i) position[map[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (side[e.u] != 0 && side[e.v] != 0 && side[e.u] != side[e.v])
            edges.push_back({position[e.u], position[e.v]});
    return {Graph(static_cast<int>(map.size()), std::move(edges)), std::move(map)};
}

TwoSwitch canonical_form(const TwoSwitch& m) {
    const TwoSwitch orbit[4] = {m,
                                {m.b, m.a, m.d, m.c},
                                {m.c, m.d, m.a, m.b},
                                {m.d, m.c, m.b, m.a}};
    return *std::min_element(std::begin(orbit), std::end(orbit));
}

TwoSwitch inverse(const TwoSwitch& m) { return {m.a, m.b, m.d, m.c}; }

MoveCheck check_two_switch(const Graph& g, const TwoSwitch& m) {
    const int v[4] = {m.a, m.b, m.c, m.d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (v[i] == v[j]) return MoveCheck::repeated_vertex;
    if (!g.has_edge(m.a, m.c) || !g.has_edge(m.b, m.d)) return MoveCheck::missing_edge;
    if (g.has_edge(m.a, m.d) || g.has_edge(m.b, m.c)) return MoveCheck::present_nonedge;
    return MoveCheck::ok;
}

Graph apply_two_switch(const Graph& g, const TwoSwitch& m) {
    switch (check_two_switch(g, m)) {
        case MoveCheck::ok:
            break;
        case MoveCheck::repeated_vertex:
            throw std::invalid_argument("apply_two_switch: vertices not distinct");
        case MoveCheck::missing_edge:
            throw std::invalid_argument("apply_two_switch: edge to delete is absent");
        case MoveCheck::present_nonedge:
            throw std::invalid_argument("apply_two_switch: edge to add is already present");
    }
    Edge del1{std::min(m.a, m.c), std::max(m.a, m.c)};
    Edge del2{std::min(m.b, m.d), std::max(m.b, m.d)};
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        if (e != del1 && e != del2) edges.push_back(e);
    edges.push_back({m.a, m.d});
    edges.push_back({m.b, m.c});
    return Graph(g.vertex_count(), std::move(edges));
}

std::vector<TwoSwitch> enumerate_two_switches(const Graph& g) {
    const std::vector<Edge>& es = g.edges();
    std::vector<TwoSwitch> out;
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const Edge e1 = es[i];
            const Edge e2 = es[j];
            if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) continue;
            // Deleting {e1, e2} admits two edge replacements; e1.u is the
            // smallest vertex involved, so both tuples are canonical.
            if (!g.has_edge(e1.u, e2.v) && !g.has_edge(e2.u, e1.v))
                out.push_back({e1.u, e2.u, e1.v, e2.v});
            if (!g.has_edge(e1.u, e2.u) && !g.has_edge(e1.v, e2.v))
                out.push_back({e1.u, e2.v, e1.v, e2.u});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ndl
