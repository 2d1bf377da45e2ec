#include "ndl/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ndl/errors.hpp"
#include "ndl/realization.hpp"

namespace ndl::oracle {

namespace {

void check_cap(int n, const char* where) {
    if (n < 0) throw std::invalid_argument(std::string(where) + ": negative vertex count");
    if (n > max_vertices)
        throw cap_error(std::string(where) + ": " + std::to_string(n) + " vertices exceeds cap " +
                        std::to_string(max_vertices));
}

// Index of pair (u,v), u < v, in lexicographic order.
int pair_index(int n, int u, int v) {
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

std::vector<std::pair<int, int>> pair_list(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

// Depth-first over edge slots: at each slot try non-edge then edge, pruning
// against the per-vertex budgets.  Leaves hit exactly the graphs with the
// prescribed degrees; filter (when given) additionally requires the
// neighborhood degree rows to match.
void search_realizations(int n, const std::vector<int>& want, const Tableau* filter,
                         std::vector<Graph>& out) {
    for (int w : want)
        if (w < 0) throw std::invalid_argument("oracle: negative degree demand");
    const std::vector<std::pair<int, int>> pairs = pair_list(n);
    const int slots = static_cast<int>(pairs.size());
    std::vector<int> deg(n, 0);
    std::vector<int> left(n, std::max(0, n - 1));
    std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
    std::vector<Edge> edges;

    std::function<void(int)> go = [&](int idx) {
        if (idx == slots) {
            if (deg != want) return;
            if (filter) {
                std::vector<int> row;
                for (int v = 0; v < n; ++v) {
                    row.clear();
                    for (int u = 0; u < n; ++u)
                        if (adj[static_cast<std::size_t>(v) * n + u]) row.push_back(want[u]);
                    std::sort(row.begin(), row.end(), std::greater<int>());
                    if (row != filter->row(v)) return;
                }
            }
            out.push_back(Graph(n, edges));
            return;
        }
        const auto [u, v] = pairs[idx];
        --left[u];
        --left[v];
        if (deg[u] + left[u] >= want[u] && deg[v] + left[v] >= want[v]) go(idx + 1);
        if (deg[u] < want[u] && deg[v] < want[v] &&
            deg[u] + 1 + left[u] >= want[u] && deg[v] + 1 + left[v] >= want[v]) {
            ++deg[u];
            ++deg[v];
            adj[static_cast<std::size_t>(u) * n + v] = 1;
            adj[static_cast<std::size_t>(v) * n + u] = 1;
            edges.push_back({u, v});
            go(idx + 1);
            edges.pop_back();
            adj[static_cast<std::size_t>(u) * n + v] = 0;
            adj[static_cast<std::size_t>(v) * n + u] = 0;
            --deg[u];
            --deg[v];
        }
        ++left[u];
        ++left[v];
    };
    go(0);
}

}  // namespace

std::uint64_t edge_mask_of(const Graph& g) {
    const int n = g.vertex_count();
    check_cap(n, "edge_mask_of");
    std::uint64_t mask = 0;
    for (const Edge& e : g.edges()) mask |= std::uint64_t{1} << pair_index(n, e.u, e.v);
    return mask;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    check_cap(n, "graph_from_mask");
    std::vector<Edge> edges;
    int idx = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++idx)
            if ((mask >> idx) & 1) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

GraphStream::GraphStream(int n) : n_(n) {
    check_cap(n, "enumerate_graphs");
    end_ = std::uint64_t{1} << (n * (n - 1) / 2);
}

std::optional<Graph> GraphStream::next() {
    if (mask_ >= end_) return std::nullopt;
    return graph_from_mask(n_, mask_++);
}

std::vector<Graph> degree_realizations(const std::vector<int>& demand) {
    const int n = static_cast<int>(demand.size());
    check_cap(n, "degree_realizations");
    std::vector<Graph> out;
    search_realizations(n, demand, nullptr, out);
    return out;
}

std::vector<Graph> enumerate_labeled_realizations(const Tableau& t) {
    const int n = t.size();
    check_cap(n, "enumerate_labeled_realizations");
    std::vector<int> want(n);
    for (int i = 0; i < n; ++i) want[i] = static_cast<int>(t.row(i).size());
    std::vector<Graph> out;
    search_realizations(n, want, &t, out);
    return out;
}

std::vector<Graph> enumerate_bipartite_realizations(const std::vector<int>& x_degrees,
                                                    const std::vector<int>& y_degrees) {
    const int p = static_cast<int>(x_degrees.size());
    const int q = static_cast<int>(y_degrees.size());
    if (p * q > 24)
        throw cap_error("enumerate_bipartite_realizations: " + std::to_string(p * q) +
                        " slots exceeds cap 24");
    for (int w : x_degrees)
        if (w < 0) throw std::invalid_argument("oracle: negative degree demand");
    for (int w : y_degrees)
        if (w < 0) throw std::invalid_argument("oracle: negative degree demand");

    std::vector<int> xr = x_degrees;
    std::vector<int> yr = y_degrees;
    std::vector<Edge> edges;
    std::vector<Graph> out;
    // Slots in lexicographic (x, y) order; prune on both sides' budgets.
    std::function<void(int)> go = [&](int slot) {
        if (slot == p * q) {
            bool full = true;
            for (int r : xr) full = full && r == 0;
            for (int r : yr) full = full && r == 0;
            if (full) out.push_back(Graph(p + q, edges));
            return;
        }
        const int i = slot / q;
        const int j = slot % q;
        const int xleft = q - j - 1;  // x_i slots after this one
        const int yleft = p - i - 1;  // y_j slots after this row
        if (xr[i] <= xleft && yr[j] <= yleft) go(slot + 1);
        if (xr[i] > 0 && yr[j] > 0) {
            --xr[i];
            --yr[j];
            edges.push_back({i, p + j});
            go(slot + 1);
            edges.pop_back();
            ++xr[i];
            ++yr[j];
        }
    };
    go(0);
    return out;
}

RealizationSpace realization_space(const Tableau& t) {
    RealizationSpace out;
    out.nodes = enumerate_labeled_realizations(t);
    const int n = t.size();
    const int count = static_cast<int>(out.nodes.size());
    std::map<std::uint64_t, int> index;
    for (int i = 0; i < count; ++i) index[edge_mask_of(out.nodes[i])] = i;

    std::vector<int> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < count; ++i) {
        const std::uint64_t mask = edge_mask_of(out.nodes[i]);
        for (const NSwitch& m : enumerate_n_switches(out.nodes[i])) {
            std::uint64_t flipped = mask;
            flipped ^= std::uint64_t{1} << pair_index(n, std::min(m.a, m.c), std::max(m.a, m.c));
            flipped ^= std::uint64_t{1} << pair_index(n, std::min(m.b, m.d), std::max(m.b, m.d));
            flipped ^= std::uint64_t{1} << pair_index(n, std::min(m.a, m.d), std::max(m.a, m.d));
            flipped ^= std::uint64_t{1} << pair_index(n, std::min(m.b, m.c), std::max(m.b, m.c));
            auto it = index.find(flipped);
            if (it == index.end())
                throw error("realization_space: a move left the realization set");
            if (i < it->second) edges.emplace_back(i, it->second);
            parent[find(i)] = find(it->second);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.edges = std::move(edges);
    for (int i = 0; i < count; ++i)
        if (find(i) == i) ++out.component_count;
    return out;
}

}  // namespace ndl::oracle
