#include "ndl/realization.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ndl/errors.hpp"
#include "ndl/graphicality.hpp"

namespace ndl {

namespace {

// Adjacency bitmask copy of a graph that moves can be applied to in place.
struct Mutable {
    int n = 0;
    int stride = 0;
    std::vector<std::uint64_t> bits;

    explicit Mutable(const Graph& g)
        : n(g.vertex_count()), stride((g.vertex_count() + 63) / 64) {
        bits.assign(static_cast<std::size_t>(n) * stride, 0);
        for (const Edge& e : g.edges()) {
            set(e.u, e.v, true);
        }
    }

    bool has(int u, int v) const {
        return (bits[static_cast<std::size_t>(u) * stride + v / 64] >> (v % 64)) & 1;
    }

    void set(int u, int v, bool on) {
        std::uint64_t mu = std::uint64_t{1} << (v % 64);
        std::uint64_t mv = std::uint64_t{1} << (u % 64);
        if (on) {
            bits[static_cast<std::size_t>(u) * stride + v / 64] |= mu;
            bits[static_cast<std::size_t>(v) * stride + u / 64] |= mv;
        } else {
            bits[static_cast<std::size_t>(u) * stride + v / 64] &= ~mu;
            bits[static_cast<std::size_t>(v) * stride + u / 64] &= ~mv;
        }
    }

    void apply(const TwoSwitch& m) {
        set(m.a, m.c, false);
        set(m.b, m.d, false);
        set(m.a, m.d, true);
        set(m.b, m.c, true);
    }

    Graph to_graph() const {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (has(u, v)) edges.push_back({u, v});
        return Graph(n, std::move(edges));
    }
};

// One round of rewiring toward N(v) ∩ t = s.  All choices take the least
// index; x is drawn from N(u) − N(w) − {w} within the active vertex set,
// which is never empty while the degree hypothesis holds.  Appends the moves
// it applies to out.
void steer_loop(Mutable& m, int v, const std::vector<char>& in_t, const std::vector<char>& in_s,
                const std::vector<char>& active, std::vector<TwoSwitch>& out) {
    for (;;) {
        int u = -1;
        for (int i = 0; i < m.n; ++i)
            if (in_s[i] && !m.has(v, i)) {
                u = i;
                break;
            }
        if (u < 0) return;
        int w = -1;
        for (int i = 0; i < m.n; ++i)
            if (in_t[i] && !in_s[i] && m.has(v, i)) {
                w = i;
                break;
            }
        if (w < 0) throw error("steer: |N(v) ∩ t| drifted away from |s|");
        int x = -1;
        for (int i = 0; i < m.n; ++i)
            if (active[i] && i != w && m.has(u, i) && !m.has(w, i)) {
                x = i;
                break;
            }
        if (x < 0) throw error("steer: no pivot available; degree hypothesis violated");
        TwoSwitch move{u, w, x, v};
        m.apply(move);
        out.push_back(move);
    }
}

// Steers every same-class induced subgraph and every cross-class bipartite
// subgraph of m to its canonical realization.  The moves recorded pair equal
// degrees by construction.
std::vector<TwoSwitch> canonicalize_classes(Mutable& m, const DerivedLists& lists) {
    std::vector<TwoSwitch> out;
    const int n = m.n;
    std::vector<char> in_t(n), in_s(n), active(n);
    auto clear = [&] {
        std::fill(in_t.begin(), in_t.end(), 0);
        std::fill(in_s.begin(), in_s.end(), 0);
        std::fill(active.begin(), active.end(), 0);
    };

    for (const auto& [k, members] : lists.classes) {
        std::vector<int> demand = lists.same_deg.at(k);
        for (std::size_t i = 0; i < members.size(); ++i) {
            const int v = members[i];
            clear();
            std::vector<int> later;
            for (std::size_t j = i + 1; j < members.size(); ++j) later.push_back(static_cast<int>(j));
            std::stable_sort(later.begin(), later.end(),
                             [&](int a, int b) { return demand[a] > demand[b]; });
            active[v] = 1;
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                active[members[j]] = 1;
                in_t[members[j]] = 1;
            }
            for (int idx = 0; idx < demand[i]; ++idx) {
                in_s[members[later[idx]]] = 1;
                --demand[later[idx]];
            }
            steer_loop(m, v, in_t, in_s, active, out);
            demand[i] = 0;
        }
    }

    for (const auto& [pair, cross] : lists.cross_deg) {
        const std::vector<int>& xs = lists.classes.at(pair.first);
        const std::vector<int>& ys = lists.classes.at(pair.second);
        std::vector<int> ydem = cross.part_y;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const int v = xs[i];
            clear();
            // Pivots may only come from the unfinished x-side rows: pulling
            // one from ys would pair unequal degrees and disturb edges inside
            // the y class.
            for (std::size_t j = i; j < xs.size(); ++j) active[xs[j]] = 1;
            for (int y : ys) in_t[y] = 1;
            std::vector<int> order(ys.size());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(),
                             [&](int a, int b) { return ydem[a] > ydem[b]; });
            for (int idx = 0; idx < cross.part_x[i]; ++idx) {
                in_s[ys[order[idx]]] = 1;
                --ydem[order[idx]];
            }
            steer_loop(m, v, in_t, in_s, active, out);
        }
    }
    return out;
}

}  // namespace

NSwitch inverse(const NSwitch& m) { return {m.a, m.b, m.d, m.c}; }

bool is_valid_n_switch(const Graph& g, const NSwitch& m) {
    return check_two_switch(g, m.as_two_switch()) == MoveCheck::ok &&
           g.degree(m.a) == g.degree(m.b) && g.degree(m.c) == g.degree(m.d);
}

Graph apply_n_switch(const Graph& g, const NSwitch& m) {
    switch (check_two_switch(g, m.as_two_switch())) {
        case MoveCheck::ok:
            break;
        case MoveCheck::repeated_vertex:
            throw std::invalid_argument("apply_n_switch: vertices not distinct");
        case MoveCheck::missing_edge:
            throw std::invalid_argument("apply_n_switch: edge to delete is absent");
        case MoveCheck::present_nonedge:
            throw std::invalid_argument("apply_n_switch: edge to add is already present");
    }
    if (g.degree(m.a) != g.degree(m.b) || g.degree(m.c) != g.degree(m.d))
        throw std::invalid_argument("apply_n_switch: paired vertices have unequal degrees");
    return apply_two_switch(g, m.as_two_switch());
}

std::vector<NSwitch> enumerate_n_switches(const Graph& g) {
    std::vector<NSwitch> out;
    for (const TwoSwitch& m : enumerate_two_switches(g))
        if (g.degree(m.a) == g.degree(m.b) && g.degree(m.c) == g.degree(m.d))
            out.push_back({m.a, m.b, m.c, m.d});
    return out;
}

Graph apply_path(const Graph& g, const SwitchPath& path) {
    Graph cur = g;
    for (const NSwitch& m : path.moves) cur = apply_n_switch(cur, m);
    return cur;
}

Graph canonical_realization(const std::vector<int>& demand) {
    if (!erdos_gallai(Partition(demand)))
        throw std::invalid_argument("canonical_realization: demand list is not graphic");
    const int n = static_cast<int>(demand.size());
    std::vector<int> r = demand;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        if (r[i] == 0) continue;
        std::vector<int> later;
        for (int j = i + 1; j < n; ++j) later.push_back(j);
        std::stable_sort(later.begin(), later.end(), [&](int a, int b) { return r[a] > r[b]; });
        for (int idx = 0; idx < r[i]; ++idx) {
            edges.push_back({i, later[idx]});
            --r[later[idx]];
        }
        r[i] = 0;
    }
    return Graph(n, std::move(edges));
}

Graph canonical_bipartite_realization(const std::vector<int>& x_degrees,
                                      const std::vector<int>& y_degrees) {
    if (!gale_ryser(Partition(x_degrees), y_degrees))
        throw std::invalid_argument("canonical_bipartite_realization: demand pair is not bigraphic");
    const int p = static_cast<int>(x_degrees.size());
    const int q = static_cast<int>(y_degrees.size());
    std::vector<int> r = y_degrees;
    std::vector<Edge> edges;
    std::vector<int> order(q);
    for (int i = 0; i < p; ++i) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return r[a] > r[b]; });
        for (int idx = 0; idx < x_degrees[i]; ++idx) {
            edges.push_back({i, p + order[idx]});
            --r[order[idx]];
        }
    }
    return Graph(p + q, std::move(edges));
}

SteerResult steer_neighborhood(const Graph& g, int v, const std::vector<int>& t,
                               const std::vector<int>& s) {
    const int n = g.vertex_count();
    if (v < 0 || v >= n)
        throw std::invalid_argument("steer_neighborhood: vertex " + std::to_string(v) + " out of range");
    std::vector<char> in_t(n, 0), in_s(n, 0);
    for (int u : t) {
        if (u < 0 || u >= n)
            throw std::invalid_argument("steer_neighborhood: vertex " + std::to_string(u) + " out of range");
        in_t[u] = 1;
    }
    if (in_t[v]) throw std::invalid_argument("steer_neighborhood: v must not lie in t");
    for (int u : s) {
        if (u < 0 || u >= n)
            throw std::invalid_argument("steer_neighborhood: vertex " + std::to_string(u) + " out of range");
        if (!in_t[u]) throw std::invalid_argument("steer_neighborhood: s must be a subset of t");
        in_s[u] = 1;
    }
    int s_size = 0;
    int hit = 0;
    int min_s = 0;
    int max_rest = -1;
    bool have_s = false;
    for (int u = 0; u < n; ++u) {
        if (in_s[u]) {
            ++s_size;
            min_s = have_s ? std::min(min_s, g.degree(u)) : g.degree(u);
            have_s = true;
        } else if (in_t[u]) {
            max_rest = std::max(max_rest, g.degree(u));
        }
        if (in_t[u] && g.has_edge(v, u)) ++hit;
    }
    if (s_size != hit)
        throw std::invalid_argument("steer_neighborhood: |s| must equal |N(v) ∩ t|");
    if (have_s && min_s < max_rest)
        throw std::invalid_argument("steer_neighborhood: s must take maximum degrees within t");

    Mutable m(g);
    std::vector<char> active(n, 1);
    std::vector<TwoSwitch> moves;
    steer_loop(m, v, in_t, in_s, active, moves);
    return {m.to_graph(), std::move(moves)};
}

Graph realize_ndl(const Tableau& t) {
    TableauCheck chk = check_tableau(t);
    if (!chk.feasible) throw std::invalid_argument("realize_ndl: tableau is not feasible");
    if (!chk.graphic) {
        std::string msg = "realize_ndl: tableau is not graphic:";
        for (int k : chk.failed_same) msg += " class " + std::to_string(k);
        for (const auto& [k, l] : chk.failed_cross)
            msg += " cross(" + std::to_string(k) + "," + std::to_string(l) + ")";
        throw std::invalid_argument(msg);
    }
    DerivedLists lists = derive(t);
    std::vector<Edge> edges;
    for (const auto& [k, members] : lists.classes) {
        Graph sub = canonical_realization(lists.same_deg.at(k));
        for (const Edge& e : sub.edges()) edges.push_back({members[e.u], members[e.v]});
    }
    for (const auto& [pair, cross] : lists.cross_deg) {
        const std::vector<int>& xs = lists.classes.at(pair.first);
        const std::vector<int>& ys = lists.classes.at(pair.second);
        Graph sub = canonical_bipartite_realization(cross.part_x, cross.part_y);
        const int p = static_cast<int>(xs.size());
        for (const Edge& e : sub.edges()) edges.push_back({xs[e.u], ys[e.v - p]});
    }
    return Graph(t.size(), std::move(edges));
}

SwitchPath switch_sequence(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count())
        throw std::invalid_argument("switch_sequence: vertex counts differ");
    if (g == h) return {};
    Tableau tg = ndl_of(g);
    if (!ndl_equal_labeled(tg, ndl_of(h)))
        throw mismatch_error("switch_sequence: labeled neighborhood degree lists differ");
    DerivedLists lists = derive(tg);
    Mutable mg(g);
    Mutable mh(h);
    std::vector<TwoSwitch> fwd = canonicalize_classes(mg, lists);
    std::vector<TwoSwitch> bwd = canonicalize_classes(mh, lists);
    SwitchPath path;
    path.moves.reserve(fwd.size() + bwd.size());
    for (const TwoSwitch& m : fwd) path.moves.push_back({m.a, m.b, m.c, m.d});
    for (auto it = bwd.rbegin(); it != bwd.rend(); ++it)
        path.moves.push_back({it->a, it->b, it->d, it->c});
    return path;
}

}  // namespace ndl
