#include "ndl/reconstruction.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "ndl/errors.hpp"

namespace ndl {

Deck::Deck(std::vector<Graph> cards) : cards_(std::move(cards)) {
    if (cards_.empty()) throw deck_error("deck: no cards");
    const int order = static_cast<int>(cards_.size()) - 1;
    for (const Graph& c : cards_)
        if (c.vertex_count() != order)
            throw deck_error("deck: card on " + std::to_string(c.vertex_count()) +
                             " vertices in a deck of " + std::to_string(cards_.size()));
}

const Graph& Deck::card(int i) const {
    if (i < 0 || i >= size())
        throw std::invalid_argument("deck: card " + std::to_string(i) + " out of range");
    return cards_[i];
}

Deck deck_of(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("deck_of: graph has no vertices");
    std::vector<Graph> cards;
    cards.reserve(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> keep;
        for (int u = 0; u < n; ++u)
            if (u != v) keep.push_back(u);
        cards.push_back(induced_subgraph(g, keep).graph);
    }
    return Deck(std::move(cards));
}

int edge_count_from_deck(const Deck& d) {
    const int n = d.size();
    if (n < 3) throw deck_error("edge_count_from_deck: need at least 3 cards");
    long long s = 0;
    for (const Graph& c : d.cards()) s += c.edge_count();
    if (s % (n - 2) != 0)
        throw deck_error("edge_count_from_deck: card edge total " + std::to_string(s) +
                         " not divisible by " + std::to_string(n - 2));
    return static_cast<int>(s / (n - 2));
}

DeckDegrees degrees_from_deck(const Deck& d) {
    const int total = edge_count_from_deck(d);
    DeckDegrees out;
    for (const Graph& c : d.cards()) {
        int m = total - c.edge_count();
        if (m < 0)
            throw deck_error("degrees_from_deck: card has more edges than the whole graph");
        out.missing_degree.push_back(m);
    }
    out.sequence = out.missing_degree;
    std::sort(out.sequence.begin(), out.sequence.end(), std::greater<int>());
    return out;
}

Tableau ndl_from_deck(const Deck& d) {
    const DeckDegrees degs = degrees_from_deck(d);
    const int n = d.size();
    std::vector<std::vector<int>> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i) {
        // Degrees in G of the other n-1 vertices, then the card's own view.
        std::vector<int> full = degs.sequence;
        auto it = std::find(full.begin(), full.end(), degs.missing_degree[i]);
        if (it == full.end())
            throw deck_error("ndl_from_deck: missing degree absent from degree sequence");
        full.erase(it);
        std::vector<int> seen = degree_sequence(d.card(i));
        std::vector<int> row;
        for (std::size_t j = 0; j < full.size(); ++j) {
            int drop = full[j] - seen[j];
            if (drop == 1)
                row.push_back(full[j]);
            else if (drop != 0)
                throw deck_error("ndl_from_deck: no consistent neighbor matching for card " +
                                 std::to_string(i));
        }
        rows.push_back(std::move(row));
    }
    return canonicalize(Tableau(std::move(rows)));
}

}  // namespace ndl
