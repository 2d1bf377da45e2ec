#pragma once

#include <vector>

#include "ndl/graph.hpp"
#include "ndl/tableau.hpp"

namespace ndl {

// The multiset of single-vertex-deleted subgraphs of an n-vertex graph:
// n cards, each on n-1 vertices, card i = g minus vertex i (relabeled
// order-preservingly).  Cards arriving from files are not assumed to come
// from a real graph; arithmetic inconsistencies surface as deck_error.
class Deck {
public:
    Deck() = default;
    // Requires at least one card and every card on (#cards - 1) vertices;
    // throws deck_error otherwise.
    explicit Deck(std::vector<Graph> cards);

    int size() const { return static_cast<int>(cards_.size()); }
    const Graph& card(int i) const;
    const std::vector<Graph>& cards() const { return cards_; }

private:
    std::vector<Graph> cards_;
};

Deck deck_of(const Graph& g);

// Every edge of the original graph survives in exactly n-2 cards, so the
// card edge total s gives back |E| = s/(n-2).  Requires n >= 3; throws
// deck_error when s is not divisible.
int edge_count_from_deck(const Deck& d);

struct DeckDegrees {
    std::vector<int> missing_degree;  // by card index: |E| minus card edge count
    std::vector<int> sequence;        // the same values sorted descending
};

DeckDegrees degrees_from_deck(const Deck& d);

// Recovers the canonical (unlabeled) neighborhood degree list.  For each
// card, the degree multiset of the full graph minus the missing vertex is
// paired positionally against the card's degree multiset, both sorted
// descending; entries that dropped by 1 are the neighbors, and their
// original values form the missing vertex's row.  A drop outside {0,1}
// means the deck is inconsistent.
Tableau ndl_from_deck(const Deck& d);

}  // namespace ndl
