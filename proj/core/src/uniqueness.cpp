#include "ndl/uniqueness.hpp"

#include <stdexcept>

#include "ndl/graphicality.hpp"

namespace ndl {

namespace {

bool unique_from_lists(const DerivedLists& lists) {
    for (const auto& [k, dk] : lists.same_deg)
        if (!is_threshold_sequence(Partition(dk))) return false;
    for (const auto& [pair, cross] : lists.cross_deg)
        if (!is_difference_pair(Partition(cross.part_x), Partition(cross.part_y))) return false;
    return true;
}

}  // namespace

bool is_ndl_unique_tableau(const Tableau& t) {
    if (!is_graphic_ndl(t))
        throw std::invalid_argument("is_ndl_unique_tableau: tableau is not graphic");
    return unique_from_lists(derive(t));
}

bool is_ndl_unique_graph(const Graph& g) {
    return unique_from_lists(derive(ndl_of(g)));
}

std::optional<NSwitch> non_uniqueness_witness(const Graph& g) {
    std::vector<NSwitch> moves = enumerate_n_switches(g);
    if (moves.empty()) return std::nullopt;
    return moves.front();
}

}  // namespace ndl
