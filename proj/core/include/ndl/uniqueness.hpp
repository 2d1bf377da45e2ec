#pragma once

#include <optional>

#include "ndl/graph.hpp"
#include "ndl/realization.hpp"
#include "ndl/tableau.hpp"

namespace ndl {

// True iff the tableau has exactly one labeled realization: every same-class
// list must be a threshold sequence and every cross-class list a difference
// pair.  Requires a graphic tableau.
bool is_ndl_unique_tableau(const Tableau& t);

// True iff g is the only labeled graph with its neighborhood degree list.
// Decided structurally from the derived lists of ndl_of(g); never errors.
bool is_ndl_unique_graph(const Graph& g);

// Empty exactly when is_ndl_unique_graph(g); otherwise the first valid
// N-switch in enumeration order.  Any realization of a non-unique list
// admits one.
std::optional<NSwitch> non_uniqueness_witness(const Graph& g);

}  // namespace ndl
