#pragma once

#include <utility>
#include <vector>

#include "ndl/tableau.hpp"

namespace ndl {

// Integer partition, parts sorted descending.  Trailing zeros are permitted;
// trimmed() drops them.
class Partition {
public:
    Partition() = default;
    // Parts may arrive in any order; negatives are rejected with
    // std::invalid_argument.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    long long sum() const;
    Partition trimmed() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// Column lengths of the Young diagram: result_i = #{j : p_j >= i} for
// i = 1..p_1.  Never has trailing zeros; involution on trimmed partitions.
Partition conjugate(const Partition& p);

// Diagonal split of the Young diagram.  alpha_i counts row-i boxes on or
// right of the main diagonal, beta_j counts column-j boxes strictly below it;
// both returned without zeros.
std::pair<Partition, Partition> alpha_beta(const Partition& p);

// Degree-sequence feasibility for simple graphs: even sum and, for
// k = 1..max{i : d_i >= i-1},
//   sum_{i<=k} d_i  <=  k(k-1) + sum_{i>k} min(k, d_i).
// An explicit d_1 <= n-1 guard rejects impossible degrees early.
bool erdos_gallai(const Partition& d);

// Equivalent test via the diagonal split: even sum and the partial sums of
// beta dominate those of alpha through len(alpha), beta padded with zeros.
bool merris_graphic(const Partition& d);

// Bipartite feasibility: sum(x) = sum(y) and, for k = 1..len(x),
//   sum_{i<=k} x_i  <=  sum_j min(k, y_j).
// x descending; y in any order (negatives rejected).
bool gale_ryser(const Partition& x, const std::vector<int>& y);

// Per-class verdicts for a tableau, in the order they were tested.
struct TableauCheck {
    bool feasible = false;
    bool graphic = false;
    std::vector<int> failed_same;                    // classes k with non-graphic D^k
    std::vector<std::pair<int, int>> failed_cross;   // pairs (k,l) with non-bigraphic cross list
};

TableauCheck check_tableau(const Tableau& t);

// A feasible tableau is the neighborhood degree list of some simple graph
// iff every same-class list is graphic and every cross-class list is
// bigraphic.
bool is_graphic_ndl(const Tableau& t);

// Graphic with alpha(d) = beta(d): exactly the degree sequences having a
// unique labeled realization.
bool is_threshold_sequence(const Partition& d);

// Same class characterized instead by equality holding in every tested
// Erdos-Gallai inequality.  Exposed so the two characterizations can be
// compared directly.
bool threshold_by_erdos_gallai_equality(const Partition& d);

// Bigraphic with conjugate(x) = y after trimming zeros from both: exactly
// the bipartite degree-list pairs having a unique labeled realization.
bool is_difference_pair(const Partition& x, const Partition& y);

}  // namespace ndl
