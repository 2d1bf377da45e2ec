#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ndl/graph.hpp"

namespace ndl {

// A list of n rows of nonnegative integers; row i holds the degrees of the
// neighbors of vertex i when the tableau came from a graph.  Rows are kept
// sorted descending; the row order itself is meaningful (labeled semantics)
// until canonicalize() is applied.
class Tableau {
public:
    Tableau() = default;
    // Row contents may arrive in any order; each row is sorted descending.
    // Negative entries are rejected with std::invalid_argument.
    explicit Tableau(std::vector<std::vector<int>> rows);

    int size() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& row(int i) const;
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

struct BipartitionedList {
    std::vector<int> part_x;
    std::vector<int> part_y;
    friend bool operator==(const BipartitionedList&, const BipartitionedList&) = default;
};

// Everything read off a tableau: row lengths, same-length classes, value
// counts, and the per-class and cross-class degree lists.
struct DerivedLists {
    std::vector<int> degree_list;             // row lengths, descending
    std::map<int, std::vector<int>> classes;  // k -> rows of length k, ascending index
    std::map<int, std::vector<int>> same_deg; // k -> (mu(i,k) : i in class k)
    // (k,l) with k > l, both classes nonempty -> first part (mu(i,l) : i in
    // class k), second part (mu(j,k) : j in class l), increasing index order.
    std::map<std::pair<int, int>, BipartitionedList> cross_deg;
    bool class_parity_ok = true;   // each same_deg list has even sum
    bool cross_counts_ok = true;   // both parts of each cross_deg list agree on their sum

    // Occurrences of the value l in row i; 0 when l never appears.
    int mu(int i, int l) const;

    std::map<std::pair<int, int>, int> mu_counts;  // (i, l) -> positive count
};

// Row i = degrees of the neighbors of vertex i, sorted descending.
Tableau ndl_of(const Graph& g);

// Rows reordered by length descending, ties broken lexicographically
// descending on content.  Idempotent; forgets the row labeling.
Tableau canonicalize(const Tableau& t);

bool ndl_equal_labeled(const Tableau& t1, const Tableau& t2);
bool ndl_equal_unlabeled(const Tableau& t1, const Tableau& t2);

// True iff every entry appears among the row lengths.
bool is_feasible(const Tableau& t);

// Requires a feasible tableau.  Parity and double-count violations are
// recorded in the flags, not raised: a feasible tableau may still fail them,
// and graphicality testing owns that verdict.
DerivedLists derive(const Tableau& t);

long long ndl_entry_sum(const Tableau& t);

}  // namespace ndl
