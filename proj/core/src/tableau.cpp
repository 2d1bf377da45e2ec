#include "ndl/tableau.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace ndl {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (std::vector<int>& row : rows_) {
        for (int x : row)
            if (x < 0)
                throw std::invalid_argument("tableau: negative entry " + std::to_string(x));
        std::sort(row.begin(), row.end(), std::greater<int>());
    }
}

const std::vector<int>& Tableau::row(int i) const {
    if (i < 0 || i >= size())
        throw std::invalid_argument("tableau: row " + std::to_string(i) + " out of range");
    return rows_[i];
}

Tableau ndl_of(const Graph& g) {
    std::vector<std::vector<int>> rows(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int u : g.neighbors(v)) rows[v].push_back(g.degree(u));
    }
    return Tableau(std::move(rows));
}

Tableau canonicalize(const Tableau& t) {
    std::vector<std::vector<int>> rows = t.rows();
    std::sort(rows.begin(), rows.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a > b;
    });
    return Tableau(std::move(rows));
}

bool ndl_equal_labeled(const Tableau& t1, const Tableau& t2) { return t1 == t2; }

bool ndl_equal_unlabeled(const Tableau& t1, const Tableau& t2) {
    return canonicalize(t1) == canonicalize(t2);
}

bool is_feasible(const Tableau& t) {
    std::set<int> lengths;
    for (const std::vector<int>& row : t.rows()) lengths.insert(static_cast<int>(row.size()));
    for (const std::vector<int>& row : t.rows())
        for (int x : row)
            if (!lengths.count(x)) return false;
    return true;
}

int DerivedLists::mu(int i, int l) const {
    auto it = mu_counts.find({i, l});
    return it == mu_counts.end() ? 0 : it->second;
}

DerivedLists derive(const Tableau& t) {
    if (!is_feasible(t)) throw std::invalid_argument("derive: tableau is not feasible");
    DerivedLists out;
    for (int i = 0; i < t.size(); ++i) {
        const std::vector<int>& row = t.row(i);
        out.degree_list.push_back(static_cast<int>(row.size()));
        out.classes[static_cast<int>(row.size())].push_back(i);
        for (int x : row) ++out.mu_counts[{i, x}];
    }
    std::sort(out.degree_list.begin(), out.degree_list.end(), std::greater<int>());
    for (const auto& [k, members] : out.classes) {
        std::vector<int>& dk = out.same_deg[k];
        long long sum = 0;
        for (int i : members) {
            dk.push_back(out.mu(i, k));
            sum += dk.back();
        }
        if (sum % 2 != 0) out.class_parity_ok = false;
    }
    for (auto hi = out.classes.begin(); hi != out.classes.end(); ++hi) {
        for (auto lo = out.classes.begin(); lo != hi; ++lo) {
            const int k = hi->first;
            const int l = lo->first;
            BipartitionedList& cross = out.cross_deg[{k, l}];
            long long sum_x = 0;
            long long sum_y = 0;
            for (int i : hi->second) {
                cross.part_x.push_back(out.mu(i, l));
                sum_x += cross.part_x.back();
            }
            for (int j : lo->second) {
                cross.part_y.push_back(out.mu(j, k));
                sum_y += cross.part_y.back();
            }
            if (sum_x != sum_y) out.cross_counts_ok = false;
        }
    }
    return out;
}

long long ndl_entry_sum(const Tableau& t) {
    long long sum = 0;
    for (const std::vector<int>& row : t.rows())
        for (int x : row) sum += x;
    return sum;
}

}  // namespace ndl
