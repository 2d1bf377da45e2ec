#include "ndl/graphicality.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ndl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_)
        if (x < 0)
            throw std::invalid_argument("partition: negative part " + std::to_string(x));
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

long long Partition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::trimmed() const {
    std::vector<int> parts = parts_;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& p) {
    const std::vector<int>& a = p.parts();
    std::vector<int> out;
    if (!a.empty() && a[0] > 0) {
        out.resize(a[0]);
        for (int i = 1; i <= a[0]; ++i) {
            int count = 0;
            for (int x : a)
                if (x >= i) ++count;
                else break;
            out[i - 1] = count;
        }
    }
    return Partition(std::move(out));
}

std::pair<Partition, Partition> alpha_beta(const Partition& p) {
    const std::vector<int>& a = p.parts();
    std::vector<int> alpha;
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        if (a[i] >= i + 1) alpha.push_back(a[i] - i);
        else break;
    }
    std::vector<int> beta;
    for (int j = 1; j <= static_cast<int>(a.size()); ++j) {
        int count = 0;
        for (int i = j; i < static_cast<int>(a.size()); ++i)
            if (a[i] >= j) ++count;
        if (count == 0) break;
        beta.push_back(count);
    }
    return {Partition(std::move(alpha)), Partition(std::move(beta))};
}

bool erdos_gallai(const Partition& d) {
    const std::vector<int>& a = d.parts();
    const int n = static_cast<int>(a.size());
    if (d.sum() % 2 != 0) return false;
    if (n > 0 && a[0] > n - 1) return false;
    long long head = 0;
    for (int k = 1; k <= n && a[k - 1] >= k - 1; ++k) {
        head += a[k - 1];
        long long tail = 0;
        for (int i = k; i < n; ++i) tail += std::min(a[i], k);
        if (head > static_cast<long long>(k) * (k - 1) + tail) return false;
    }
    return true;
}

bool merris_graphic(const Partition& d) {
    if (d.sum() % 2 != 0) return false;
    auto [alpha, beta] = alpha_beta(d);
    long long sum_a = 0;
    long long sum_b = 0;
    for (int k = 0; k < alpha.size(); ++k) {
        sum_a += alpha.parts()[k];
        if (k < beta.size()) sum_b += beta.parts()[k];
        if (sum_b < sum_a) return false;
    }
    return true;
}

bool gale_ryser(const Partition& x, const std::vector<int>& y) {
    for (int v : y)
        if (v < 0)
            throw std::invalid_argument("gale_ryser: negative capacity " + std::to_string(v));
    long long sum_y = std::accumulate(y.begin(), y.end(), 0LL);
    if (x.sum() != sum_y) return false;
    const std::vector<int>& a = x.parts();
    long long head = 0;
    for (int k = 1; k <= static_cast<int>(a.size()); ++k) {
        head += a[k - 1];
        long long cap = 0;
        for (int v : y) cap += std::min(v, k);
        if (head > cap) return false;
    }
    return true;
}

TableauCheck check_tableau(const Tableau& t) {
    TableauCheck out;
    out.feasible = is_feasible(t);
    if (!out.feasible) return out;
    DerivedLists lists = derive(t);
    for (const auto& [k, dk] : lists.same_deg)
        if (!erdos_gallai(Partition(dk))) out.failed_same.push_back(k);
    for (const auto& [pair, cross] : lists.cross_deg)
        if (!gale_ryser(Partition(cross.part_x), cross.part_y)) out.failed_cross.push_back(pair);
    out.graphic = out.failed_same.empty() && out.failed_cross.empty();
    return out;
}

bool is_graphic_ndl(const Tableau& t) { return check_tableau(t).graphic; }

bool is_threshold_sequence(const Partition& d) {
    if (!erdos_gallai(d)) return false;
    auto [alpha, beta] = alpha_beta(d);
    return alpha == beta;
}

bool threshold_by_erdos_gallai_equality(const Partition& d) {
    if (!erdos_gallai(d)) return false;
    const std::vector<int>& a = d.parts();
    const int n = static_cast<int>(a.size());
    long long head = 0;
    for (int k = 1; k <= n && a[k - 1] >= k - 1; ++k) {
        head += a[k - 1];
        long long tail = 0;
        for (int i = k; i < n; ++i) tail += std::min(a[i], k);
        if (head != static_cast<long long>(k) * (k - 1) + tail) return false;
    }
    return true;
}

bool is_difference_pair(const Partition& x, const Partition& y) {
    if (!gale_ryser(x, y.parts())) return false;
    return conjugate(x) == y.trimmed();
}

}  // namespace ndl
