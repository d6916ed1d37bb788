#include "cellsync/poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <tuple>

namespace cellsync {

Poset::Poset(std::size_t n) : n_(n), less_(n * n, 0) {}

Poset Poset::from_relations(std::size_t n, std::span<const Edge> edges)
{
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<std::size_t> indeg(n, 0);
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) throw std::out_of_range("edge endpoint out of range");
        if (a == b) throw CycleError("self-loop at node " + std::to_string(a));
        out[a].push_back(b);
        ++indeg[b];
    }
    std::vector<std::size_t> order;
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) ready.push(i);
    while (!ready.empty()) {
        auto u = ready.top();
        ready.pop();
        order.push_back(u);
        for (auto v : out[u])
            if (--indeg[v] == 0) ready.push(v);
    }
    if (order.size() != n) throw CycleError("relation contains a cycle");

    Poset p(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto u = *it;
        for (auto v : out[u]) {
            p.less_[u * n + v] = 1;
            for (std::size_t w = 0; w < n; ++w)
                if (p.less_[v * n + w]) p.less_[u * n + w] = 1;
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!p.less(a, b)) continue;
            bool direct = true;
            for (std::size_t c = 0; c < n && direct; ++c)
                if (p.less(a, c) && p.less(c, b)) direct = false;
            if (direct) p.covers_.emplace_back(a, b);
        }
    return p;
}

bool Poset::covers(std::size_t lower, std::size_t upper) const
{
    return std::binary_search(covers_.begin(), covers_.end(), Edge{lower, upper});
}

std::vector<std::size_t> Poset::immediate_leaders(std::size_t x) const
{
    std::vector<std::size_t> out;
    for (auto [a, b] : covers_)
        if (b == x) out.push_back(a);
    return out;
}

std::vector<std::size_t> Poset::immediate_followers(std::size_t x) const
{
    std::vector<std::size_t> out;
    for (auto [a, b] : covers_)
        if (a == x) out.push_back(b);
    return out;
}

std::vector<std::size_t> Poset::strictly_below(std::size_t x) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
        if (less(i, x)) out.push_back(i);
    return out;
}

std::vector<std::size_t> Poset::strictly_above(std::size_t x) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
        if (less(x, i)) out.push_back(i);
    return out;
}

std::vector<std::size_t> Poset::linear_extension() const
{
    std::vector<std::size_t> below(n_, 0), order;
    for (std::size_t i = 0; i < n_; ++i) below[i] = immediate_leaders(i).size();
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < n_; ++i)
        if (below[i] == 0) ready.push(i);
    while (!ready.empty()) {
        auto u = ready.top();
        ready.pop();
        order.push_back(u);
        for (auto v : immediate_followers(u))
            if (--below[v] == 0) ready.push(v);
    }
    return order;
}

std::vector<Edge> transitive_reduction(std::size_t n, std::span<const Edge> edges)
{
    return Poset::from_relations(n, edges).cover_edges();
}

bool labeled_isomorphic(const Poset& a, std::span<const int> labels_a, const Poset& b, std::span<const int> labels_b)
{
    const std::size_t n = a.size();
    if (b.size() != n || labels_a.size() != n || labels_b.size() != n) return false;
    using Sig = std::tuple<int, std::size_t, std::size_t, std::size_t, std::size_t>;
    auto signature = [](const Poset& p, std::span<const int> labels, std::size_t i) {
        return Sig{labels[i], p.strictly_below(i).size(), p.strictly_above(i).size(), p.immediate_leaders(i).size(),
                   p.immediate_followers(i).size()};
    };
    std::vector<Sig> sa(n), sb(n);
    for (std::size_t i = 0; i < n; ++i) {
        sa[i] = signature(a, labels_a, i);
        sb[i] = signature(b, labels_b, i);
    }
    {
        auto x = sa, y = sb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return false;
    }
    std::vector<std::size_t> map(n, n);
    std::vector<char> used(n, 0);
    std::function<bool(std::size_t)> extend = [&](std::size_t i) {
        if (i == n) return true;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || sb[j] != sa[i]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k)
                ok = a.less(k, i) == b.less(map[k], j) && a.less(i, k) == b.less(j, map[k]);
            if (!ok) continue;
            map[i] = j;
            used[j] = 1;
            if (extend(i + 1)) return true;
            used[j] = 0;
        }
        return false;
    };
    return extend(0);
}

} // namespace cellsync
