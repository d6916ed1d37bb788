#include "cellsync/tuple_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cellsync {

NodeRelation NodeRelation::from_classes(std::vector<std::vector<std::size_t>> classes)
{
    for (auto& c : classes) {
        if (c.empty()) throw std::invalid_argument("empty relation class");
        std::sort(c.begin(), c.end());
    }
    std::sort(classes.begin(), classes.end());
    NodeRelation r;
    r.classes = std::move(classes);
    std::vector<char> seen(r.node_count(), 0);
    for (const auto& c : r.classes)
        for (auto x : c) {
            if (x >= seen.size() || seen[x]) throw std::invalid_argument("relation classes do not partition the nodes");
            seen[x] = 1;
        }
    return r;
}

NodeRelation NodeRelation::identity(std::size_t n)
{
    NodeRelation r;
    for (std::size_t i = 0; i < n; ++i) r.classes.push_back({i});
    return r;
}

NodeRelation NodeRelation::equal_tuples(std::span<const IntTuple> tuples)
{
    std::map<IntTuple, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < tuples.size(); ++i) groups[tuples[i]].push_back(i);
    std::vector<std::vector<std::size_t>> classes;
    for (auto& [t, members] : groups) classes.push_back(std::move(members));
    return from_classes(std::move(classes));
}

bool NodeRelation::is_identity() const
{
    return std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() == 1; });
}

std::size_t NodeRelation::node_count() const
{
    std::size_t n = 0;
    for (const auto& c : classes) n += c.size();
    return n;
}

std::vector<std::size_t> NodeRelation::class_of() const
{
    std::vector<std::size_t> out(node_count(), 0);
    for (std::size_t k = 0; k < classes.size(); ++k)
        for (auto x : classes[k]) out[x] = k;
    return out;
}

std::string NodeRelation::key() const
{
    std::string s;
    for (const auto& c : classes) {
        const bool commas = c.size() > 1 && c.back() + 1 >= 10;
        s += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i && commas) s += ',';
            s += std::to_string(c[i] + 1);
        }
        s += ')';
    }
    return s;
}

TupleMatrix::TupleMatrix(std::size_t rows, std::size_t cols, std::size_t arity)
    : rows_(rows), cols_(cols), data_(rows * cols, IntTuple::zeros(arity))
{
}

TupleMatrix TupleMatrix::from_poset(const Poset& order, std::span<const IntTuple> tuples)
{
    const std::size_t n = order.size();
    if (tuples.size() != n) throw std::invalid_argument("one tuple per poset node required");
    TupleMatrix m(n, n, n ? tuples[0].size() : 0);
    for (std::size_t j = 0; j < n; ++j) m.at(j, j) = tuples[j];
    for (auto [a, b] : order.cover_edges()) {
        m.at(a, b) = tuples[b];
        m.at(b, a) = tuples[a];
    }
    return m;
}

TupleMatrix TupleMatrix::join_columns(const NodeRelation& rel) const
{
    if (rel.node_count() != cols_) throw std::invalid_argument("relation size does not match the matrix");
    const std::size_t arity = data_.empty() ? 0 : data_[0].size();
    TupleMatrix out(rows_, rel.classes.size(), arity);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < rel.classes.size(); ++k)
            for (auto j : rel.classes[k]) out.at(i, k) = tuple_join(out.at(i, k), at(i, j));
    return out;
}

bool TupleMatrix::rows_agree(const NodeRelation& rel) const
{
    for (const auto& c : rel.classes)
        for (auto i : c)
            for (std::size_t k = 0; k < cols_; ++k)
                if (at(i, k) != at(c.front(), k)) return false;
    return true;
}

TupleMatrix TupleMatrix::select_rows(std::span<const std::size_t> rows) const
{
    const std::size_t arity = data_.empty() ? 0 : data_[0].size();
    TupleMatrix out(rows.size(), cols_, arity);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(rows[r], c);
    return out;
}

std::string TupleMatrix::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += ' ';
            for (int x : at(i, j).components()) s += std::to_string(x);
        }
        s += '\n';
    }
    return s;
}

MatrixQuotient quotient_by(const Poset& order, std::span<const IntTuple> tuples, const NodeRelation& rel)
{
    if (rel.node_count() != order.size()) throw std::invalid_argument("relation size does not match the poset");
    for (const auto& c : rel.classes)
        for (auto i : c)
            if (tuples[i] != tuples[c.front()])
                throw std::invalid_argument("relation merges nodes with different tuples");

    MatrixQuotient q;
    q.original = TupleMatrix::from_poset(order, tuples);
    q.joined = q.original.join_columns(rel);
    q.balanced = q.joined.rows_agree(rel);
    for (const auto& c : rel.classes) {
        q.representatives.push_back(c.front());
        q.tuples.push_back(tuples[c.front()]);
    }
    q.reduced = q.joined.select_rows(q.representatives);
    if (!q.balanced) return q;

    const std::size_t p = rel.classes.size();
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b)
            if (a != b && (q.reduced.nonzero(a, b) || q.reduced.nonzero(b, a)) &&
                q.tuples[a].norm() < q.tuples[b].norm())
                edges.emplace_back(a, b);
    q.order = Poset::from_relations(p, edges);
    return q;
}

std::vector<int> recursive_index(const Poset& order, std::span<const IntTuple> tuples)
{
    const std::size_t n = order.size();
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return tuples[a].norm() < tuples[b].norm(); });
    std::vector<int> out(n, 0);
    for (auto s : idx) {
        int v = tuples[s].norm();
        for (std::size_t e = 0; e < n; ++e)
            if (order.less(e, s) && out[e] >= 0) v -= out[e];
        out[s] = v;
    }
    return out;
}

std::vector<int> leader_index(const Poset& order, std::span<const IntTuple> tuples)
{
    std::vector<int> out(order.size(), 0);
    for (std::size_t s = 0; s < order.size(); ++s) {
        IntTuple join = IntTuple::zeros(tuples[s].size());
        for (auto r : order.immediate_leaders(s)) join = tuple_join(join, tuples[r]);
        out[s] = tuples[s].norm() - join.norm();
    }
    return out;
}

} // namespace cellsync
