#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace oracle {

using cellsync::Integer;
using cellsync::Polynomial;
using cellsync::Rational;

namespace {

Polynomial det_poly(const std::vector<std::vector<Polynomial>>& m)
{
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Polynomial total;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][c] * det_poly(minor);
        if (c % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

} // namespace

Polynomial cofactor_char_poly(const IntMatrix& a)
{
    const std::size_t n = a.size();
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational neg = -Rational(static_cast<long>(a[i][j]));
            if (i == j)
                m[i][j] = Polynomial({neg, Rational(1)});
            else
                m[i][j] = Polynomial::constant(neg);
        }
    return det_poly(m);
}

int bareiss_rank(const IntMatrix& a)
{
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = static_cast<long>(a[i][j]);
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                m[i][j] = v / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    const std::size_t n = a.size(), k = b.size(), m = b[0].size();
    IntMatrix out(n, std::vector<std::int64_t>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    return out;
}

IntMatrix shifted(const IntMatrix& a, std::int64_t lambda)
{
    IntMatrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i][i] -= lambda;
    return out;
}

IntMatrix power(const IntMatrix& a, int k)
{
    IntMatrix out(a.size(), std::vector<std::int64_t>(a.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i][i] = 1;
    for (int i = 0; i < k; ++i) out = multiply(out, a);
    return out;
}

std::vector<int> jordan_blocks(const IntMatrix& a, std::int64_t lambda)
{
    const int n = static_cast<int>(a.size());
    IntMatrix b = shifted(a, lambda);
    std::vector<int> ranks{n};
    for (int j = 1; j <= n; ++j) {
        ranks.push_back(bareiss_rank(power(b, j)));
        if (ranks.back() == ranks[ranks.size() - 2]) break;
    }
    // blocks of size exactly j: r_{j-1} - 2 r_j + r_{j+1}
    std::vector<int> blocks;
    for (std::size_t j = 1; j + 1 < ranks.size() + 1; ++j) {
        int next = j + 1 < ranks.size() ? ranks[j + 1] : ranks.back();
        int exact = ranks[j - 1] - 2 * ranks[j] + next;
        for (int t = 0; t < exact; ++t) blocks.push_back(static_cast<int>(j));
    }
    std::sort(blocks.rbegin(), blocks.rend());
    return blocks;
}

std::vector<std::vector<int>> all_partitions(int n)
{
    std::set<std::vector<int>> seen;
    std::vector<int> labels(n, 0);
    while (true) {
        std::map<int, int> relabel;
        std::vector<int> canon(n);
        for (int i = 0; i < n; ++i) {
            auto it = relabel.find(labels[i]);
            if (it == relabel.end()) it = relabel.emplace(labels[i], static_cast<int>(relabel.size())).first;
            canon[i] = it->second;
        }
        seen.insert(canon);
        int i = n - 1;
        while (i >= 0 && labels[i] == n - 1) labels[i--] = 0;
        if (i < 0) break;
        ++labels[i];
    }
    return {seen.begin(), seen.end()};
}

bool invariant_polydiagonal(const IntMatrix& a, const std::vector<int>& labels)
{
    const int classes = *std::max_element(labels.begin(), labels.end()) + 1;
    for (int b = 0; b < classes; ++b) {
        // image of the indicator of class b must be constant on every class
        std::vector<std::int64_t> image(a.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j)
                if (labels[j] == b) image[i] += a[i][j];
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j)
                if (labels[i] == labels[j] && image[i] != image[j]) return false;
    }
    return true;
}

IntMatrix quotient_matrix(const IntMatrix& a, const std::vector<int>& labels)
{
    const int classes = *std::max_element(labels.begin(), labels.end()) + 1;
    IntMatrix q(classes, std::vector<std::int64_t>(classes, 0));
    std::vector<int> rep(classes, -1);
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (rep[labels[i]] < 0) rep[labels[i]] = static_cast<int>(i);
    for (int b = 0; b < classes; ++b)
        for (std::size_t j = 0; j < a.size(); ++j) q[b][labels[j]] += a[rep[b]][j];
    return q;
}

int root_multiplicity(const Polynomial& p, std::int64_t lambda)
{
    // synthetic division by (x - λ) until the remainder is nonzero
    std::vector<Rational> c = p.coefficients();
    const Rational x{static_cast<long>(lambda)};
    int count = 0;
    while (c.size() > 1) {
        std::vector<Rational> q(c.size() - 1);
        Rational carry = c.back();
        for (std::size_t k = c.size() - 1; k-- > 0;) {
            q[k] = carry;
            carry = c[k] + carry * x;
        }
        if (carry != 0) break;
        c = q;
        ++count;
    }
    return count;
}

std::uint64_t bell(int n)
{
    std::vector<std::vector<std::uint64_t>> t(n + 1);
    t[0] = {1};
    for (int i = 1; i <= n; ++i) {
        t[i].push_back(t[i - 1].back());
        for (std::size_t j = 0; j < t[i - 1].size(); ++j) t[i].push_back(t[i].back() + t[i - 1][j]);
    }
    return t[n][0];
}

IntMatrix random_regular(std::uint64_t& state, int n, int valency)
{
    std::mt19937_64 gen(state);
    state = gen();
    IntMatrix a(n, std::vector<std::int64_t>(n, 0));
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < n; ++i)
        for (int e = 0; e < valency; ++e) ++a[i][pick(gen)];
    return a;
}

} // namespace oracle
