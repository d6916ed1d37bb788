#pragma once

// Seed-pinned randomized property suites shared by the unit and acceptance tests.

#include "cellsync/matrix.hpp"
#include "cellsync/network.hpp"
#include "cellsync/polynomial.hpp"
#include "cellsync/spectrum.hpp"
#include "cellsync/synchrony_lattice.hpp"
#include "cellsync/tuple_lattice.hpp"
#include "oracles.hpp"

#include <random>
#include <set>
#include <string>

namespace suites {

struct Outcome {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    void fail(const std::string& what)
    {
        if (failures++ == 0) first_failure = what;
    }
    bool ok(int min_cases) const { return failures == 0 && cases >= min_cases; }
};

inline cellsync::IntTuple random_bounds(std::mt19937& gen)
{
    std::uniform_int_distribution<int> arity(1, 4), bound(1, 3);
    std::vector<int> k(arity(gen));
    for (auto& x : k) x = bound(gen);
    return cellsync::IntTuple(k);
}

// Σ_{s <= a} ind(s) = |a| for every a in L_M
inline Outcome lattice_index_sum(int cases, unsigned seed = 7001)
{
    using namespace cellsync;
    Outcome out;
    std::mt19937 gen(seed);
    for (int c = 0; c < cases; ++c) {
        TupleLattice lm(random_bounds(gen));
        ++out.cases;
        lm.for_each([&](const IntTuple& a) {
            int sum = 0;
            TupleLattice below(a);
            below.for_each([&](const IntTuple& s) { sum += ind(lm, s); });
            if (sum != a.norm()) out.fail("bounds " + lm.bounds().to_string() + " at " + a.to_string());
        });
    }
    return out;
}

// ~30% of L_M, closed under meet, top added
inline std::vector<cellsync::IntTuple> random_closed_subset(const cellsync::TupleLattice& lm, std::mt19937& gen)
{
    using namespace cellsync;
    std::bernoulli_distribution keep(0.3);
    std::set<IntTuple> sub;
    lm.for_each([&](const IntTuple& t) {
        if (keep(gen)) sub.insert(t);
    });
    sub.insert(lm.bounds());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<IntTuple> cur(sub.begin(), sub.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j)
                if (sub.insert(tuple_meet(cur[i], cur[j])).second) grew = true;
    }
    return {sub.begin(), sub.end()};
}

// non-negativity, partial sums, total |k|, both index forms, unique followers
inline Outcome closed_subset_indices(int cases, unsigned seed = 7002)
{
    using namespace cellsync;
    Outcome out;
    std::mt19937 gen(seed);
    for (int c = 0; c < cases; ++c) {
        TupleLattice lm(random_bounds(gen));
        auto sub = random_closed_subset(lm, gen);
        ++out.cases;
        const std::string where = "bounds " + lm.bounds().to_string() + " size " + std::to_string(sub.size());
        if (!is_closed(sub, lm)) {
            out.fail(where + ": generator produced an open subset");
            continue;
        }
        std::set<IntTuple> members(sub.begin(), sub.end());
        std::vector<int> index;
        int total = 0;
        for (const auto& s : sub) {
            int leader = ind_subset_leader_form(sub, s);
            int follower = ind_subset_follower_form(sub, lm, s);
            if (leader != follower) out.fail(where + ": forms disagree at " + s.to_string());
            if (leader < 0) out.fail(where + ": negative at " + s.to_string());
            index.push_back(leader);
            total += leader;
        }
        if (total != lm.bounds().norm()) out.fail(where + ": total " + std::to_string(total));
        lm.for_each([&](const IntTuple& a) {
            if (members.count(a)) {
                int partial = 0;
                for (std::size_t i = 0; i < sub.size(); ++i)
                    if (tuple_leq(sub[i], a)) partial += index[i];
                if (partial != a.norm()) out.fail(where + ": partial sum below " + a.to_string());
                return;
            }
            // removed element: exactly one minimal member above it
            std::vector<IntTuple> above;
            for (const auto& t : sub)
                if (tuple_less(a, t)) above.push_back(t);
            int minimal = 0;
            for (const auto& t : above) {
                bool is_min = true;
                for (const auto& u : above)
                    if (tuple_less(u, t)) is_min = false;
                minimal += is_min;
            }
            if (minimal != 1) out.fail(where + ": removed " + a.to_string() + " has " + std::to_string(minimal) + " followers");
        });
    }
    return out;
}

// p(A) = 0 for p the characteristic polynomial
inline Outcome cayley_hamilton(int cases, unsigned seed = 7003)
{
    using namespace cellsync;
    Outcome out;
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> size(1, 6), entry(-4, 4);
    for (int c = 0; c < cases; ++c) {
        const int n = size(gen);
        oracle::IntMatrix a(n, std::vector<std::int64_t>(n));
        for (auto& row : a)
            for (auto& x : row) x = entry(gen);
        ++out.cases;
        Matrix m = Matrix::from_integers(a);
        Polynomial p = char_poly(m);
        if (!p.evaluate(m).is_zero()) out.fail("matrix " + m.to_string());
        if (n <= 5 && p != oracle::cofactor_char_poly(a)) out.fail("cofactor mismatch " + m.to_string());
    }
    return out;
}

inline oracle::IntMatrix random_network(std::mt19937& gen, std::uint64_t& state)
{
    std::uniform_int_distribution<int> size(1, 6), val(1, 3);
    const int n = size(gen);
    return oracle::random_regular(state, n, val(gen));
}

// balanced partitions are exactly the A-invariant polydiagonals
inline Outcome balanced_iff_invariant(int cases, unsigned seed = 7004)
{
    using namespace cellsync;
    Outcome out;
    std::mt19937 gen(seed);
    std::uint64_t state = seed;
    for (int c = 0; c < cases; ++c) {
        auto a = random_network(gen, state);
        Network net = Network::from_adjacency(a);
        Matrix m = net.matrix();
        ++out.cases;
        std::set<std::vector<int>> listed;
        for (const auto& p : enumerate_balanced(net)) listed.insert(p.assignment);
        for_each_partition(net.cells(), [&](const Partition& p) {
            auto basis = polydiagonal_basis(net, p);
            bool invariant = true;
            for (const auto& v : basis)
                if (!in_span(basis, m.apply(v), net.cells())) invariant = false;
            bool bal = is_balanced(net, p);
            if (bal != invariant) out.fail("partition " + p.label() + " of " + m.to_string());
            if (bal != static_cast<bool>(listed.count(p.assignment)))
                out.fail("enumeration disagrees on " + p.label());
        });
    }
    return out;
}

// char poly of every quotient divides the char poly of the network
inline Outcome quotient_divisibility(int cases, unsigned seed = 7005)
{
    using namespace cellsync;
    Outcome out;
    std::mt19937 gen(seed);
    std::uint64_t state = seed;
    for (int c = 0; c < cases; ++c) {
        auto a = random_network(gen, state);
        Network net = Network::from_adjacency(a);
        Polynomial whole = char_poly(net.matrix());
        ++out.cases;
        for (const auto& p : enumerate_balanced(net)) {
            Network q = quotient(net, p);
            Polynomial part = char_poly(q.matrix());
            if (!divmod(whole, part).second.is_zero()) out.fail("partition " + p.label());
            if (q.valency != net.valency) out.fail("valency changed for " + p.label());
        }
    }
    return out;
}

} // namespace suites
