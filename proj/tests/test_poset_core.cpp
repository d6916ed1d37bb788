#include "cellsync/poset.hpp"
#include "cellsync/tuple_lattice.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using namespace cellsync;

TEST_CASE("tuple meet and join")
{
    IntTuple a{1, 0, 2}, b{0, 1, 1};
    CHECK(tuple_meet(a, b) == IntTuple{0, 0, 1});
    CHECK(tuple_join(a, b) == IntTuple{1, 1, 2});
    CHECK(tuple_meet(a, a) == a);
    CHECK(tuple_join(a, a) == a);
    CHECK_THROWS(tuple_meet(a, IntTuple{1, 2}));

    IntTuple s1{2, 0}, s2{1, 1};
    CHECK(tuple_join(s1, s2) == IntTuple{2, 1});
    CHECK(tuple_meet(s1, s2) == IntTuple{1, 0});
    CHECK(s1.norm() + s2.norm() == tuple_join(s1, s2).norm() + tuple_meet(s1, s2).norm());
    CHECK(s1.norm() + s2.norm() == 4);

    CHECK(tuple_leq(IntTuple{0, 1}, IntTuple{1, 1}));
    CHECK(tuple_less(IntTuple{0, 1}, IntTuple{1, 1}));
    CHECK_FALSE(tuple_less(IntTuple{1, 1}, IntTuple{1, 1}));
    CHECK_FALSE(tuple_leq(IntTuple{2, 0}, IntTuple{1, 1}));
    CHECK(IntTuple{2, 1, 1}.to_string() == "(2,1,1)");
}

TEST_CASE("index on the full tuple lattice")
{
    TupleLattice lm(IntTuple{3, 2, 1});
    CHECK(ind(lm, IntTuple{0, 0, 0}) == 0);
    CHECK(ind(lm, IntTuple{3, 0, 0}) == 1);
    CHECK(ind(lm, IntTuple{1, 1, 0}) == 0);
    CHECK(ind_by_leaders(lm, IntTuple{0, 2, 0}) == 1);
    CHECK(ind_closed_form(IntTuple{0, 2, 1}) == 0);
    CHECK(lm.immediate_leaders(IntTuple{1, 0, 1}).size() == 2);
    int count = 0;
    lm.for_each([&](const IntTuple&) { ++count; });
    CHECK(count == 24);
}

TEST_CASE("closed subsets")
{
    TupleLattice full(IntTuple{2, 1, 1});
    std::vector<IntTuple> all;
    full.for_each([&](const IntTuple& t) { all.push_back(t); });
    CHECK(is_closed(all, full));

    TupleLattice sq(IntTuple{1, 1});
    std::vector<IntTuple> missing_meet{{1, 1}, {1, 0}, {0, 1}};
    CHECK_FALSE(is_closed(missing_meet, sq));
    std::vector<IntTuple> ends{{1, 1}, {0, 0}};
    CHECK(is_closed(ends, sq));
    std::vector<IntTuple> no_top{{1, 0}, {0, 0}};
    CHECK_FALSE(is_closed(no_top, sq));
}

TEST_CASE("index on closed subsets")
{
    TupleLattice lm(IntTuple{2, 1, 1});
    std::vector<IntTuple> ends{{2, 1, 1}, {0, 0, 0}};
    CHECK(ind_subset(ends, lm, IntTuple{2, 1, 1}) == 4);
    CHECK(ind_subset(ends, lm, IntTuple{0, 0, 0}) == 0);

    std::vector<IntTuple> all;
    lm.for_each([&](const IntTuple& t) { all.push_back(t); });
    for (const auto& s : all) CHECK(ind_subset(all, lm, s) == ind(lm, s));

    // chain 0 < (0,0,1) < (0,1,1) < (2,1,1): Ind = |s| - |previous|
    std::vector<IntTuple> chain{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {2, 1, 1}};
    REQUIRE(is_closed(chain, lm));
    CHECK(ind_subset(chain, lm, IntTuple{2, 1, 1}) == 2);
    CHECK(ind_subset_follower_form(chain, lm, IntTuple{2, 1, 1}) == 2);
    int sum = 0;
    for (const auto& s : chain) sum += ind_subset(chain, lm, s);
    CHECK(sum == 4);

    std::vector<IntTuple> open{{2, 1, 1}, {1, 0, 1}, {0, 1, 1}};
    CHECK_THROWS(ind_subset(open, lm, IntTuple{2, 1, 1}));
}

TEST_CASE("partial index sums hold at members only")
{
    TupleLattice lm(IntTuple{1, 1});
    std::vector<IntTuple> ends{{0, 0}, {1, 1}};
    REQUIRE(is_closed(ends, lm));
    // below the member (1,1) the sum is |(1,1)|
    CHECK(ind_subset(ends, lm, IntTuple{0, 0}) + ind_subset(ends, lm, IntTuple{1, 1}) == 2);
    // (1,0) is not a member; only (0,0) lies below it and contributes 0, not |(1,0)| = 1
    CHECK(ind_subset(ends, lm, IntTuple{0, 0}) == 0);
}

TEST_CASE("transitive reduction and neighbours")
{
    std::vector<Edge> chain{{0, 1}, {1, 2}, {0, 2}};
    auto red = transitive_reduction(3, chain);
    CHECK(std::set<Edge>(red.begin(), red.end()) == std::set<Edge>{{0, 1}, {1, 2}});

    CHECK(transitive_reduction(4, std::vector<Edge>{}).empty());
    Poset anti(4);
    CHECK(anti.cover_edges().empty());
    CHECK_FALSE(anti.comparable(0, 1));

    std::vector<Edge> diamond{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}};
    Poset d = Poset::from_relations(4, diamond);
    CHECK(d.immediate_leaders(3) == std::vector<std::size_t>{1, 2});
    CHECK(d.immediate_followers(0) == std::vector<std::size_t>{1, 2});
    CHECK(d.strictly_below(3) == std::vector<std::size_t>{0, 1, 2});
    CHECK(d.strictly_above(1) == std::vector<std::size_t>{3});
    CHECK(d.covers(0, 1));
    CHECK_FALSE(d.covers(0, 3));
    CHECK(d.less(0, 3));
    CHECK(d.linear_extension() == std::vector<std::size_t>{0, 1, 2, 3});

    std::vector<Edge> cyc{{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(Poset::from_relations(3, cyc), CycleError);
    CHECK_THROWS_AS(transitive_reduction(3, cyc), CycleError);
    std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(transitive_reduction(2, loop), CycleError);
}

TEST_CASE("labelled isomorphism")
{
    std::vector<Edge> v1{{0, 1}, {0, 2}};
    std::vector<Edge> v2{{2, 0}, {2, 1}};
    Poset a = Poset::from_relations(3, v1), b = Poset::from_relations(3, v2);
    std::vector<int> la{0, 1, 2}, lb{1, 2, 0}, lc{0, 0, 1};
    CHECK(labeled_isomorphic(a, la, b, lb));
    CHECK_FALSE(labeled_isomorphic(a, la, b, lc));
    std::vector<Edge> chain{{0, 1}, {1, 2}};
    Poset c = Poset::from_relations(3, chain);
    std::vector<int> zero{0, 0, 0};
    CHECK_FALSE(labeled_isomorphic(a, zero, c, zero));
    CHECK(labeled_isomorphic(c, zero, c, zero));
}
