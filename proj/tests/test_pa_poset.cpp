#include "cellsync/ea_poset.hpp"
#include "cellsync/pa_poset.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace cellsync;

namespace {

struct Setup {
    Network net;
    Spectrum spec;
    SynchronyLattice lat;
    PAAssignmentSet pa;

    explicit Setup(const oracle::IntMatrix& a)
        : net(fixture::net(a)),
          spec(analyze_spectrum(net.matrix(), net.valency)),
          lat(build_lattice(net)),
          pa(build_pa(lat, net, spec))
    {
    }

    std::size_t node(const char* label) const { return *lat.find(Partition::from_label(label)); }
};

std::vector<std::vector<int>> as_ints(const std::vector<IntTuple>& ts)
{
    std::vector<std::vector<int>> out;
    for (const auto& t : ts) out.push_back(t.components());
    return out;
}

} // namespace

TEST_CASE("block slots follow the eigen classes")
{
    Setup s(fixture::nilpotent4);
    REQUIRE(s.pa.slots.size() == 3);
    CHECK(s.pa.slots[0].block_size == 2);
    CHECK(s.pa.slots[1].block_size == 1);
    CHECK(s.pa.slots[2].eigen_class == 1);
    CHECK(slot_lattice(s.pa.slots).bounds() == IntTuple{2, 1, 1});
}

TEST_CASE("tuples of single synchrony subspaces")
{
    Setup s(fixture::nilpotent4);
    auto t = tuple_of_subspace(s.net, s.spec, Partition::from_label("aaab"), s.pa.slots);
    CHECK(t.chain_lengths[0] == std::vector<int>{1});
    CHECK(t.kernel_dims[0] == std::vector<int>{1, 1});
    CHECK(t.resolved == std::vector<IntTuple>{IntTuple{0, 1, 1}});
    CHECK(std::set<IntTuple>(t.candidates.begin(), t.candidates.end()) == std::set<IntTuple>{{0, 1, 1}, {1, 0, 1}});

    auto other = tuple_of_subspace(s.net, s.spec, Partition::from_label("abbb"), s.pa.slots);
    CHECK(other.resolved == std::vector<IntTuple>{IntTuple{0, 1, 1}});

    auto top = tuple_of_subspace(s.net, s.spec, Partition::singletons(4), s.pa.slots);
    CHECK(top.candidates == std::vector<IntTuple>{IntTuple{2, 1, 1}});
    auto bottom = tuple_of_subspace(s.net, s.spec, Partition::single_class(4), s.pa.slots);
    CHECK(bottom.candidates == std::vector<IntTuple>{IntTuple{0, 0, 1}});
}

TEST_CASE("candidates for the nilpotent fixture")
{
    Setup s(fixture::nilpotent4);
    REQUIRE(s.pa.candidates.size() == 4);
    CHECK(s.pa.type_count == 3);
    CHECK_FALSE(s.pa.unique());
    std::vector<int> types;
    for (const auto& c : s.pa.candidates) types.push_back(c.type);
    CHECK(types == std::vector<int>{1, 2, 2, 3});

    const auto& t1 = s.pa.candidates[0];
    CHECK(as_ints(t1.poset.tuples) ==
          std::vector<std::vector<int>>{{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {2, 0, 1}, {2, 1, 1}});
    CHECK(t1.poset.tuples[s.node("aaab")] == IntTuple{0, 1, 1});
    CHECK(t1.poset.tuples[s.node("abbb")] == IntTuple{0, 1, 1});
    CHECK(t1.jordan_consistent);

    for (const auto& c : s.pa.candidates) CHECK(c.covering_ok == (c.type == 1));
    CHECK(covering_check(s.lat, t1.poset));
    CHECK(covering_violations(s.lat, s.pa.candidates[3].poset).size() > 0);

    const auto& t3 = s.pa.candidates[3];
    CHECK_FALSE(t3.jordan_consistent);
    for (const char* label : {"aaab", "abba", "abbb"}) CHECK(t3.poset.tuples[s.node(label)] == IntTuple{1, 0, 1});

    auto n111 = s.node("abbc");
    CHECK(t1.poset.tuples[n111] == IntTuple{1, 1, 1});
    CHECK(ind_p(t1.poset, n111) == 0);
    CHECK(ind_p(t3.poset, n111) == 1);
    CHECK(ind_p(t1.poset, s.lat.bottom) == 1);
}

TEST_CASE("candidates for the fork fixture")
{
    Setup s(fixture::fork4);
    REQUIRE(s.pa.candidates.size() == 8);
    CHECK(s.pa.type_count == 3);
    std::map<int, int> per_type;
    for (const auto& c : s.pa.candidates) {
        ++per_type[c.type];
        CHECK(c.covering_ok == (c.type == 2));
        if (c.type == 2) CHECK(NodeRelation::equal_tuples(c.poset.tuples).key() == "(1)(25)(3)(4)(68)(7)(9)");
        if (c.type == 1) CHECK(NodeRelation::equal_tuples(c.poset.tuples).classes.size() == 8);
    }
    CHECK(per_type == std::map<int, int>{{1, 4}, {2, 2}, {3, 2}});

    for (const auto& c : s.pa.candidates) {
        if (c.type != 2) continue;
        PAQuotient q = quotient_pa(c.poset, slot_lattice(s.pa.slots));
        CHECK(q.matrices.balanced);
        CHECK(q.matrices.tuples.size() == 7);
        CHECK(q.closed);
        CHECK(q.order_matches_definition);
        CHECK(q.index_sum() == 4);
        // the two merged pairs sit at rank 2 and rank 3
        std::multiset<int> merged_ranks;
        for (const auto& cls : q.relation.classes)
            if (cls.size() == 2) merged_ranks.insert(s.lat.nodes[cls[0]].dimension);
        CHECK(merged_ranks == std::multiset<int>{2, 3});
    }
}

TEST_CASE("candidates for the remaining fixtures")
{
    Setup t(fixture::triple4);
    CHECK(t.pa.candidates.size() == 8);
    for (const auto& c : t.pa.candidates) CHECK(c.covering_ok);

    Setup c5(fixture::counter5);
    CHECK(c5.pa.candidates.size() == 4);
    for (const auto& c : c5.pa.candidates) CHECK_FALSE(c.covering_ok);
}

TEST_CASE("simple spectrum gives one candidate and a trivial quotient")
{
    Setup s(oracle::IntMatrix{{0, 1}, {1, 0}});
    REQUIRE(s.pa.candidates.size() == 1);
    CHECK(s.pa.unique());
    const auto& c = s.pa.candidates[0];
    CHECK(c.covering_ok);
    PAQuotient q = quotient_pa(c.poset, slot_lattice(s.pa.slots));
    CHECK(q.relation.is_identity());
    CHECK(q.matrices.tuples == c.poset.tuples);
    CHECK(q.matrices.reduced == q.matrices.original);
    CHECK(check_simple_max_filter(s.lat, s.net, s.spec, c.poset) == FilterVerdict::Pass);
}

TEST_CASE("single node poset")
{
    Setup s(oracle::IntMatrix{{1}});
    REQUIRE(s.pa.candidates.size() == 1);
    CHECK(covering_check(s.lat, s.pa.candidates[0].poset));
    CHECK(ind_p(s.pa.candidates[0].poset, 0) == 1);
}

TEST_CASE("simple-max filter on the triple fixture")
{
    Setup s(fixture::triple4);
    CHECK(s.pa.type_count == 2);
    for (const auto& c : s.pa.candidates) {
        auto rel = NodeRelation::equal_tuples(c.poset.tuples);
        std::size_t largest = 0;
        for (const auto& cls : rel.classes) largest = std::max(largest, cls.size());
        auto verdict = check_simple_max_filter(s.lat, s.net, s.spec, c.poset);
        if (largest == 3) {
            CHECK(c.type == 2);
            CHECK(verdict == FilterVerdict::Fail);
        } else {
            CHECK(c.type == 1);
            CHECK(verdict == FilterVerdict::Pass);
        }
    }
    Setup one(oracle::IntMatrix{{1}});
    CHECK(check_simple_max_filter(one.lat, one.net, one.spec, one.pa.candidates[0].poset) ==
          FilterVerdict::NotApplicable);
}

TEST_CASE("simple-max shape")
{
    std::vector<IntTuple> la{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    CHECK(is_simple_max_shape(la, 3));
    std::vector<IntTuple> chain{{0, 0, 1}, {1, 0, 1}, {1, 1, 1}};
    CHECK_FALSE(is_simple_max_shape(chain, 3));
}

TEST_CASE("structural properties of every candidate")
{
    for (const auto* m : {&fixture::nilpotent4, &fixture::fork4, &fixture::triple4, &fixture::counter5}) {
        Setup s(*m);
        TupleLattice lm = slot_lattice(s.pa.slots);
        EAPoset ea = build_ea(s.lat, s.net, s.spec);
        for (const auto& c : s.pa.candidates) {
            const auto& tuples = c.poset.tuples;
            for (std::size_t i = 0; i < s.lat.size(); ++i) {
                CHECK(tuples[i].norm() == s.lat.nodes[i].dimension);
                CHECK(lm.contains(tuples[i]));
                for (std::size_t j = 0; j < s.lat.size(); ++j)
                    if (s.lat.order.less(i, j)) CHECK(tuple_less(tuples[i], tuples[j]));
                // eigen tuple = per-class sums of slots
                std::vector<int> sums(s.spec.classes.size(), 0);
                for (std::size_t k = 0; k < s.pa.slots.size(); ++k) sums[s.pa.slots[k].eigen_class] += tuples[i][k];
                CHECK(IntTuple(sums) == ea.tuples[i]);
            }
            for (auto [a, b] : c.poset.inherited_edges) CHECK(c.poset.order.less(a, b));

            PAQuotient q = quotient_pa(c.poset, lm);
            CHECK(q.matrices.balanced);
            CHECK(q.closed);
            int total = 0;
            for (int v : q.indices) {
                CHECK(v >= 0);
                total += v;
            }
            CHECK(total == static_cast<int>(s.net.cells()));
            CHECK(recursive_index(q.matrices.order, q.matrices.tuples) == q.indices);

            // merged nodes keep the index of any member
            auto cls = q.relation.class_of();
            for (std::size_t i = 0; i < s.lat.size(); ++i)
                if (c.covering_ok) CHECK(ind_p(c.poset, i) == q.indices[cls[i]]);

            // column uniformity of C
            const auto& cm = q.matrices.original;
            for (std::size_t j = 0; j < cm.cols(); ++j)
                for (std::size_t i = 0; i < cm.rows(); ++i)
                    if (cm.nonzero(i, j)) CHECK(cm.at(i, j) == tuples[j]);
        }
    }
}
