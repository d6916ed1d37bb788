#include "property_suites.hpp"

#include <doctest.h>

namespace {

void require(const suites::Outcome& o)
{
    INFO(o.first_failure);
    CHECK(o.cases >= 200);
    CHECK(o.failures == 0);
}

} // namespace

TEST_CASE("index sums below every element of random tuple lattices") { require(suites::lattice_index_sum(250)); }

TEST_CASE("index properties on random closed subsets") { require(suites::closed_subset_indices(250)); }

TEST_CASE("Cayley-Hamilton on random integer matrices") { require(suites::cayley_hamilton(250)); }

TEST_CASE("balanced iff invariant on random regular networks") { require(suites::balanced_iff_invariant(220)); }

TEST_CASE("quotient characteristic polynomials divide the original") { require(suites::quotient_divisibility(220)); }
