#pragma once

#include "cellsync/network.hpp"
#include "cellsync/pa_poset.hpp"
#include "cellsync/spectrum.hpp"
#include "cellsync/synchrony_lattice.hpp"
#include "cellsync/tuple_lattice.hpp"
#include "cellsync/tuple_matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cellsync {

/// Multiplicities of each eigen class in the quotient's characteristic polynomial.
IntTuple eigen_tuple(const Network& net, const Partition& p, const Spectrum& spec);

struct EAPoset {
    std::vector<IntTuple> tuples;   // one per lattice node
    Poset order;                    // inherited from the lattice
};

EAPoset build_ea(const SynchronyLattice& lat, const Network& net, const Spectrum& spec);

std::vector<int> ind_e(const EAPoset& ea);
int ind_e(const EAPoset& ea, std::size_t node);

struct RelationOptions {
    std::size_t max_class_size = 10;      // Bell(10) = 115975 partitions of one class
    std::size_t max_relations = 2000000;
};

/// Cartesian product of set partitions of the equal-tuple classes, finest first.
std::vector<NodeRelation> enumerate_relations(const EAPoset& ea, const RelationOptions& opts = {});

TupleMatrix e_matrix(const EAPoset& ea);
bool is_balanced_e(const TupleMatrix& e, const NodeRelation& rel);

struct ReductionResult {
    NodeRelation relation;
    bool balanced = false;
    std::vector<IntTuple> tuples;     // E_A/~ nodes
    Poset order;
    std::vector<int> indices;
    bool valid = false;               // all indices >= 0 and Σ = n
    bool closed = false;              // tuples meet-closed in L_M
    std::vector<std::string> notes;
};

ReductionResult validate_reduction(const EAPoset& ea, const NodeRelation& rel, std::size_t cells);

enum class FilterPolicy { None, Covering, SimpleMax };
std::string to_string(FilterPolicy f);
FilterPolicy parse_filter(const std::string& s);

struct ReduceOptions {
    EnumerationOptions enumeration;
    RelationOptions relations;
    PAOptions pa;
    FilterPolicy filter = FilterPolicy::Covering;
    bool stop_at_first_valid = false;
};

struct ValidReduction {
    std::size_t result = 0;                 // index into ReductionReport::results
    int type = 0;                           // isomorphism class, 1-based
    std::vector<std::size_t> pa_candidates; // candidates inducing the same relation
    bool covering_consistent = false;
    FilterVerdict simple_max = FilterVerdict::NotApplicable;
    bool survives = false;
};

struct ReductionReport {
    Network network;
    Spectrum spectrum;
    SynchronyLattice lattice;
    EAPoset ea;
    std::vector<int> ind_e;
    std::vector<ReductionResult> results;   // identity first
    std::vector<ValidReduction> valid;      // non-identity only
    int type_count = 0;
    bool identity_valid = false;
    std::optional<PAAssignmentSet> pa;
    std::vector<FilterVerdict> pa_simple_max;   // per candidate
    std::vector<PAQuotient> pa_quotients;       // per candidate
    FilterPolicy filter = FilterPolicy::Covering;
    bool stopped_early = false;
    std::vector<std::string> diagnostics;

    bool has_reduction() const { return identity_valid || !valid.empty(); }
};

ReductionReport reduce(const Network& net, const ReduceOptions& opts = {});

} // namespace cellsync
