#pragma once

#include "cellsync/network.hpp"
#include "cellsync/spectrum.hpp"
#include "cellsync/synchrony_lattice.hpp"
#include "cellsync/tuple_lattice.hpp"
#include "cellsync/tuple_matrix.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace cellsync {

/// One Jordan block of one eigenvalue: a coordinate of the P_A tuples.
struct BlockSlot {
    std::size_t eigen_class = 0;
    int block_size = 0;
};

std::vector<BlockSlot> block_slots(const Spectrum& spec);
TupleLattice slot_lattice(std::span<const BlockSlot> slots);

/// Jordan data of A restricted to one synchrony subspace.
struct SubspaceTuples {
    std::vector<std::vector<int>> kernel_dims;    // per class, dim(S ∩ ker p^j), j = 1..
    std::vector<std::vector<int>> chain_lengths;  // per class, non-increasing
    std::vector<IntTuple> candidates;             // every chain-to-block placement
    std::vector<IntTuple> resolved;               // placements matching dim(S ∩ ker p^j ∩ im p^i)
};

/// Requires every eigen class to be linear.
SubspaceTuples tuple_of_subspace(const Network& net, const Spectrum& spec, const Partition& p,
                                 std::span<const BlockSlot> slots);

struct PAPoset {
    std::vector<IntTuple> tuples;          // one per lattice node
    std::vector<Edge> inherited_edges;     // lattice covers
    Poset order;                           // componentwise tuple order
};

/// Strict componentwise order on a tuple family.
Poset tuple_order(std::span<const IntTuple> tuples);

struct PACandidate {
    PAPoset poset;
    bool covering_ok = false;
    bool jordan_consistent = false;
    int type = 0;                          // 1-based
    std::vector<std::string> covering_violations;
};

struct PAOptions {
    std::size_t candidate_limit = 100000;
};

struct PAAssignmentSet {
    std::vector<BlockSlot> slots;
    std::vector<SubspaceTuples> node_tuples;
    std::vector<PACandidate> candidates;
    int type_count = 0;
    bool truncated = false;

    bool unique() const { return candidates.size() == 1; }
};

/// Every order-preserving choice of node tuples. Throws SpectrumError on non-linear classes.
PAAssignmentSet build_pa(const SynchronyLattice& lat, const Network& net, const Spectrum& spec,
                         const PAOptions& opts = {});

std::vector<std::string> covering_violations(const SynchronyLattice& lat, const PAPoset& pa);
bool covering_check(const SynchronyLattice& lat, const PAPoset& pa);

/// Ind_P on P_A; the bottom gets |s|.
int ind_p(const PAPoset& pa, std::size_t node);

struct PAQuotient {
    NodeRelation relation;                 // lattice nodes sharing a tuple
    MatrixQuotient matrices;
    bool order_matches_definition = false; // X < Y iff x < y for all members
    bool closed = false;                   // meet-closed in L_M
    std::vector<int> indices;              // Ind_P on P_A/=

    int index_sum() const;
};

PAQuotient quotient_pa(const PAPoset& pa, const TupleLattice& lm);

enum class FilterVerdict { NotApplicable, Pass, Fail };
std::string to_string(FilterVerdict v);

/// Order-isomorphic to {r in {0,1}^d : r_d = 1}.
bool is_simple_max_shape(std::span<const IntTuple> tuples, std::size_t d);

FilterVerdict check_simple_max_filter(const SynchronyLattice& lat, const Network& net,
                                      const Spectrum& spec, const PAPoset& pa);

} // namespace cellsync
