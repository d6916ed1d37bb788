#pragma once

#include "cellsync/network.hpp"
#include "cellsync/poset.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace cellsync {

struct EnumerationOptions {
    std::size_t max_cells = 12;
};

/// Calls fn for every restricted-growth string of length n, lexicographically.
void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& fn);

/// All balanced partitions, ordered by class count then RGS order.
std::vector<Partition> enumerate_balanced(const Network& net, const EnumerationOptions& opts = {});

struct LatticeNode {
    Partition partition;
    int dimension = 0;
};

/// Synchrony subspaces ordered by inclusion. Node i < node j iff Δ_i ⊊ Δ_j.
struct SynchronyLattice {
    std::vector<LatticeNode> nodes;
    Poset order;
    std::size_t bottom = 0;   // full synchrony
    std::size_t top = 0;      // no synchrony

    std::size_t size() const { return nodes.size(); }
    std::optional<std::size_t> find(const Partition& p) const;
};

SynchronyLattice build_lattice(const Network& net, const EnumerationOptions& opts = {});

/// Node for Δ_x ∩ Δ_y (join of the partitions).
std::size_t subspace_meet(const SynchronyLattice& lat, std::size_t x, std::size_t y);

} // namespace cellsync
