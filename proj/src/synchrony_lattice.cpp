#include "cellsync/synchrony_lattice.hpp"

#include <algorithm>
#include <string>

namespace cellsync {

void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& fn)
{
    if (n == 0) {
        fn(Partition{});
        return;
    }
    Partition p;
    p.assignment.assign(n, 0);
    std::vector<int> prefix_max(n, 0);   // max label in assignment[0..i]
    while (true) {
        p.class_count = prefix_max[n - 1] + 1;
        fn(p);
        std::size_t i = n - 1;
        while (i > 0 && p.assignment[i] > prefix_max[i - 1]) --i;
        if (i == 0) return;
        ++p.assignment[i];
        prefix_max[i] = std::max(prefix_max[i - 1], p.assignment[i]);
        for (std::size_t k = i + 1; k < n; ++k) {
            p.assignment[k] = 0;
            prefix_max[k] = prefix_max[i];
        }
    }
}

std::vector<Partition> enumerate_balanced(const Network& net, const EnumerationOptions& opts)
{
    if (net.cells() > opts.max_cells)
        throw InputError("network has " + std::to_string(net.cells()) + " cells; partition enumeration is limited to " +
                         std::to_string(opts.max_cells) + " (raise --max-cells)");
    std::vector<Partition> out;
    for_each_partition(net.cells(), [&](const Partition& p) {
        if (is_balanced(net, p)) out.push_back(p);
    });
    std::stable_sort(out.begin(), out.end(),
                     [](const Partition& a, const Partition& b) { return a.class_count < b.class_count; });
    return out;
}

std::optional<std::size_t> SynchronyLattice::find(const Partition& p) const
{
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].partition == p) return i;
    return std::nullopt;
}

SynchronyLattice build_lattice(const Network& net, const EnumerationOptions& opts)
{
    SynchronyLattice lat;
    for (auto& p : enumerate_balanced(net, opts)) {
        int dim = p.class_count;
        lat.nodes.push_back({std::move(p), dim});
    }
    const std::size_t n = lat.nodes.size();
    std::vector<Edge> rel;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && lat.nodes[j].partition.refines(lat.nodes[i].partition)) rel.emplace_back(i, j);
    lat.order = Poset::from_relations(n, rel);
    lat.bottom = 0;
    lat.top = n - 1;
    return lat;
}

std::size_t subspace_meet(const SynchronyLattice& lat, std::size_t x, std::size_t y)
{
    auto joined = partition_join(lat.nodes[x].partition, lat.nodes[y].partition);
    auto idx = lat.find(joined);
    if (!idx) throw std::logic_error("join of balanced partitions is not balanced: " + joined.label());
    return *idx;
}

} // namespace cellsync
