#pragma once

#include "cellsync/poset.hpp"
#include "cellsync/tuple_lattice.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cellsync {

struct DotNode {
    std::string label;
    IntTuple tuple;     // rank = norm; equal tuples share a fill colour
};

/// Hasse diagram, bottom to top, one rank=same group per norm.
std::string export_dot(const Poset& order, std::span<const DotNode> nodes, std::string_view graph_name);

/// Fill colour per node; "white" for tuples that occur once.
std::vector<std::string> dot_fill_colors(std::span<const DotNode> nodes);

void write_file(const std::filesystem::path& path, std::string_view content);

} // namespace cellsync
