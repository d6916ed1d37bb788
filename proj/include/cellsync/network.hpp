#pragma once

#include "cellsync/matrix.hpp"

#include <compare>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cellsync {

/// Malformed or non-regular input.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Partition of cells 0..n-1, stored as a restricted-growth string.
struct Partition {
    std::vector<int> assignment;
    int class_count = 0;

    /// Relabels classes by first occurrence.
    static Partition from_assignment(std::vector<int> labels);
    /// "aabb" style (or 0-based integers past 26 classes)
    static Partition from_label(std::string_view label);
    static Partition singletons(std::size_t n);
    static Partition single_class(std::size_t n);

    std::size_t size() const { return assignment.size(); }
    std::vector<std::vector<int>> classes() const;
    std::string label() const;
    /// every class of *this lies inside a class of `coarser`
    bool refines(const Partition& coarser) const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// finest common coarsening
Partition partition_join(const Partition& a, const Partition& b);

struct Network {
    std::string name;
    std::vector<std::vector<std::int64_t>> adjacency;
    std::int64_t valency = 0;
    std::vector<std::string> warnings;

    std::size_t cells() const { return adjacency.size(); }
    Matrix matrix() const;

    /// Validates shape, non-negativity and constant row sum.
    static Network from_adjacency(std::vector<std::vector<std::int64_t>> rows, std::string name = {});
};

enum class InputFormat { Auto, Text, Json };

Network parse_network(std::string_view content, InputFormat format = InputFormat::Auto);
Network load_network(const std::filesystem::path& path, InputFormat format = InputFormat::Auto);

std::string to_text(const Network& net);
std::string to_json_string(const Network& net);

bool is_balanced(const Network& net, const Partition& p);
/// throws InputError if p is not balanced
Network quotient(const Network& net, const Partition& p);
/// Indicator vectors of the classes, in class order.
std::vector<Vector> polydiagonal_basis(const Network& net, const Partition& p);

} // namespace cellsync
