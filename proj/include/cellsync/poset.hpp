#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cellsync {

class CycleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<std::size_t, std::size_t>;   // (lower, upper)

/// Finite strict order given by its closure; covers are the Hasse edges.
class Poset {
public:
    Poset() = default;
    explicit Poset(std::size_t n);
    /// Closure of the relation generated by `edges`. Throws CycleError.
    static Poset from_relations(std::size_t n, std::span<const Edge> edges);

    std::size_t size() const { return n_; }
    bool less(std::size_t a, std::size_t b) const { return less_[a * n_ + b] != 0; }
    bool leq(std::size_t a, std::size_t b) const { return a == b || less(a, b); }
    bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }
    bool covers(std::size_t lower, std::size_t upper) const;

    const std::vector<Edge>& cover_edges() const { return covers_; }
    std::vector<std::size_t> immediate_leaders(std::size_t x) const;
    std::vector<std::size_t> immediate_followers(std::size_t x) const;
    std::vector<std::size_t> strictly_below(std::size_t x) const;
    std::vector<std::size_t> strictly_above(std::size_t x) const;
    /// linear extension, ties by index
    std::vector<std::size_t> linear_extension() const;

    friend bool operator==(const Poset& a, const Poset& b) { return a.n_ == b.n_ && a.less_ == b.less_; }

private:
    std::size_t n_ = 0;
    std::vector<char> less_;
    std::vector<Edge> covers_;
};

/// Hasse edges of the order generated by `edges`. Throws CycleError.
std::vector<Edge> transitive_reduction(std::size_t n, std::span<const Edge> edges);

/// Order isomorphism that also preserves the integer labels.
bool labeled_isomorphic(const Poset& a, std::span<const int> labels_a,
                        const Poset& b, std::span<const int> labels_b);

} // namespace cellsync
