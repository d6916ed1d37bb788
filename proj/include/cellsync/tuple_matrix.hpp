#pragma once

#include "cellsync/poset.hpp"
#include "cellsync/tuple_lattice.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace cellsync {

/// Equivalence relation on poset nodes, classes sorted by smallest member.
struct NodeRelation {
    std::vector<std::vector<std::size_t>> classes;

    static NodeRelation from_classes(std::vector<std::vector<std::size_t>> classes);
    static NodeRelation identity(std::size_t n);
    /// nodes with equal tuples
    static NodeRelation equal_tuples(std::span<const IntTuple> tuples);

    bool is_identity() const;
    std::size_t node_count() const;
    std::vector<std::size_t> class_of() const;
    /// "(1)(25)(3)" with 1-based node numbers
    std::string key() const;

    friend bool operator==(const NodeRelation&, const NodeRelation&) = default;
};

/// Square or rectangular grid of tuples; zero tuples mean "no connection".
class TupleMatrix {
public:
    TupleMatrix() = default;
    TupleMatrix(std::size_t rows, std::size_t cols, std::size_t arity);

    /// (i,j) = t_j when i == j or i,j are joined by a Hasse edge.
    static TupleMatrix from_poset(const Poset& order, std::span<const IntTuple> tuples);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const IntTuple& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    IntTuple& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    bool nonzero(std::size_t r, std::size_t c) const { return at(r, c).norm() != 0; }

    /// column j of the result is the join of the columns in class j
    TupleMatrix join_columns(const NodeRelation& rel) const;
    /// rows inside each class are identical
    bool rows_agree(const NodeRelation& rel) const;
    TupleMatrix select_rows(std::span<const std::size_t> rows) const;

    std::string to_string() const;
    friend bool operator==(const TupleMatrix&, const TupleMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<IntTuple> data_;
};

struct MatrixQuotient {
    TupleMatrix original;                      // s x s
    TupleMatrix joined;                        // s x p
    TupleMatrix reduced;                       // p x p, one representative row per class
    bool balanced = false;
    std::vector<std::size_t> representatives;  // first member of each class
    std::vector<IntTuple> tuples;              // class tuples
    Poset order;                               // generated by off-diagonal entries of `reduced`
};

/// Requires equal tuples inside every class. Order is only built when balanced.
MatrixQuotient quotient_by(const Poset& order, std::span<const IntTuple> tuples, const NodeRelation& rel);

/// Ind(s) = |s| - Σ_{e < s, Ind(e) >= 0} Ind(e), evaluated bottom-up.
std::vector<int> recursive_index(const Poset& order, std::span<const IntTuple> tuples);

/// Ind(s) = |s| - |∨ tuples of the immediate leaders of s| (0 tuple when none).
std::vector<int> leader_index(const Poset& order, std::span<const IntTuple> tuples);

} // namespace cellsync
