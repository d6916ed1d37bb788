#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cellsync {

/// Element of L_M = [0,k_1] x ... x [0,k_m].
class IntTuple {
public:
    IntTuple() = default;
    explicit IntTuple(std::vector<int> components) : c_(std::move(components)) {}
    IntTuple(std::initializer_list<int> components) : c_(components) {}
    static IntTuple zeros(std::size_t m) { return IntTuple(std::vector<int>(m, 0)); }

    std::size_t size() const { return c_.size(); }
    int operator[](std::size_t i) const { return c_[i]; }
    int& operator[](std::size_t i) { return c_[i]; }
    const std::vector<int>& components() const { return c_; }
    int norm() const;
    std::string to_string() const;

    /// lexicographic, for containers only
    friend auto operator<=>(const IntTuple&, const IntTuple&) = default;

private:
    std::vector<int> c_;
};

bool tuple_leq(const IntTuple& a, const IntTuple& b);
bool tuple_less(const IntTuple& a, const IntTuple& b);
IntTuple tuple_meet(const IntTuple& a, const IntTuple& b);
IntTuple tuple_join(const IntTuple& a, const IntTuple& b);

class TupleLattice {
public:
    explicit TupleLattice(IntTuple bounds);
    const IntTuple& bounds() const { return k_; }
    std::size_t arity() const { return k_.size(); }
    bool contains(const IntTuple& t) const;
    /// iterates without storing the lattice
    void for_each(const std::function<void(const IntTuple&)>& fn) const;
    /// s - e_i for every i with s_i > 0
    std::vector<IntTuple> immediate_leaders(const IntTuple& s) const;

private:
    IntTuple k_;
};

/// ind in L_M from its definition |s| - |∨ immediate leaders|.
int ind_by_leaders(const TupleLattice& lm, const IntTuple& s);
/// 1 if s has exactly one nonzero component, else 0.
int ind_closed_form(const IntTuple& s);
/// Both forms, asserted equal.
int ind(const TupleLattice& lm, const IntTuple& s);

/// Contains the top, closed under meet, inside L_M.
bool is_closed(std::span<const IntTuple> subset, const TupleLattice& lm);

std::vector<IntTuple> immediate_leaders_in(std::span<const IntTuple> subset, const IntTuple& s);

/// |s| - |∨ immediate leaders of s in subset|
int ind_subset_leader_form(std::span<const IntTuple> subset, const IntTuple& s);
/// ind s + Σ ind r over removed r whose unique immediate follower in subset is s
int ind_subset_follower_form(std::span<const IntTuple> subset, const TupleLattice& lm, const IntTuple& s);
/// Both forms, asserted equal. subset must be closed.
int ind_subset(std::span<const IntTuple> subset, const TupleLattice& lm, const IntTuple& s);

} // namespace cellsync
