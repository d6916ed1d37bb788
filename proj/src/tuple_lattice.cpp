#include "cellsync/tuple_lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace cellsync {

namespace {

void check_arity(const IntTuple& a, const IntTuple& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("tuple arity mismatch: " + a.to_string() + " vs " + b.to_string());
}

bool member(std::span<const IntTuple> subset, const IntTuple& t)
{
    return std::find(subset.begin(), subset.end(), t) != subset.end();
}

IntTuple join_all(std::span<const IntTuple> ts, std::size_t m)
{
    IntTuple out = IntTuple::zeros(m);
    for (const auto& t : ts) out = tuple_join(out, t);
    return out;
}

} // namespace

int IntTuple::norm() const
{
    int s = 0;
    for (int x : c_) s += x;
    return s;
}

std::string IntTuple::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
    return s + ")";
}

bool tuple_leq(const IntTuple& a, const IntTuple& b)
{
    check_arity(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool tuple_less(const IntTuple& a, const IntTuple& b) { return tuple_leq(a, b) && a != b; }

IntTuple tuple_meet(const IntTuple& a, const IntTuple& b)
{
    check_arity(a, b);
    IntTuple out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
    return out;
}

IntTuple tuple_join(const IntTuple& a, const IntTuple& b)
{
    check_arity(a, b);
    IntTuple out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

TupleLattice::TupleLattice(IntTuple bounds) : k_(std::move(bounds))
{
    for (std::size_t i = 0; i < k_.size(); ++i)
        if (k_[i] < 0) throw std::invalid_argument("negative lattice bound " + k_.to_string());
}

bool TupleLattice::contains(const IntTuple& t) const
{
    if (t.size() != k_.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] < 0 || t[i] > k_[i]) return false;
    return true;
}

void TupleLattice::for_each(const std::function<void(const IntTuple&)>& fn) const
{
    IntTuple t = IntTuple::zeros(k_.size());
    while (true) {
        fn(t);
        std::size_t i = 0;
        while (i < t.size() && t[i] == k_[i]) t[i++] = 0;
        if (i == t.size()) return;
        ++t[i];
    }
}

std::vector<IntTuple> TupleLattice::immediate_leaders(const IntTuple& s) const
{
    std::vector<IntTuple> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] > 0) {
            IntTuple r = s;
            --r[i];
            out.push_back(std::move(r));
        }
    return out;
}

int ind_by_leaders(const TupleLattice& lm, const IntTuple& s)
{
    auto leaders = lm.immediate_leaders(s);
    return s.norm() - join_all(leaders, s.size()).norm();
}

int ind_closed_form(const IntTuple& s)
{
    int nonzero = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != 0) ++nonzero;
    return nonzero == 1 ? 1 : 0;
}

int ind(const TupleLattice& lm, const IntTuple& s)
{
    int a = ind_by_leaders(lm, s);
    int b = ind_closed_form(s);
    if (a != b) throw std::logic_error("ind forms disagree at " + s.to_string());
    return a;
}

bool is_closed(std::span<const IntTuple> subset, const TupleLattice& lm)
{
    if (!member(subset, lm.bounds())) return false;
    for (const auto& t : subset)
        if (!lm.contains(t)) return false;
    for (const auto& a : subset)
        for (const auto& b : subset)
            if (!member(subset, tuple_meet(a, b))) return false;
    return true;
}

std::vector<IntTuple> immediate_leaders_in(std::span<const IntTuple> subset, const IntTuple& s)
{
    std::vector<IntTuple> out;
    for (const auto& r : subset) {
        if (!tuple_less(r, s)) continue;
        bool maximal = true;
        for (const auto& q : subset)
            if (tuple_less(r, q) && tuple_less(q, s)) {
                maximal = false;
                break;
            }
        if (maximal && !member(out, r)) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int ind_subset_leader_form(std::span<const IntTuple> subset, const IntTuple& s)
{
    auto leaders = immediate_leaders_in(subset, s);
    return s.norm() - join_all(leaders, s.size()).norm();
}

int ind_subset_follower_form(std::span<const IntTuple> subset, const TupleLattice& lm, const IntTuple& s)
{
    int total = ind(lm, s);
    lm.for_each([&](const IntTuple& r) {
        if (member(subset, r)) return;
        IntTuple follower = lm.bounds();
        for (const auto& t : subset)
            if (tuple_leq(r, t)) follower = tuple_meet(follower, t);
        if (follower == s) total += ind(lm, r);
    });
    return total;
}

int ind_subset(std::span<const IntTuple> subset, const TupleLattice& lm, const IntTuple& s)
{
    if (!is_closed(subset, lm)) throw std::invalid_argument("subset is not closed in L_M");
    if (!member(subset, s)) throw std::invalid_argument(s.to_string() + " is not in the subset");
    int a = ind_subset_leader_form(subset, s);
    int b = ind_subset_follower_form(subset, lm, s);
    if (a != b)
        throw std::logic_error("Ind forms disagree at " + s.to_string() + ": " + std::to_string(a) + " vs " +
                               std::to_string(b));
    return a;
}

} // namespace cellsync
