#include "cellsync/pa_poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace cellsync {

namespace {

void require_linear(const Spectrum& spec)
{
    for (const auto& c : spec.classes)
        if (!c.certified || !c.root())
            throw SpectrumError("tuple assignment needs rational eigenvalues; factor " + c.label() + " is not linear");
}

// all injective placements of chains into blocks, smallest fitting block first
std::vector<std::vector<int>> placements(const std::vector<int>& chains, const std::vector<int>& blocks)
{
    std::set<std::vector<int>> found;
    std::vector<int> slot(blocks.size(), 0);
    std::function<void(std::size_t)> place = [&](std::size_t i) {
        if (i == chains.size()) {
            found.insert(slot);
            return;
        }
        for (std::size_t b = blocks.size(); b-- > 0;) {
            if (slot[b] != 0 || blocks[b] < chains[i]) continue;
            slot[b] = chains[i];
            place(i + 1);
            slot[b] = 0;
        }
    };
    place(0);
    return {found.begin(), found.end()};
}

std::vector<Vector> times(const Matrix& m, std::span<const Vector> vs)
{
    std::vector<Vector> out;
    for (const auto& v : vs) out.push_back(m.apply(v));
    return out;
}

// basis of S ∩ ker m, S spanned by the independent columns `basis`
std::vector<Vector> restrict_kernel(const Matrix& m, std::span<const Vector> basis, std::size_t dim)
{
    auto images = times(m, basis);
    auto coeffs = kernel_basis(Matrix::from_columns(images, dim));
    std::vector<Vector> out;
    for (const auto& y : coeffs) {
        Vector v(dim);
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (std::size_t r = 0; r < dim; ++r) v[r] += y[k] * basis[k][r];
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::vector<std::size_t>> slot_groups(std::span<const BlockSlot> slots)
{
    std::map<std::pair<std::size_t, int>, std::vector<std::size_t>> g;
    for (std::size_t k = 0; k < slots.size(); ++k) g[{slots[k].eigen_class, slots[k].block_size}].push_back(k);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [key, members] : g)
        if (members.size() > 1) out.push_back(members);
    return out;
}

// every slot permutation that only swaps equal blocks of one eigenvalue
std::vector<std::vector<std::size_t>> slot_symmetries(std::span<const BlockSlot> slots)
{
    std::vector<std::size_t> id(slots.size());
    for (std::size_t k = 0; k < id.size(); ++k) id[k] = k;
    std::vector<std::vector<std::size_t>> perms{id};
    for (const auto& group : slot_groups(slots)) {
        std::vector<std::vector<std::size_t>> next;
        auto images = group;
        do {
            for (auto p : perms) {
                for (std::size_t i = 0; i < group.size(); ++i) p[group[i]] = images[i];
                next.push_back(std::move(p));
            }
        } while (std::next_permutation(images.begin(), images.end()));
        perms = std::move(next);
    }
    return perms;
}

bool same_type(const Poset& lattice, const std::vector<IntTuple>& a, const std::vector<IntTuple>& b,
               const std::vector<std::vector<std::size_t>>& perms)
{
    for (const auto& perm : perms) {
        std::vector<IntTuple> pb;
        for (const auto& t : b) {
            IntTuple u = t;
            for (std::size_t k = 0; k < perm.size(); ++k) u[perm[k]] = t[k];
            pb.push_back(std::move(u));
        }
        std::map<IntTuple, int> ids;
        std::vector<int> la, lb;
        for (const auto& t : a) la.push_back(ids.emplace(t, static_cast<int>(ids.size())).first->second);
        for (const auto& t : pb) lb.push_back(ids.emplace(t, static_cast<int>(ids.size())).first->second);
        if (labeled_isomorphic(lattice, la, lattice, lb)) return true;
    }
    return false;
}

std::size_t distinct_count(std::span<const IntTuple> tuples)
{
    return std::set<IntTuple>(tuples.begin(), tuples.end()).size();
}

} // namespace

std::vector<BlockSlot> block_slots(const Spectrum& spec)
{
    std::vector<BlockSlot> slots;
    for (std::size_t c = 0; c < spec.classes.size(); ++c)
        for (int b : spec.classes[c].block_sizes) slots.push_back({c, b});
    return slots;
}

TupleLattice slot_lattice(std::span<const BlockSlot> slots)
{
    std::vector<int> k;
    for (const auto& s : slots) k.push_back(s.block_size);
    return TupleLattice(IntTuple(std::move(k)));
}

SubspaceTuples tuple_of_subspace(const Network& net, const Spectrum& spec, const Partition& p,
                                 std::span<const BlockSlot> slots)
{
    require_linear(spec);
    const std::size_t n = net.cells();
    const auto basis = polydiagonal_basis(net, p);
    SubspaceTuples out;

    std::vector<std::vector<std::vector<int>>> per_class;
    for (std::size_t c = 0; c < spec.classes.size(); ++c) {
        const auto& cls = spec.classes[c];
        std::vector<int> dims;
        for (int j = 1; j <= cls.largest_block(); ++j)
            dims.push_back(static_cast<int>(restrict_kernel(spec.powers[c][j - 1], basis, n).size()));
        std::vector<int> steps;
        for (std::size_t j = 0; j < dims.size(); ++j) steps.push_back(dims[j] - (j ? dims[j - 1] : 0));
        auto chains = conjugate_partition(steps);
        auto fits = placements(chains, cls.block_sizes);
        if (fits.empty())
            throw std::logic_error("subspace " + p.label() + " has a chain longer than every Jordan block");
        out.kernel_dims.push_back(std::move(dims));
        out.chain_lengths.push_back(std::move(chains));
        per_class.push_back(std::move(fits));
    }

    std::function<void(std::size_t, std::vector<int>&)> combine = [&](std::size_t c, std::vector<int>& acc) {
        if (c == per_class.size()) {
            out.candidates.emplace_back(acc);
            return;
        }
        for (const auto& part : per_class[c]) {
            const auto mark = acc.size();
            acc.insert(acc.end(), part.begin(), part.end());
            combine(c + 1, acc);
            acc.resize(mark);
        }
    };
    std::vector<int> acc;
    combine(0, acc);

    // dim(S ∩ ker p^j ∩ im p^i) predicted by each placement
    std::vector<std::vector<std::vector<int>>> measured(spec.classes.size());
    for (std::size_t c = 0; c < spec.classes.size(); ++c) {
        const int top = spec.classes[c].largest_block();
        measured[c].assign(top, std::vector<int>(top + 1, 0));
        for (int i = 0; i < top; ++i) {
            std::vector<Vector> image;
            if (i == 0) {
                for (std::size_t r = 0; r < n; ++r) {
                    Vector e(n);
                    e[r] = 1;
                    image.push_back(std::move(e));
                }
            } else {
                image = column_space_basis(spec.powers[c][i - 1]);
            }
            for (int j = 1; j <= top; ++j) {
                auto part = restrict_kernel(spec.powers[c][j - 1], basis, n);
                measured[c][i][j] = static_cast<int>(intersect(part, image, n).size());
            }
        }
    }
    for (const auto& cand : out.candidates) {
        bool ok = true;
        for (std::size_t c = 0; c < spec.classes.size() && ok; ++c) {
            const int top = spec.classes[c].largest_block();
            for (int i = 0; i < top && ok; ++i)
                for (int j = 1; j <= top && ok; ++j) {
                    int predicted = 0;
                    for (std::size_t k = 0; k < slots.size(); ++k) {
                        if (slots[k].eigen_class != c) continue;
                        predicted += std::max(0, std::min({cand[k], j, slots[k].block_size - i}));
                    }
                    ok = predicted == measured[c][i][j];
                }
        }
        if (ok) out.resolved.push_back(cand);
    }
    return out;
}

Poset tuple_order(std::span<const IntTuple> tuples)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < tuples.size(); ++i)
        for (std::size_t j = 0; j < tuples.size(); ++j)
            if (tuple_less(tuples[i], tuples[j])) edges.emplace_back(i, j);
    return Poset::from_relations(tuples.size(), edges);
}

PAAssignmentSet build_pa(const SynchronyLattice& lat, const Network& net, const Spectrum& spec, const PAOptions& opts)
{
    require_linear(spec);
    PAAssignmentSet set;
    set.slots = block_slots(spec);
    for (const auto& node : lat.nodes) set.node_tuples.push_back(tuple_of_subspace(net, spec, node.partition, set.slots));

    const std::size_t n = lat.size();
    std::vector<std::vector<std::size_t>> lower(n);
    for (auto [a, b] : lat.order.cover_edges()) lower[b].push_back(a);

    std::vector<std::vector<IntTuple>> found;
    std::vector<IntTuple> current;
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
        if (set.truncated) return;
        if (i == n) {
            if (found.size() >= opts.candidate_limit) {
                set.truncated = true;
                return;
            }
            found.push_back(current);
            return;
        }
        for (const auto& t : set.node_tuples[i].candidates) {
            bool ok = true;
            for (auto j : lower[i])
                if (j >= i || !tuple_less(current[j], t)) ok = false;
            if (!ok) continue;
            current.push_back(t);
            assign(i + 1);
            current.pop_back();
        }
    };
    assign(0);

    const auto perms = slot_symmetries(set.slots);
    std::vector<std::size_t> rep_of;   // candidate -> index of its type representative
    std::vector<std::size_t> reps;
    for (std::size_t c = 0; c < found.size(); ++c) {
        std::size_t rep = c;
        for (auto r : reps)
            if (same_type(lat.order, found[r], found[c], perms)) {
                rep = r;
                break;
            }
        if (rep == c) reps.push_back(c);
        rep_of.push_back(rep);
    }
    auto ranked = reps;
    std::stable_sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
        return distinct_count(found[a]) > distinct_count(found[b]);
    });
    std::map<std::size_t, int> type_of;
    for (std::size_t k = 0; k < ranked.size(); ++k) type_of[ranked[k]] = static_cast<int>(k + 1);
    set.type_count = static_cast<int>(ranked.size());

    for (std::size_t c = 0; c < found.size(); ++c) {
        PACandidate cand;
        cand.poset.tuples = found[c];
        cand.poset.inherited_edges = lat.order.cover_edges();
        cand.poset.order = tuple_order(cand.poset.tuples);
        cand.covering_violations = covering_violations(lat, cand.poset);
        cand.covering_ok = cand.covering_violations.empty();
        cand.jordan_consistent = true;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& res = set.node_tuples[i].resolved;
            if (std::find(res.begin(), res.end(), found[c][i]) == res.end()) cand.jordan_consistent = false;
        }
        cand.type = type_of[rep_of[c]];
        set.candidates.push_back(std::move(cand));
    }
    return set;
}

std::vector<std::string> covering_violations(const SynchronyLattice& lat, const PAPoset& pa)
{
    std::vector<std::string> out;
    auto describe = [&](std::size_t i) {
        return "node " + std::to_string(i + 1) + " " + pa.tuples[i].to_string();
    };
    for (std::size_t s = 0; s < lat.size(); ++s) {
        std::set<IntTuple> up, down;
        for (auto k : lat.order.immediate_followers(s)) up.insert(pa.tuples[k]);
        for (auto k : lat.order.immediate_leaders(s)) down.insert(pa.tuples[k]);
        for (auto j : pa.order.immediate_followers(s))
            if (!up.contains(pa.tuples[j]))
                out.push_back(describe(s) + ": follower " + pa.tuples[j].to_string() + " is not a lattice cover");
        for (auto j : pa.order.immediate_leaders(s))
            if (!down.contains(pa.tuples[j]))
                out.push_back(describe(s) + ": leader " + pa.tuples[j].to_string() + " is not a lattice cover");
    }
    return out;
}

bool covering_check(const SynchronyLattice& lat, const PAPoset& pa) { return covering_violations(lat, pa).empty(); }

int ind_p(const PAPoset& pa, std::size_t node)
{
    IntTuple join = IntTuple::zeros(pa.tuples[node].size());
    for (auto r : pa.order.immediate_leaders(node)) join = tuple_join(join, pa.tuples[r]);
    return pa.tuples[node].norm() - join.norm();
}

int PAQuotient::index_sum() const
{
    int s = 0;
    for (int v : indices) s += v;
    return s;
}

PAQuotient quotient_pa(const PAPoset& pa, const TupleLattice& lm)
{
    PAQuotient q;
    q.relation = NodeRelation::equal_tuples(pa.tuples);
    q.matrices = quotient_by(pa.order, pa.tuples, q.relation);
    if (!q.matrices.balanced) throw std::logic_error("tuple quotient of P_A is not balanced");
    q.closed = is_closed(q.matrices.tuples, lm);
    q.indices = leader_index(q.matrices.order, q.matrices.tuples);

    const auto& cls = q.relation.classes;
    q.order_matches_definition = true;
    for (std::size_t x = 0; x < cls.size(); ++x)
        for (std::size_t y = 0; y < cls.size(); ++y) {
            if (x == y) continue;
            bool all = true;
            for (auto a : cls[x])
                for (auto b : cls[y])
                    if (!pa.order.less(a, b)) all = false;
            if (all != q.matrices.order.less(x, y)) q.order_matches_definition = false;
        }
    return q;
}

std::string to_string(FilterVerdict v)
{
    switch (v) {
    case FilterVerdict::NotApplicable: return "not-applicable";
    case FilterVerdict::Pass: return "pass";
    case FilterVerdict::Fail: return "fail";
    }
    return "?";
}

bool is_simple_max_shape(std::span<const IntTuple> tuples, std::size_t d)
{
    if (d == 0) return false;
    std::set<IntTuple> distinct(tuples.begin(), tuples.end());
    if (distinct.size() != (std::size_t{1} << (d - 1))) return false;
    std::vector<IntTuple> target;
    for (std::size_t mask = 0; mask < distinct.size(); ++mask) {
        IntTuple t = IntTuple::zeros(d);
        for (std::size_t k = 0; k + 1 < d; ++k) t[k] = (mask >> k) & 1;
        t[d - 1] = 1;
        target.push_back(std::move(t));
    }
    std::vector<IntTuple> given(distinct.begin(), distinct.end());
    std::vector<int> zeros(given.size(), 0);
    return labeled_isomorphic(tuple_order(given), zeros, tuple_order(target), zeros);
}

FilterVerdict check_simple_max_filter(const SynchronyLattice& lat, const Network& net, const Spectrum& spec,
                                      const PAPoset& pa)
{
    (void)spec;
    bool applicable = false;
    for (std::size_t s = 0; s < lat.size(); ++s) {
        const int d = lat.nodes[s].dimension;
        if (d < 2) continue;
        Network q = quotient(net, lat.nodes[s].partition);
        Spectrum qs = analyze_spectrum(q.matrix(), q.valency);
        if (qs.classes.size() != 2) continue;
        const auto& lam = qs.classes.front();
        const auto& val = qs.classes.back();
        if (lam.is_valency || !val.is_valency || !lam.root() || !lam.certified) continue;
        if (val.algebraic_multiplicity != 1 || lam.algebraic_multiplicity != d - 1) continue;
        if (lam.largest_block() != 1) continue;
        applicable = true;

        const IntTuple& top = pa.tuples[s];
        std::vector<std::size_t> support;
        for (std::size_t k = 0; k < top.size(); ++k)
            if (top[k] > 0) support.push_back(k);
        std::vector<IntTuple> below;
        for (const auto& t : pa.tuples) {
            if (!tuple_leq(t, top)) continue;
            IntTuple r = IntTuple::zeros(support.size());
            for (std::size_t k = 0; k < support.size(); ++k) r[k] = t[support[k]];
            below.push_back(std::move(r));
        }
        if (!is_simple_max_shape(below, support.size())) return FilterVerdict::Fail;
    }
    return applicable ? FilterVerdict::Pass : FilterVerdict::NotApplicable;
}

} // namespace cellsync
