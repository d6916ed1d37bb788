#include "cellsync/ea_poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace cellsync {

namespace {

// set partitions of k elements as RGS strings: more blocks first, then RGS order
std::vector<std::vector<int>> group_partitions(std::size_t k)
{
    std::vector<std::vector<int>> out;
    for_each_partition(k, [&](const Partition& p) { out.push_back(p.assignment); });
    auto blocks = [](const std::vector<int>& r) { return r.empty() ? 0 : *std::max_element(r.begin(), r.end()) + 1; };
    std::stable_sort(out.begin(), out.end(),
                     [&](const auto& a, const auto& b) { return blocks(a) > blocks(b); });
    return out;
}

std::vector<int> tuple_labels(std::span<const IntTuple> tuples, std::map<IntTuple, int>& ids)
{
    std::vector<int> out;
    for (const auto& t : tuples) out.push_back(ids.emplace(t, static_cast<int>(ids.size())).first->second);
    return out;
}

bool same_shape(const ReductionResult& a, const ReductionResult& b)
{
    if (a.tuples.size() != b.tuples.size()) return false;
    std::map<IntTuple, int> ids;
    auto la = tuple_labels(a.tuples, ids);
    auto lb = tuple_labels(b.tuples, ids);
    return labeled_isomorphic(a.order, la, b.order, lb);
}

} // namespace

IntTuple eigen_tuple(const Network& net, const Partition& p, const Spectrum& spec)
{
    Network q = quotient(net, p);
    Polynomial cp = char_poly(q.matrix());
    std::vector<int> t;
    int covered = 0;
    for (const auto& cls : spec.classes) {
        int m = multiplicity(cls.factor, cp);
        t.push_back(m);
        covered += m * cls.factor.degree();
    }
    if (covered != cp.degree())
        throw std::logic_error("quotient " + p.label() + " has eigenvalues outside the original spectrum");
    return IntTuple(std::move(t));
}

EAPoset build_ea(const SynchronyLattice& lat, const Network& net, const Spectrum& spec)
{
    EAPoset ea;
    for (const auto& node : lat.nodes) ea.tuples.push_back(eigen_tuple(net, node.partition, spec));
    ea.order = lat.order;
    return ea;
}

std::vector<int> ind_e(const EAPoset& ea) { return recursive_index(ea.order, ea.tuples); }

int ind_e(const EAPoset& ea, std::size_t node) { return ind_e(ea).at(node); }

std::vector<NodeRelation> enumerate_relations(const EAPoset& ea, const RelationOptions& opts)
{
    std::map<IntTuple, std::vector<std::size_t>> by_tuple;
    for (std::size_t i = 0; i < ea.tuples.size(); ++i) by_tuple[ea.tuples[i]].push_back(i);
    std::vector<std::vector<std::size_t>> groups, fixed;
    for (auto& [t, members] : by_tuple) {
        if (members.size() > opts.max_class_size)
            throw InputError(std::to_string(members.size()) + " nodes share the eigen tuple " + t.to_string() +
                             "; relation enumeration is limited to classes of " +
                             std::to_string(opts.max_class_size));
        (members.size() > 1 ? groups : fixed).push_back(members);
    }
    std::sort(groups.begin(), groups.end());

    std::vector<std::vector<std::vector<int>>> options;
    std::size_t total = 1;
    for (const auto& g : groups) {
        options.push_back(group_partitions(g.size()));
        total *= options.back().size();
        if (total > opts.max_relations)
            throw InputError("more than " + std::to_string(opts.max_relations) + " candidate relations");
    }

    std::vector<NodeRelation> out;
    std::vector<std::size_t> pick(groups.size(), 0);
    for (std::size_t r = 0; r < total; ++r) {
        std::vector<std::vector<std::size_t>> classes = fixed;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            const auto& rgs = options[g][pick[g]];
            std::vector<std::vector<std::size_t>> blocks(*std::max_element(rgs.begin(), rgs.end()) + 1);
            for (std::size_t k = 0; k < rgs.size(); ++k) blocks[rgs[k]].push_back(groups[g][k]);
            classes.insert(classes.end(), blocks.begin(), blocks.end());
        }
        out.push_back(NodeRelation::from_classes(std::move(classes)));
        for (std::size_t g = 0; g < groups.size(); ++g) {
            if (++pick[g] < options[g].size()) break;
            pick[g] = 0;
        }
    }
    return out;
}

TupleMatrix e_matrix(const EAPoset& ea) { return TupleMatrix::from_poset(ea.order, ea.tuples); }

bool is_balanced_e(const TupleMatrix& e, const NodeRelation& rel) { return e.join_columns(rel).rows_agree(rel); }

ReductionResult validate_reduction(const EAPoset& ea, const NodeRelation& rel, std::size_t cells)
{
    ReductionResult r;
    r.relation = rel;
    MatrixQuotient q = quotient_by(ea.order, ea.tuples, rel);
    r.balanced = q.balanced;
    r.tuples = q.tuples;
    if (!r.balanced) {
        r.notes.push_back("E is not balanced under " + rel.key());
        return r;
    }
    r.order = q.order;
    r.indices = recursive_index(r.order, r.tuples);

    IntTuple bounds = IntTuple::zeros(r.tuples.empty() ? 0 : r.tuples[0].size());
    for (const auto& t : r.tuples) bounds = tuple_join(bounds, t);
    r.closed = is_closed(r.tuples, TupleLattice(bounds));

    int sum = 0;
    bool nonnegative = true;
    for (std::size_t i = 0; i < r.indices.size(); ++i) {
        sum += r.indices[i];
        if (r.indices[i] < 0) {
            nonnegative = false;
            r.notes.push_back("negative index " + std::to_string(r.indices[i]) + " at " + r.tuples[i].to_string());
        }
    }
    if (sum != static_cast<int>(cells))
        r.notes.push_back("indices sum to " + std::to_string(sum) + ", expected " + std::to_string(cells));
    r.valid = nonnegative && sum == static_cast<int>(cells);
    return r;
}

std::string to_string(FilterPolicy f)
{
    switch (f) {
    case FilterPolicy::None: return "none";
    case FilterPolicy::Covering: return "covering";
    case FilterPolicy::SimpleMax: return "simple-max";
    }
    return "?";
}

FilterPolicy parse_filter(const std::string& s)
{
    if (s == "none") return FilterPolicy::None;
    if (s == "covering") return FilterPolicy::Covering;
    if (s == "simple-max") return FilterPolicy::SimpleMax;
    throw InputError("unknown filter '" + s + "' (expected none, covering or simple-max)");
}

ReductionReport reduce(const Network& net, const ReduceOptions& opts)
{
    ReductionReport rep;
    rep.network = net;
    rep.filter = opts.filter;
    rep.spectrum = analyze_spectrum(net.matrix(), net.valency);
    for (const auto& w : rep.spectrum.warnings) rep.diagnostics.push_back(w);
    rep.lattice = build_lattice(net, opts.enumeration);
    rep.ea = build_ea(rep.lattice, net, rep.spectrum);
    rep.ind_e = ind_e(rep.ea);

    try {
        rep.pa = build_pa(rep.lattice, net, rep.spectrum, opts.pa);
        const TupleLattice lm = slot_lattice(rep.pa->slots);
        for (const auto& c : rep.pa->candidates) {
            rep.pa_simple_max.push_back(check_simple_max_filter(rep.lattice, net, rep.spectrum, c.poset));
            rep.pa_quotients.push_back(quotient_pa(c.poset, lm));
        }
        if (rep.pa->truncated)
            rep.diagnostics.push_back("P_A candidate list truncated at " + std::to_string(opts.pa.candidate_limit));
    } catch (const SpectrumError& e) {
        rep.diagnostics.push_back(std::string("P_A not built: ") + e.what());
    }

    for (const auto& rel : enumerate_relations(rep.ea, opts.relations)) {
        ReductionResult r = validate_reduction(rep.ea, rel, net.cells());
        const bool identity = rel.is_identity();
        if (identity) rep.identity_valid = r.valid;
        if (!identity && r.balanced && !r.valid) {
            std::string msg = "relation " + rel.key() + " is balanced but invalid";
            for (const auto& n : r.notes) msg += "; " + n;
            rep.diagnostics.push_back(msg);
        }
        rep.results.push_back(std::move(r));
        if (identity || !rep.results.back().valid) continue;

        ValidReduction v;
        v.result = rep.results.size() - 1;
        if (rep.pa) {
            for (std::size_t c = 0; c < rep.pa->candidates.size(); ++c) {
                if (rep.pa_quotients[c].relation != rel) continue;
                v.pa_candidates.push_back(c);
                if (rep.pa->candidates[c].covering_ok) v.covering_consistent = true;
                auto verdict = rep.pa_simple_max[c];
                if (verdict == FilterVerdict::Fail)
                    v.simple_max = FilterVerdict::Fail;
                else if (verdict == FilterVerdict::Pass && v.simple_max != FilterVerdict::Fail)
                    v.simple_max = FilterVerdict::Pass;
            }
        }
        switch (opts.filter) {
        case FilterPolicy::None: v.survives = true; break;
        case FilterPolicy::Covering: v.survives = !rep.pa || v.covering_consistent; break;
        case FilterPolicy::SimpleMax:
            v.survives = !rep.pa || (v.covering_consistent && v.simple_max != FilterVerdict::Fail);
            break;
        }
        rep.valid.push_back(std::move(v));
        if (opts.stop_at_first_valid) {
            rep.stopped_early = true;
            break;
        }
    }

    // types: isomorphic labeled quotients, fewest merged nodes first
    std::vector<std::size_t> reps, rep_of;
    for (const auto& v : rep.valid) {
        std::size_t found = reps.size();
        for (std::size_t k = 0; k < reps.size(); ++k)
            if (same_shape(rep.results[rep.valid[reps[k]].result], rep.results[v.result])) {
                found = k;
                break;
            }
        if (found == reps.size()) reps.push_back(rep_of.size());
        rep_of.push_back(found);
    }
    std::vector<std::size_t> ranked(reps.size());
    for (std::size_t k = 0; k < ranked.size(); ++k) ranked[k] = k;
    std::stable_sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
        return rep.results[rep.valid[reps[a]].result].tuples.size() > rep.results[rep.valid[reps[b]].result].tuples.size();
    });
    std::vector<int> number(reps.size());
    for (std::size_t k = 0; k < ranked.size(); ++k) number[ranked[k]] = static_cast<int>(k + 1);
    for (std::size_t i = 0; i < rep.valid.size(); ++i) rep.valid[i].type = number[rep_of[i]];
    rep.type_count = static_cast<int>(reps.size());

    if (!rep.has_reduction()) rep.diagnostics.push_back("no valid reduction exists");
    return rep;
}

} // namespace cellsync
