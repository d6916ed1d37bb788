#include "cellsync/report.hpp"

#include <json.hpp>

#include <sstream>

namespace cellsync {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EigenClassEntry, factor, root, multiplicity, blocks, is_valency, certified)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(NetworkEntry, name, cells, valency, adjacency)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EigenEntry, char_poly, coefficients, classes)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LatticeNodeEntry, id, partition, dimension, eigen_tuple, ind_e)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LatticeEntry, nodes, edges)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PACandidateEntry, id, type, tuples, covering, jordan_consistent, relation,
                                   quotient_tuples, quotient_indices, quotient_sum, quotient_balanced,
                                   quotient_closed, simple_max)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PAEntry, available, note, slots, type_count, unique, truncated, candidates)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReductionEntry, relation, balanced, valid, closed, type, tuples, indices, edges,
                                   notes, pa_candidates, covering_consistent, simple_max, survives)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ReductionsEntry, filter, relation_count, balanced_count, valid_count, type_count,
                                   identity_valid, stopped_early, entries, survivors)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AnalysisReport, schema, tool, version, timing_ms, network, eigen, lattice, pa,
                                   reductions, warnings, diagnostics)

namespace {

std::vector<std::vector<int>> ints(std::span<const IntTuple> tuples)
{
    std::vector<std::vector<int>> out;
    for (const auto& t : tuples) out.push_back(t.components());
    return out;
}

std::vector<std::vector<int>> edges_of(const Poset& p)
{
    std::vector<std::vector<int>> out;
    for (auto [a, b] : p.cover_edges()) out.push_back({static_cast<int>(a + 1), static_cast<int>(b + 1)});
    return out;
}

std::string join(const std::vector<int>& v, const char* sep = ",")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string tuple_text(const std::vector<int>& v) { return "(" + join(v) + ")"; }

} // namespace

AnalysisReport make_report(const ReductionReport& r, const ReportOptions& opts)
{
    AnalysisReport out;
    out.timing_ms = opts.timing_ms;

    out.network.name = r.network.name;
    out.network.cells = static_cast<int>(r.network.cells());
    out.network.valency = static_cast<long>(r.network.valency);
    for (const auto& row : r.network.adjacency) out.network.adjacency.emplace_back(row.begin(), row.end());
    out.warnings = r.network.warnings;

    out.eigen.char_poly = r.spectrum.characteristic.to_string();
    for (const auto& c : r.spectrum.characteristic.coefficients()) out.eigen.coefficients.push_back(c.get_str());
    for (const auto& c : r.spectrum.classes) {
        EigenClassEntry e;
        e.factor = c.factor.to_string();
        if (auto root = c.root()) e.root = root->get_str();
        e.multiplicity = c.algebraic_multiplicity;
        e.blocks = c.block_sizes;
        e.is_valency = c.is_valency;
        e.certified = c.certified;
        out.eigen.classes.push_back(std::move(e));
    }

    for (std::size_t i = 0; i < r.lattice.size(); ++i) {
        const auto& node = r.lattice.nodes[i];
        out.lattice.nodes.push_back({static_cast<int>(i + 1), node.partition.label(), node.dimension,
                                     r.ea.tuples[i].components(), r.ind_e[i]});
    }
    out.lattice.edges = edges_of(r.lattice.order);

    if (r.pa) {
        const auto& pa = *r.pa;
        out.pa.available = true;
        for (const auto& s : pa.slots) out.pa.slots.push_back({static_cast<int>(s.eigen_class), s.block_size});
        out.pa.type_count = pa.type_count;
        out.pa.unique = pa.unique();
        out.pa.truncated = pa.truncated;
        for (std::size_t c = 0; c < pa.candidates.size(); ++c) {
            const auto& cand = pa.candidates[c];
            const auto& q = r.pa_quotients[c];
            PACandidateEntry e;
            e.id = static_cast<int>(c + 1);
            e.type = cand.type;
            e.tuples = ints(cand.poset.tuples);
            e.covering = cand.covering_ok;
            e.jordan_consistent = cand.jordan_consistent;
            e.relation = q.relation.key();
            e.quotient_tuples = ints(q.matrices.tuples);
            e.quotient_indices = q.indices;
            e.quotient_sum = q.index_sum();
            e.quotient_balanced = q.matrices.balanced;
            e.quotient_closed = q.closed;
            e.simple_max = to_string(r.pa_simple_max[c]);
            out.pa.candidates.push_back(std::move(e));
            if (!q.order_matches_definition)
                out.diagnostics.push_back("P_A candidate " + std::to_string(c + 1) +
                                          ": quotient order differs from the all-members order");
        }
    } else {
        out.pa.note = "P_A needs every eigenvalue to be rational";
    }

    auto& red = out.reductions;
    red.filter = to_string(r.filter);
    red.relation_count = static_cast<int>(r.results.size());
    red.valid_count = static_cast<int>(r.valid.size());
    red.type_count = r.type_count;
    red.identity_valid = r.identity_valid;
    red.stopped_early = r.stopped_early;
    std::vector<const ValidReduction*> valid_of(r.results.size(), nullptr);
    for (const auto& v : r.valid) valid_of[v.result] = &v;
    for (std::size_t i = 0; i < r.results.size(); ++i) {
        const auto& res = r.results[i];
        if (res.balanced && !res.relation.is_identity()) ++red.balanced_count;
        const ValidReduction* v = valid_of[i];
        if (!v && !opts.all_candidates) continue;
        ReductionEntry e;
        e.relation = res.relation.key();
        e.balanced = res.balanced;
        e.valid = res.valid;
        e.closed = res.closed;
        e.tuples = ints(res.tuples);
        e.indices = res.indices;
        if (res.balanced) e.edges = edges_of(res.order);
        e.notes = res.notes;
        if (v) {
            e.type = v->type;
            for (auto c : v->pa_candidates) e.pa_candidates.push_back(static_cast<int>(c + 1));
            e.covering_consistent = v->covering_consistent;
            e.simple_max = to_string(v->simple_max);
            e.survives = v->survives;
            if (v->survives) red.survivors.push_back(e.relation);
        }
        red.entries.push_back(std::move(e));
    }
    out.diagnostics.insert(out.diagnostics.end(), r.diagnostics.begin(), r.diagnostics.end());
    return out;
}

std::string report_to_json(const AnalysisReport& r, int indent)
{
    return nlohmann::json(r).dump(indent);
}

AnalysisReport report_from_json(std::string_view text)
{
    try {
        auto j = nlohmann::json::parse(text);
        if (!j.is_object() || !j.contains("schema") || j.at("schema") != kReportSchema)
            throw InputError("unsupported report schema (expected " + std::to_string(kReportSchema) + ")");
        return j.get<AnalysisReport>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed report: ") + e.what());
    }
}

std::string render_eigen_text(const AnalysisReport& r)
{
    std::ostringstream out;
    out << "characteristic polynomial: " << r.eigen.char_poly << '\n';
    std::string line;
    for (const auto& c : r.eigen.classes) {
        if (!line.empty()) line += "; ";
        if (!c.root.empty())
            line += "λ=" + c.root + ": blocks [" + join(c.blocks) + "]";
        else
            line += c.factor + ": multiplicity " + std::to_string(c.multiplicity);
        if (!c.certified) line += " (uncertified)";
    }
    out << "eigenvalues: " << line << '\n';
    return out.str();
}

std::string render_lattice_text(const AnalysisReport& r)
{
    std::ostringstream out;
    out << "synchrony lattice: " << r.lattice.nodes.size() << " nodes\n";
    for (const auto& n : r.lattice.nodes)
        out << "  " << n.id << "  " << n.partition << "  dim " << n.dimension << "  E " << tuple_text(n.eigen_tuple)
            << "  Ind_E " << n.ind_e << '\n';
    out << "covers:";
    for (const auto& e : r.lattice.edges) out << ' ' << e[0] << '<' << e[1];
    out << '\n';
    return out.str();
}

std::string render_pa_text(const AnalysisReport& r)
{
    std::ostringstream out;
    if (!r.pa.available) {
        out << "P_A: unavailable (" << r.pa.note << ")\n";
        return out.str();
    }
    out << "P_A: " << r.pa.candidates.size() << " candidates in " << r.pa.type_count << " types\n";
    for (const auto& c : r.pa.candidates) {
        out << "  #" << c.id << " type " << c.type << "  covering " << (c.covering ? "yes" : "no") << "  jordan "
            << (c.jordan_consistent ? "yes" : "no") << "  simple-max " << c.simple_max << "  merge " << c.relation
            << '\n';
        out << "     tuples";
        for (const auto& t : c.tuples) out << ' ' << tuple_text(t);
        out << "\n     Ind_P on quotient " << join(c.quotient_indices, " ") << " (sum " << c.quotient_sum << ")\n";
    }
    return out.str();
}

std::string render_text(const AnalysisReport& r)
{
    std::ostringstream out;
    out << r.tool << ' ' << r.version << "  network " << r.network.name << "  cells " << r.network.cells
        << "  valency " << r.network.valency << '\n';
    out << render_eigen_text(r) << render_lattice_text(r) << render_pa_text(r);
    const auto& red = r.reductions;
    out << "relations: " << red.relation_count << " candidates, " << red.balanced_count << " balanced (non-identity), "
        << red.valid_count << " valid in " << red.type_count << " types; identity "
        << (red.identity_valid ? "valid" : "invalid") << "; filter " << red.filter << '\n';
    for (const auto& e : red.entries) {
        out << "  " << e.relation << (e.valid ? "  valid" : e.balanced ? "  balanced, invalid" : "  unbalanced");
        if (e.valid) out << "  type " << e.type << (e.survives ? "  survives" : "  filtered");
        out << '\n';
        for (const auto& n : e.notes) out << "     " << n << '\n';
    }
    for (const auto& w : r.warnings) out << "warning: " << w << '\n';
    for (const auto& d : r.diagnostics) out << "note: " << d << '\n';
    return out.str();
}

} // namespace cellsync
