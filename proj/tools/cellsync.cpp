// cellsync: synchrony lattices, tuple posets and lattice reduction for regular networks.

#include "cellsync/dot.hpp"
#include "cellsync/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

using namespace cellsync;

namespace {

struct Args {
    std::string input;
    std::string format = "auto";
    bool json = false;
    std::string dot;
    std::size_t max_cells = 12;
    bool all_candidates = false;
    std::string filter = "covering";
    bool require_reduction = false;
    bool first_valid = false;
};

InputFormat parse_format(const std::string& s)
{
    if (s == "auto") return InputFormat::Auto;
    if (s == "text") return InputFormat::Text;
    if (s == "json") return InputFormat::Json;
    throw InputError("unknown format '" + s + "'");
}

std::vector<DotNode> lattice_nodes(const ReductionReport& r)
{
    std::vector<DotNode> out;
    for (std::size_t i = 0; i < r.lattice.size(); ++i)
        out.push_back({r.lattice.nodes[i].partition.label(), r.ea.tuples[i]});
    return out;
}

void write_dots(const ReductionReport& r, const std::string& prefix, bool with_reductions)
{
    if (prefix.empty()) return;
    if (r.lattice.size()) write_file(prefix + "_ea.dot", export_dot(r.ea.order, lattice_nodes(r), "E_A"));
    if (r.pa)
        for (std::size_t c = 0; c < r.pa->candidates.size(); ++c) {
            const auto& cand = r.pa->candidates[c];
            std::vector<DotNode> nodes;
            for (std::size_t i = 0; i < r.lattice.size(); ++i)
                nodes.push_back({r.lattice.nodes[i].partition.label(), cand.poset.tuples[i]});
            write_file(prefix + "_pa" + std::to_string(c + 1) + ".dot",
                       export_dot(cand.poset.order, nodes, "P_A " + std::to_string(c + 1)));
        }
    if (!with_reductions) return;
    for (std::size_t k = 0; k < r.valid.size(); ++k) {
        const auto& res = r.results[r.valid[k].result];
        std::vector<DotNode> nodes;
        for (const auto& t : res.tuples) nodes.push_back({t.to_string(), t});
        write_file(prefix + "_reduced" + std::to_string(k + 1) + ".dot",
                   export_dot(res.order, nodes, res.relation.key()));
    }
}

// runs the pipeline up to the requested stage
ReductionReport run(const Args& a, const std::string& stage)
{
    Network net = load_network(a.input, parse_format(a.format));
    ReduceOptions opts;
    opts.enumeration.max_cells = a.max_cells;
    opts.filter = parse_filter(a.filter);
    opts.stop_at_first_valid = a.first_valid;
    if (stage == "analyze") return reduce(net, opts);

    ReductionReport r;
    r.network = net;
    r.filter = opts.filter;
    r.spectrum = analyze_spectrum(net.matrix(), net.valency);
    r.diagnostics = r.spectrum.warnings;
    if (stage == "eigen") return r;
    r.lattice = build_lattice(net, opts.enumeration);
    r.ea = build_ea(r.lattice, net, r.spectrum);
    r.ind_e = ind_e(r.ea);
    if (stage == "lattice") return r;
    try {
        r.pa = build_pa(r.lattice, net, r.spectrum, opts.pa);
        const TupleLattice lm = slot_lattice(r.pa->slots);
        for (const auto& c : r.pa->candidates) {
            r.pa_simple_max.push_back(check_simple_max_filter(r.lattice, net, r.spectrum, c.poset));
            r.pa_quotients.push_back(quotient_pa(c.poset, lm));
        }
    } catch (const SpectrumError& e) {
        r.diagnostics.push_back(std::string("P_A not built: ") + e.what());
    }
    return r;
}

int execute(const Args& a, const std::string& stage)
{
    const auto start = std::chrono::steady_clock::now();
    ReductionReport r = run(a, stage);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    AnalysisReport report = make_report(r, {a.all_candidates, ms});
    write_dots(r, a.dot, stage == "analyze");

    if (a.json)
        std::cout << report_to_json(report) << '\n';
    else if (stage == "eigen")
        std::cout << render_eigen_text(report);
    else if (stage == "lattice")
        std::cout << render_lattice_text(report);
    else if (stage == "pa")
        std::cout << render_pa_text(report);
    else
        std::cout << render_text(report);

    if (stage == "analyze" && a.require_reduction && !r.has_reduction()) return 2;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Synchrony lattice reduction for regular coupled cell networks"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Args args;
    auto common = [&](CLI::App* sub) {
        sub->add_option("input", args.input, "adjacency matrix (text or JSON)")->required();
        sub->add_option("--format", args.format, "auto, text or json")
            ->check(CLI::IsMember({"auto", "text", "json"}));
        sub->add_flag("--json", args.json, "print the JSON report");
        sub->add_option("--max-cells", args.max_cells, "largest network accepted for partition enumeration");
    };
    auto* analyze = app.add_subcommand("analyze", "full pipeline and reduction search");
    common(analyze);
    analyze->add_option("--dot", args.dot, "write Hasse diagrams to <prefix>_*.dot");
    analyze->add_flag("--all-candidates", args.all_candidates, "list every relation, not only valid ones");
    analyze->add_option("--filter", args.filter, "none, covering or simple-max")
        ->check(CLI::IsMember({"none", "covering", "simple-max"}));
    analyze->add_flag("--require-reduction", args.require_reduction, "exit 2 when no valid reduction exists");
    analyze->add_flag("--first-valid", args.first_valid, "stop at the first valid reduction");
    auto* lattice = app.add_subcommand("lattice", "synchrony lattice with eigen tuples and Ind_E");
    common(lattice);
    lattice->add_option("--dot", args.dot, "write the Hasse diagram to <prefix>_ea.dot");
    auto* eigen = app.add_subcommand("eigen", "characteristic polynomial and Jordan structure");
    common(eigen);
    auto* pa = app.add_subcommand("pa", "tuple poset candidates");
    common(pa);
    pa->add_option("--dot", args.dot, "write one Hasse diagram per candidate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    const std::string stage = app.get_subcommands().front()->get_name();
    try {
        return execute(args, stage);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
