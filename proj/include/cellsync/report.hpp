#pragma once

#include "cellsync/ea_poset.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cellsync {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kVersion = "0.1.0";

struct EigenClassEntry {
    std::string factor;
    std::string root;              // empty when the factor is not linear
    int multiplicity = 0;
    std::vector<int> blocks;
    bool is_valency = false;
    bool certified = true;
    friend bool operator==(const EigenClassEntry&, const EigenClassEntry&) = default;
};

struct NetworkEntry {
    std::string name;
    int cells = 0;
    long valency = 0;
    std::vector<std::vector<long>> adjacency;
    friend bool operator==(const NetworkEntry&, const NetworkEntry&) = default;
};

struct EigenEntry {
    std::string char_poly;
    std::vector<std::string> coefficients;   // lowest degree first
    std::vector<EigenClassEntry> classes;
    friend bool operator==(const EigenEntry&, const EigenEntry&) = default;
};

struct LatticeNodeEntry {
    int id = 0;                    // 1-based
    std::string partition;
    int dimension = 0;
    std::vector<int> eigen_tuple;
    int ind_e = 0;
    friend bool operator==(const LatticeNodeEntry&, const LatticeNodeEntry&) = default;
};

struct LatticeEntry {
    std::vector<LatticeNodeEntry> nodes;
    std::vector<std::vector<int>> edges;     // [lower, upper], 1-based
    friend bool operator==(const LatticeEntry&, const LatticeEntry&) = default;
};

struct PACandidateEntry {
    int id = 0;
    int type = 0;
    std::vector<std::vector<int>> tuples;
    bool covering = false;
    bool jordan_consistent = false;
    std::string relation;
    std::vector<std::vector<int>> quotient_tuples;
    std::vector<int> quotient_indices;
    int quotient_sum = 0;
    bool quotient_balanced = false;
    bool quotient_closed = false;
    std::string simple_max;
    friend bool operator==(const PACandidateEntry&, const PACandidateEntry&) = default;
};

struct PAEntry {
    bool available = false;
    std::string note;
    std::vector<std::vector<int>> slots;     // [eigen class index, block size]
    int type_count = 0;
    bool unique = false;
    bool truncated = false;
    std::vector<PACandidateEntry> candidates;
    friend bool operator==(const PAEntry&, const PAEntry&) = default;
};

struct ReductionEntry {
    std::string relation;
    bool balanced = false;
    bool valid = false;
    bool closed = false;
    int type = 0;
    std::vector<std::vector<int>> tuples;
    std::vector<int> indices;
    std::vector<std::vector<int>> edges;
    std::vector<std::string> notes;
    std::vector<int> pa_candidates;          // 1-based ids
    bool covering_consistent = false;
    std::string simple_max;
    bool survives = false;
    friend bool operator==(const ReductionEntry&, const ReductionEntry&) = default;
};

struct ReductionsEntry {
    std::string filter;
    int relation_count = 0;
    int balanced_count = 0;
    int valid_count = 0;
    int type_count = 0;
    bool identity_valid = false;
    bool stopped_early = false;
    std::vector<ReductionEntry> entries;
    std::vector<std::string> survivors;
    friend bool operator==(const ReductionsEntry&, const ReductionsEntry&) = default;
};

struct AnalysisReport {
    int schema = kReportSchema;
    std::string tool = "cellsync";
    std::string version = kVersion;
    double timing_ms = 0.0;
    NetworkEntry network;
    EigenEntry eigen;
    LatticeEntry lattice;
    PAEntry pa;
    ReductionsEntry reductions;
    std::vector<std::string> warnings;
    std::vector<std::string> diagnostics;
    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct ReportOptions {
    bool all_candidates = false;   // list invalid relations too
    double timing_ms = 0.0;
};

AnalysisReport make_report(const ReductionReport& r, const ReportOptions& opts = {});

std::string report_to_json(const AnalysisReport& r, int indent = 2);
/// throws InputError on schema mismatch or malformed input
AnalysisReport report_from_json(std::string_view text);

std::string render_text(const AnalysisReport& r);
std::string render_eigen_text(const AnalysisReport& r);
std::string render_lattice_text(const AnalysisReport& r);
std::string render_pa_text(const AnalysisReport& r);

} // namespace cellsync
