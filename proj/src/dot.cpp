#include "cellsync/dot.hpp"

#include "cellsync/network.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace cellsync {

namespace {

const char* const kPalette[] = {"lightblue", "lightpink", "palegreen", "khaki", "plum", "lightsalmon", "lightcyan",
                                "wheat", "thistle", "aquamarine", "lightgoldenrod", "mistyrose"};

std::string escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::vector<std::string> dot_fill_colors(std::span<const DotNode> nodes)
{
    std::map<IntTuple, int> count;
    for (const auto& n : nodes) ++count[n.tuple];
    std::map<IntTuple, std::string> color;
    std::size_t next = 0;
    std::vector<std::string> out;
    for (const auto& n : nodes) {
        if (count[n.tuple] < 2) {
            out.push_back("white");
            continue;
        }
        auto it = color.find(n.tuple);
        if (it == color.end()) {
            const std::size_t k = next++;
            std::string c = kPalette[k % std::size(kPalette)];
            if (k >= std::size(kPalette)) c = "/set312/" + std::to_string(k % 12 + 1);
            it = color.emplace(n.tuple, c).first;
        }
        out.push_back(it->second);
    }
    return out;
}

std::string export_dot(const Poset& order, std::span<const DotNode> nodes, std::string_view graph_name)
{
    if (nodes.size() != order.size()) throw std::invalid_argument("one DOT node per poset element required");
    const auto colors = dot_fill_colors(nodes);
    std::ostringstream out;
    out << "digraph \"" << escape(graph_name) << "\" {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, style=filled];\n";
    std::map<int, std::vector<std::size_t>> ranks;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        ranks[nodes[i].tuple.norm()].push_back(i);
        out << "  n" << i << " [label=\"" << escape(nodes[i].label);
        if (nodes[i].label != nodes[i].tuple.to_string()) out << "\\n" << nodes[i].tuple.to_string();
        out << "\", fillcolor=\"" << colors[i] << "\"];\n";
    }
    for (const auto& [rank, members] : ranks) {
        out << "  { rank=same;";
        for (auto i : members) out << " n" << i << ';';
        out << " }\n";
    }
    for (auto [a, b] : order.cover_edges()) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

void write_file(const std::filesystem::path& path, std::string_view content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path.string());
    f << content;
    if (!f) throw InputError("write failed for " + path.string());
}

} // namespace cellsync
