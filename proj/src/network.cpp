#include "cellsync/network.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace cellsync {

Partition Partition::from_assignment(std::vector<int> labels)
{
    std::map<int, int> relabel;
    for (auto& x : labels) {
        auto it = relabel.find(x);
        if (it == relabel.end()) it = relabel.emplace(x, static_cast<int>(relabel.size())).first;
        x = it->second;
    }
    Partition p;
    p.assignment = std::move(labels);
    p.class_count = static_cast<int>(relabel.size());
    return p;
}

Partition Partition::from_label(std::string_view label)
{
    std::vector<int> labels;
    for (char ch : label) {
        if (ch < 'a' || ch > 'z') throw std::invalid_argument("partition labels use letters a-z");
        labels.push_back(ch - 'a');
    }
    return from_assignment(std::move(labels));
}

Partition Partition::singletons(std::size_t n)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return from_assignment(std::move(v));
}

Partition Partition::single_class(std::size_t n) { return from_assignment(std::vector<int>(n, 0)); }

std::vector<std::vector<int>> Partition::classes() const
{
    std::vector<std::vector<int>> out(class_count);
    for (std::size_t c = 0; c < assignment.size(); ++c) out[assignment[c]].push_back(static_cast<int>(c));
    return out;
}

std::string Partition::label() const
{
    std::string s;
    if (class_count <= 26) {
        for (int x : assignment) s += static_cast<char>('a' + x);
        return s;
    }
    for (std::size_t i = 0; i < assignment.size(); ++i) s += (i ? "," : "") + std::to_string(assignment[i]);
    return s;
}

bool Partition::refines(const Partition& coarser) const
{
    if (coarser.size() != size()) throw std::invalid_argument("partition size mismatch");
    std::vector<int> image(class_count, -1);
    for (std::size_t c = 0; c < size(); ++c) {
        int& img = image[assignment[c]];
        if (img < 0)
            img = coarser.assignment[c];
        else if (img != coarser.assignment[c])
            return false;
    }
    return true;
}

Partition partition_join(const Partition& a, const Partition& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("partition size mismatch");
    const std::size_t n = a.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Partition* p : {&a, &b}) {
        std::vector<long> first(p->class_count, -1);
        for (std::size_t c = 0; c < n; ++c) {
            long& f = first[p->assignment[c]];
            if (f < 0)
                f = static_cast<long>(c);
            else
                parent[find(c)] = find(static_cast<std::size_t>(f));
        }
    }
    std::vector<int> labels(n);
    for (std::size_t c = 0; c < n; ++c) labels[c] = static_cast<int>(find(c));
    return Partition::from_assignment(std::move(labels));
}

Matrix Network::matrix() const { return Matrix::from_integers(adjacency); }

Network Network::from_adjacency(std::vector<std::vector<std::int64_t>> rows, std::string name)
{
    const std::size_t n = rows.size();
    if (n == 0) throw InputError("network has no cells");
    std::int64_t valency = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw InputError("non-square matrix: row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (rows[i][j] < 0)
                throw InputError("negative entry at row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1));
            sum += rows[i][j];
        }
        if (i == 0)
            valency = sum;
        else if (sum != valency)
            throw InputError("non-constant row sum at row " + std::to_string(i + 1) + " (sum " + std::to_string(sum) +
                             ", expected " + std::to_string(valency) + ")");
    }
    if (valency <= 0) throw InputError("valency must be positive");
    Network net;
    net.name = std::move(name);
    net.adjacency = std::move(rows);
    net.valency = valency;
    return net;
}

namespace {

std::int64_t parse_int(std::string_view tok, std::size_t line)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw InputError("line " + std::to_string(line) + ": invalid integer '" + std::string(tok) + "'");
    return v;
}

Network parse_text(std::string_view content)
{
    std::istringstream in{std::string(content)};
    std::string raw;
    std::size_t line_no = 0;
    long n = -1;
    std::vector<std::vector<std::int64_t>> rows;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream words(raw);
        std::vector<std::string> toks;
        for (std::string t; words >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        if (n < 0) {
            if (toks.size() != 1) throw InputError("line " + std::to_string(line_no) + ": expected the cell count");
            n = static_cast<long>(parse_int(toks[0], line_no));
            if (n <= 0) throw InputError("line " + std::to_string(line_no) + ": cell count must be positive");
            continue;
        }
        if (rows.size() == static_cast<std::size_t>(n))
            throw InputError("line " + std::to_string(line_no) + ": more than " + std::to_string(n) + " rows");
        if (toks.size() != static_cast<std::size_t>(n))
            throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) + " entries, got " +
                             std::to_string(toks.size()) + " (non-square matrix)");
        std::vector<std::int64_t> row;
        for (const auto& t : toks) row.push_back(parse_int(t, line_no));
        rows.push_back(std::move(row));
    }
    if (n < 0) throw InputError("empty input");
    if (rows.size() != static_cast<std::size_t>(n))
        throw InputError("expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
    return Network::from_adjacency(std::move(rows));
}

Network parse_json(std::string_view content)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("adjacency")) throw InputError("JSON network needs an \"adjacency\" field");
    std::vector<std::vector<std::int64_t>> rows;
    try {
        rows = j.at("adjacency").get<std::vector<std::vector<std::int64_t>>>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("adjacency must be a list of integer rows: ") + e.what());
    }
    if (j.contains("cells")) {
        if (!j["cells"].is_number_integer() || j["cells"].get<long>() != static_cast<long>(rows.size()))
            throw InputError("\"cells\" does not match the number of adjacency rows");
    }
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw InputError("\"name\" must be a string");
        name = j["name"].get<std::string>();
    }
    return Network::from_adjacency(std::move(rows), std::move(name));
}

} // namespace

Network parse_network(std::string_view content, InputFormat format)
{
    if (format == InputFormat::Auto) {
        auto pos = content.find_first_not_of(" \t\r\n");
        format = (pos != std::string_view::npos && content[pos] == '{') ? InputFormat::Json : InputFormat::Text;
    }
    return format == InputFormat::Json ? parse_json(content) : parse_text(content);
}

Network load_network(const std::filesystem::path& path, InputFormat format)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    if (format == InputFormat::Auto && path.extension() == ".json") format = InputFormat::Json;
    Network net = parse_network(buf.str(), format);
    if (net.name.empty()) net.name = path.stem().string();
    return net;
}

std::string to_text(const Network& net)
{
    std::ostringstream out;
    if (!net.name.empty()) out << "# " << net.name << '\n';
    out << net.cells() << '\n';
    for (const auto& row : net.adjacency) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << '\n';
    }
    return out.str();
}

std::string to_json_string(const Network& net)
{
    nlohmann::json j;
    if (!net.name.empty()) j["name"] = net.name;
    j["cells"] = net.cells();
    j["adjacency"] = net.adjacency;
    return j.dump(2);
}

namespace {

void check_size(const Network& net, const Partition& p)
{
    if (p.size() != net.cells())
        throw std::invalid_argument("partition has " + std::to_string(p.size()) + " cells, network has " +
                                    std::to_string(net.cells()));
}

} // namespace

bool is_balanced(const Network& net, const Partition& p)
{
    check_size(net, p);
    const std::size_t n = net.cells();
    const std::size_t k = static_cast<std::size_t>(p.class_count);
    std::vector<std::int64_t> counts(n * k, 0);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t j = 0; j < n; ++j) counts[c * k + p.assignment[j]] += net.adjacency[c][j];
    std::vector<long> rep(k, -1);
    for (std::size_t c = 0; c < n; ++c) {
        long& r = rep[p.assignment[c]];
        if (r < 0) {
            r = static_cast<long>(c);
            continue;
        }
        for (std::size_t b = 0; b < k; ++b)
            if (counts[c * k + b] != counts[static_cast<std::size_t>(r) * k + b]) return false;
    }
    return true;
}

Network quotient(const Network& net, const Partition& p)
{
    if (!is_balanced(net, p)) throw InputError("partition " + p.label() + " is not balanced");
    const std::size_t k = static_cast<std::size_t>(p.class_count);
    std::vector<std::vector<std::int64_t>> q(k, std::vector<std::int64_t>(k, 0));
    std::vector<char> done(k, 0);
    for (std::size_t c = 0; c < net.cells(); ++c) {
        const auto b = static_cast<std::size_t>(p.assignment[c]);
        if (done[b]) continue;
        done[b] = 1;
        for (std::size_t j = 0; j < net.cells(); ++j) q[b][p.assignment[j]] += net.adjacency[c][j];
    }
    return Network::from_adjacency(std::move(q), net.name.empty() ? std::string() : net.name + "/" + p.label());
}

std::vector<Vector> polydiagonal_basis(const Network& net, const Partition& p)
{
    check_size(net, p);
    std::vector<Vector> basis(p.class_count, Vector(net.cells()));
    for (std::size_t c = 0; c < net.cells(); ++c) basis[p.assignment[c]][c] = 1;
    return basis;
}

} // namespace cellsync
