#include "sgc/io.hpp"

#include "sgc/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace sgc::io {

namespace {

// Whitespace-split logical lines with their 1-based line numbers; comments and
// blank lines dropped.
struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in)
{
    std::vector<Line> out;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream ss(raw);
        std::vector<std::string> tokens;
        for (std::string t; ss >> t;) tokens.push_back(t);
        if (tokens.empty() || tokens.front().starts_with('#')) continue;
        out.push_back({number, std::move(tokens)});
    }
    return out;
}

Int to_int(const std::string& token, const std::string& source, std::size_t line)
{
    try {
        std::size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    }
    catch (const std::exception&) {
        throw ParseError(source, line, "expected an integer, got '" + token + "'");
    }
}

Ratio to_ratio(const std::string& token, const std::string& source, std::size_t line)
{
    try {
        return Ratio::parse(token);
    }
    catch (const Error& e) {
        throw ParseError(source, line, "expected a rational 'num/den', got '" + token + "'");
    }
}

std::ifstream open(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return in;
}

} // namespace

SignedGraph parse_graph(std::istream& in, const std::string& source)
{
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError(source, 1, "missing 'signed <n> <m>' header");
    const auto& head = lines.front();
    if (head.tokens.size() != 3 || head.tokens[0] != "signed")
        throw ParseError(source, head.number, "expected 'signed <n> <m>'");
    const Int n = to_int(head.tokens[1], source, head.number);
    const Int m = to_int(head.tokens[2], source, head.number);
    if (n < 0 || m < 0) throw ParseError(source, head.number, "negative vertex or edge count");

    std::vector<SignedEdge> edges;
    std::map<std::pair<Int, Int>, std::size_t> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.tokens.size() != 4 || l.tokens[0] != "e") throw ParseError(source, l.number, "expected 'e <u> <v> <+|->'");
        const Int u = to_int(l.tokens[1], source, l.number);
        const Int v = to_int(l.tokens[2], source, l.number);
        const auto& s = l.tokens[3];
        if (s != "+" && s != "-") throw ParseError(source, l.number, "edge sign must be '+' or '-', got '" + s + "'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(source, l.number, "vertex index out of range 0.." + std::to_string(n - 1));
        if (u == v) throw ParseError(source, l.number, "loop at vertex " + std::to_string(u));
        if (u > v) throw ParseError(source, l.number, "edge endpoints must satisfy u < v");
        auto [it, fresh] = seen.emplace(std::pair{u, v}, l.number);
        if (!fresh)
            throw ParseError(source, l.number,
                             "duplicate edge " + std::to_string(u) + "-" + std::to_string(v) + " (first on line " +
                                 std::to_string(it->second) + ")");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), s == "+" ? 1 : -1});
    }
    if (static_cast<Int>(edges.size()) != m)
        throw ParseError(source, head.number,
                         "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return SignedGraph(static_cast<int>(n), std::move(edges));
}

SignedGraph parse_graph(std::string_view text, const std::string& source)
{
    std::istringstream in{std::string(text)};
    return parse_graph(in, source);
}

SignedGraph read_graph(const std::filesystem::path& path)
{
    auto in = open(path);
    return parse_graph(in, path.string());
}

void write_graph(std::ostream& out, const SignedGraph& g)
{
    out << "signed " << g.order() << " " << g.size() << "\n";
    for (const auto& e : g.edges()) out << "e " << e.u << " " << e.v << " " << (e.sign > 0 ? '+' : '-') << "\n";
}

std::string format_graph(const SignedGraph& g)
{
    std::ostringstream ss;
    write_graph(ss, g);
    return ss.str();
}

AnyColoring parse_coloring(std::istream& in, const std::string& source)
{
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError(source, 1, "missing 'kd <k> <d>' or 'r <num>/<den>' header");
    const auto& head = lines.front();
    const bool kd = head.tokens[0] == "kd";
    if (!(kd && head.tokens.size() == 3) && !(head.tokens[0] == "r" && head.tokens.size() == 2))
        throw ParseError(source, head.number, "expected 'kd <k> <d>' or 'r <num>/<den>'");

    std::map<Int, std::pair<std::string, std::size_t>> entries;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.tokens.size() != 2) throw ParseError(source, l.number, "expected '<v> <color>'");
        Int v = to_int(l.tokens[0], source, l.number);
        if (v < 0) throw ParseError(source, l.number, "negative vertex index");
        if (!entries.emplace(v, std::pair{l.tokens[1], l.number}).second)
            throw ParseError(source, l.number, "vertex " + std::to_string(v) + " colored twice");
    }
    const Int n = entries.empty() ? 0 : entries.rbegin()->first + 1;
    if (static_cast<Int>(entries.size()) != n)
        throw ParseError(source, head.number, "coloring must list every vertex 0.." + std::to_string(n - 1) + " exactly once");

    try {
        if (kd) {
            const Int k = to_int(head.tokens[1], source, head.number);
            const Int d = to_int(head.tokens[2], source, head.number);
            std::vector<Int> colors;
            for (const auto& [v, entry] : entries) colors.push_back(to_int(entry.first, source, entry.second));
            return KDColoring(k, d, std::move(colors));
        }
        const Ratio r = to_ratio(head.tokens[1], source, head.number);
        std::vector<Ratio> colors;
        for (const auto& [v, entry] : entries) colors.push_back(to_ratio(entry.first, source, entry.second));
        return RColoring(r, std::move(colors));
    }
    catch (const ParseError&) {
        throw;
    }
    catch (const Error& e) {
        throw ParseError(source, head.number, e.what());
    }
}

AnyColoring parse_coloring(std::string_view text, const std::string& source)
{
    std::istringstream in{std::string(text)};
    return parse_coloring(in, source);
}

AnyColoring read_coloring(const std::filesystem::path& path)
{
    auto in = open(path);
    return parse_coloring(in, path.string());
}

void write_coloring(std::ostream& out, const KDColoring& c)
{
    out << "kd " << c.k() << " " << c.d() << "\n";
    for (std::size_t v = 0; v < c.size(); ++v) out << v << " " << c.colors()[v] << "\n";
}

void write_coloring(std::ostream& out, const RColoring& f)
{
    out << "r " << f.r().to_string() << "\n";
    for (std::size_t v = 0; v < f.size(); ++v) out << v << " " << f.colors()[v].to_string() << "\n";
}

std::string format_coloring(const AnyColoring& c)
{
    std::ostringstream ss;
    std::visit([&](const auto& x) { write_coloring(ss, x); }, c);
    return ss.str();
}

} // namespace sgc::io
