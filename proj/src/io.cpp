#include "hyperpack/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace hyperpack {

ParseError::ParseError(std::size_t line, const std::string& what, const std::string& source) :
    std::runtime_error((source.empty() ? "" : source + ": ") + (line ? "line " + std::to_string(line) + ": " : "") + what),
    line_(line),
    detail_(what)
{
}

namespace {
    std::vector<std::string> tokens(const std::string& line)
    {
        std::istringstream ss(line);
        std::vector<std::string> out;
        for (std::string t; ss >> t;)
            out.push_back(t);
        return out;
    }

    std::uint64_t parse_number(const std::string& s, std::size_t line)
    {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw ParseError(line, "expected a non-negative integer, got '" + s + "'");
        return v;
    }
}

HypergraphFile read_hypergraph(std::istream& in)
{
    HypergraphFile result;
    std::optional<std::size_t> n, k, m;
    std::size_t header_line = 0;
    std::vector<VertexSet> edges;
    std::map<VertexSet, std::size_t> seen;

    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        auto tok = tokens(line);
        if (tok.empty())
            continue;
        if (tok[0] == "c") {
            auto pos = line.find('c');
            auto rest = line.substr(pos + 1);
            if (! rest.empty() && rest.front() == ' ')
                rest.erase(0, 1);
            result.comments.push_back(rest);
        }
        else if (tok[0] == "h") {
            if (n)
                throw ParseError(lineno, "second header line (first on line " + std::to_string(header_line) + ")");
            if (tok.size() != 4)
                throw ParseError(lineno, "header must be 'h <n> <k> <m>'");
            n = parse_number(tok[1], lineno);
            k = parse_number(tok[2], lineno);
            m = parse_number(tok[3], lineno);
            header_line = lineno;
            if (*m > 0 && (*k < 1 || *k > *n))
                throw ParseError(lineno, "uniformity k=" + tok[2] + " out of range for n=" + tok[1]);
        }
        else if (tok[0] == "e") {
            if (! n)
                throw ParseError(lineno, "edge before header");
            if (tok.size() - 1 != *k)
                throw ParseError(lineno, "edge has " + std::to_string(tok.size() - 1) + " vertices, expected " + std::to_string(*k));
            std::vector<Vertex> labels;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                auto v = parse_number(tok[i], lineno);
                if (v < 1 || v > *n)
                    throw ParseError(lineno, "vertex " + tok[i] + " outside 1.." + std::to_string(*n));
                if (! labels.empty() && labels.back() >= v)
                    throw ParseError(lineno, "edge labels must be strictly increasing");
                labels.push_back(static_cast<Vertex>(v));
            }
            VertexSet e(std::move(labels));
            if (auto it = seen.find(e); it != seen.end())
                throw ParseError(lineno, "duplicate edge " + e.str() + " (first on line " + std::to_string(it->second) + ")");
            seen.emplace(e, lineno);
            if (edges.size() == *m)
                throw ParseError(lineno, "more edges than the header's m=" + std::to_string(*m));
            edges.push_back(std::move(e));
        }
        else
            throw ParseError(lineno, "unknown line type '" + tok[0] + "'");
    }

    if (! n)
        throw ParseError(0, "missing header line 'h <n> <k> <m>'");
    if (edges.size() != *m)
        throw ParseError(0, "header declares m=" + std::to_string(*m) + " edges but " + std::to_string(edges.size()) + " found");
    result.graph = Hypergraph(*n, *k, std::move(edges));
    return result;
}

HypergraphFile read_hypergraph_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (! in)
        throw std::runtime_error("cannot open " + path.string());
    try {
        return read_hypergraph(in);
    }
    catch (const ParseError& e) {
        throw ParseError(e.line(), e.detail(), path.string());
    }
}

void write_hypergraph(std::ostream& out, const Hypergraph& h, const std::vector<std::string>& comments)
{
    for (const auto& c : comments)
        out << "c " << c << '\n';
    out << "h " << h.n() << ' ' << h.k() << ' ' << h.size() << '\n';
    for (const auto& e : h.edges()) {
        out << 'e';
        for (Vertex v : e)
            out << ' ' << v;
        out << '\n';
    }
}

void write_hypergraph_file(const std::filesystem::path& path, const Hypergraph& h, const std::vector<std::string>& comments)
{
    std::ofstream out(path);
    if (! out)
        throw std::runtime_error("cannot write " + path.string());
    write_hypergraph(out, h, comments);
}

void write_bijection(std::ostream& out, const Bijection& f)
{
    for (std::size_t v = 1; v <= f.size(); ++v)
        out << v << " -> " << f(static_cast<Vertex>(v)) << '\n';
}

Bijection read_bijection(std::istream& in)
{
    std::map<std::uint64_t, std::uint64_t> pairs;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        auto tok = tokens(line);
        if (tok.empty() || tok[0] == "c")
            continue;
        if (tok.size() != 3 || tok[1] != "->")
            throw ParseError(lineno, "expected 'v -> f(v)'");
        auto v = parse_number(tok[0], lineno);
        if (! pairs.emplace(v, parse_number(tok[2], lineno)).second)
            throw ParseError(lineno, "vertex " + tok[0] + " mapped twice");
    }
    std::vector<Vertex> images;
    std::uint64_t expect = 1;
    for (auto [v, w] : pairs) {
        if (v != expect++)
            throw ParseError(0, "mapping does not cover 1..n contiguously");
        images.push_back(static_cast<Vertex>(w));
    }
    try {
        return Bijection(std::move(images));
    }
    catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

} // namespace hyperpack
