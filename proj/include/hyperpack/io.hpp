#pragma once

#include "hyperpack/hypergraph.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperpack {

/// Malformed input; carries the 1-based line number of the offending line
/// (0 when the problem is not tied to one line, e.g. a missing edge).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what, const std::string& source = {});
    std::size_t line() const noexcept { return line_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

struct HypergraphFile {
    Hypergraph graph;
    /// Text after the leading "c " of every comment line, in file order.
    std::vector<std::string> comments;
};

/// Reads the line format
///   c <comment>
///   h <n> <k> <m>
///   e <v1> ... <vk>      (m times, strictly increasing labels)
HypergraphFile read_hypergraph(std::istream& in);
HypergraphFile read_hypergraph_file(const std::filesystem::path& path);

void write_hypergraph(std::ostream& out, const Hypergraph& h, const std::vector<std::string>& comments = {});
void write_hypergraph_file(const std::filesystem::path& path, const Hypergraph& h,
    const std::vector<std::string>& comments = {});

/// Lines "v -> f(v)" for v = 1..n.
void write_bijection(std::ostream& out, const Bijection& f);
Bijection read_bijection(std::istream& in);

} // namespace hyperpack
