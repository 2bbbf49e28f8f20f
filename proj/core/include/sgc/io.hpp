#pragma once

#include "sgc/coloring.hpp"
#include "sgc/sgraph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace sgc::io {

// Graph text format:
//   signed <n> <m>
//   e <u> <v> <+|->      (m lines, 0-indexed, u < v)
// Lines starting with '#' and blank lines are ignored.
SignedGraph parse_graph(std::istream& in, const std::string& source = "<input>");
SignedGraph parse_graph(std::string_view text, const std::string& source = "<input>");
SignedGraph read_graph(const std::filesystem::path& path);
void write_graph(std::ostream& out, const SignedGraph& g);
std::string format_graph(const SignedGraph& g);

// Coloring text format: a header `kd <k> <d>` or `r <num>/<den>`, then one
// `<v> <color>` line per vertex (integers for kd, rationals for r).
using AnyColoring = std::variant<KDColoring, RColoring>;

AnyColoring parse_coloring(std::istream& in, const std::string& source = "<input>");
AnyColoring parse_coloring(std::string_view text, const std::string& source = "<input>");
AnyColoring read_coloring(const std::filesystem::path& path);
void write_coloring(std::ostream& out, const KDColoring& c);
void write_coloring(std::ostream& out, const RColoring& f);
std::string format_coloring(const AnyColoring& c);

} // namespace sgc::io
