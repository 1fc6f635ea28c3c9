#pragma once

#include "augcolor/graph.hpp"

#include <filesystem>
#include <iosfwd>

namespace augcolor::io {

// DIMACS .col: `c` comment lines, one `p edge <n> <m>` header (also accepts
// `p col`/`p edges`), then `e <u> <v>` lines with 1-based endpoints.
// Duplicate and reversed edge lines are tolerated; the declared m is not
// enforced.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::filesystem::path& path);

// Writes each edge once with u < v.
void write_dimacs(std::ostream& out, const Graph& g);
void write_dimacs_file(const std::filesystem::path& path, const Graph& g);

// Coloring CSV: `vertex,color` rows, both 1-based. An optional header line
// `vertex,color` is accepted on read and always written.
Coloring read_coloring_csv(std::istream& in, std::size_t n);
Coloring read_coloring_csv_file(const std::filesystem::path& path, std::size_t n);

void write_coloring_csv(std::ostream& out, const Coloring& c);
void write_coloring_csv_file(const std::filesystem::path& path, const Coloring& c);

} // namespace augcolor::io
