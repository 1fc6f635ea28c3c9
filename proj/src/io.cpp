#include "augcolor/io.hpp"

#include "augcolor/errors.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace augcolor::io {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what)
{
    throw InputError("line " + std::to_string(line) + ": " + what);
}

std::ifstream open_in(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path.string());
    return in;
}

std::ofstream open_out(const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path.string());
    return out;
}

} // namespace

Graph read_dimacs(std::istream& in)
{
    std::optional<GraphBuilder> builder;
    std::size_t n = 0;
    std::string line;
    for (std::size_t ln = 1; std::getline(in, line); ++ln) {
        std::istringstream iss(line);
        std::string tag;
        if (!(iss >> tag) || tag == "c")
            continue;
        if (tag == "p") {
            if (builder)
                parse_fail(ln, "duplicate problem line");
            std::string kind;
            long long nv = -1, ne = -1;
            if (!(iss >> kind >> nv >> ne) || nv < 0 || ne < 0)
                parse_fail(ln, "malformed problem line");
            if (kind != "edge" && kind != "edges" && kind != "col")
                parse_fail(ln, "unsupported problem kind '" + kind + "'");
            n = static_cast<std::size_t>(nv);
            builder.emplace(n);
        } else if (tag == "e") {
            if (!builder)
                parse_fail(ln, "edge before problem line");
            long long u = 0, v = 0;
            if (!(iss >> u >> v))
                parse_fail(ln, "malformed edge line");
            if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
                parse_fail(ln, "edge endpoint outside 1.." + std::to_string(n));
            if (u == v)
                parse_fail(ln, "self-loop at vertex " + std::to_string(u));
            builder->add_edge_unchecked(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            parse_fail(ln, "unknown line type '" + tag + "'");
        }
    }
    if (!builder)
        throw InputError("missing problem line");
    return std::move(*builder).build();
}

Graph read_dimacs_file(const std::filesystem::path& path)
{
    auto in = open_in(path);
    try {
        return read_dimacs(in);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

void write_dimacs(std::ostream& out, const Graph& g)
{
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_dimacs_file(const std::filesystem::path& path, const Graph& g)
{
    auto out = open_out(path);
    write_dimacs(out, g);
}

Coloring read_coloring_csv(std::istream& in, std::size_t n)
{
    std::vector<std::optional<std::size_t>> colors(n);
    std::string line;
    for (std::size_t ln = 1; std::getline(in, line); ++ln) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        if (ln == 1 && line.rfind("vertex", 0) == 0)
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            parse_fail(ln, "expected 'vertex,color'");
        long long v = 0, c = 0;
        try {
            v = std::stoll(line.substr(0, comma));
            c = std::stoll(line.substr(comma + 1));
        } catch (const std::exception&) {
            parse_fail(ln, "non-numeric field");
        }
        if (v < 1 || static_cast<std::size_t>(v) > n)
            parse_fail(ln, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
        if (c < 1)
            parse_fail(ln, "colors are positive integers");
        auto& slot = colors[static_cast<std::size_t>(v - 1)];
        if (slot && *slot != static_cast<std::size_t>(c))
            parse_fail(ln, "vertex " + std::to_string(v) + " colored twice");
        slot = static_cast<std::size_t>(c);
    }
    std::vector<std::size_t> assignment(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (!colors[v])
            throw InputError("vertex " + std::to_string(v + 1) + " has no color");
        assignment[v] = *colors[v];
    }
    return Coloring(std::move(assignment));
}

Coloring read_coloring_csv_file(const std::filesystem::path& path, std::size_t n)
{
    auto in = open_in(path);
    try {
        return read_coloring_csv(in, n);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

void write_coloring_csv(std::ostream& out, const Coloring& c)
{
    out << "vertex,color\n";
    for (Vertex v = 0; v < c.size(); ++v)
        out << v + 1 << ',' << c.color(v) + 1 << '\n';
}

void write_coloring_csv_file(const std::filesystem::path& path, const Coloring& c)
{
    auto out = open_out(path);
    write_coloring_csv(out, c);
}

} // namespace augcolor::io
