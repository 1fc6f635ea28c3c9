#include "augcolor/host.hpp"

#include "augcolor/coloring.hpp"
#include "augcolor/errors.hpp"
#include "augcolor/io.hpp"

#include <numeric>
#include <sstream>

namespace augcolor {

Graph complete_multipartite(std::span<const std::size_t> parts)
{
    if (parts.empty())
        throw InputError("multipartite host needs at least one part");
    std::vector<std::size_t> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0)
            throw InputError("multipartite part sizes must be positive");
        part_of.insert(part_of.end(), parts[i], i);
    }
    const auto n = part_of.size();
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v])
                b.add_edge_unchecked(u, v);
    return std::move(b).build();
}

HostSpec HostSpec::multipartite(std::vector<std::size_t> parts)
{
    auto g = complete_multipartite(parts);
    return HostSpec(std::move(g), MultipartiteHost{std::move(parts)});
}

HostSpec HostSpec::dimacs(const std::filesystem::path& path)
{
    return HostSpec(io::read_dimacs_file(path), DimacsHost{path});
}

HostSpec HostSpec::from_graph(Graph graph, Coloring coloring)
{
    if (auto bad = first_conflict(graph, coloring))
        throw InputError("host coloring is not proper: edge {" + std::to_string(bad->first + 1) + ","
                         + std::to_string(bad->second + 1) + "} is monochromatic");
    return HostSpec(std::move(graph), ExplicitHost{std::move(coloring)});
}

std::string HostSpec::describe() const
{
    std::ostringstream out;
    if (const auto* m = std::get_if<MultipartiteHost>(&source_)) {
        out << "multipartite:";
        for (std::size_t i = 0; i < m->parts.size(); ++i)
            out << (i ? "," : "") << m->parts[i];
    } else if (const auto* d = std::get_if<DimacsHost>(&source_)) {
        out << "dimacs:" << d->path.string();
    } else {
        out << "explicit:n=" << graph_.order() << ",k=" << std::get<ExplicitHost>(source_).coloring.num_colors();
    }
    return out.str();
}

HostSpec parse_host_spec(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw InputError("host spec '" + std::string(text)
                         + "' must look like multipartite:a,b,..., dimacs:path or explicit:graph+coloring");
    const auto kind = text.substr(0, colon);
    const std::string body(text.substr(colon + 1));
    if (kind == "multipartite") {
        std::vector<std::size_t> parts;
        std::stringstream ss(body);
        for (std::string item; std::getline(ss, item, ',');) {
            try {
                std::size_t used = 0;
                const long long v = std::stoll(item, &used);
                if (used != item.size() || v <= 0)
                    throw InputError("");
                parts.push_back(static_cast<std::size_t>(v));
            } catch (const std::exception&) {
                throw InputError("bad multipartite part size '" + item + "'");
            }
        }
        return HostSpec::multipartite(std::move(parts));
    }
    if (kind == "dimacs")
        return HostSpec::dimacs(body);
    if (kind == "explicit") {
        const auto plus = body.find('+');
        if (plus == std::string::npos)
            throw InputError("explicit host spec needs graph.col+coloring.csv");
        auto graph = io::read_dimacs_file(body.substr(0, plus));
        auto coloring = io::read_coloring_csv_file(body.substr(plus + 1), graph.order());
        return HostSpec::from_graph(std::move(graph), std::move(coloring));
    }
    throw InputError("unknown host kind '" + std::string(kind) + "'");
}

Coloring host_coloring(const HostSpec& spec, std::size_t exact_cap)
{
    if (const auto* m = std::get_if<MultipartiteHost>(&spec.source())) {
        std::vector<std::size_t> colors;
        colors.reserve(spec.order());
        for (std::size_t i = 0; i < m->parts.size(); ++i)
            colors.insert(colors.end(), m->parts[i], i);
        return Coloring(std::move(colors));
    }
    if (const auto* e = std::get_if<ExplicitHost>(&spec.source()))
        return e->coloring;
    if (spec.order() > exact_cap)
        throw ColoringUnavailable("optimal coloring unavailable: host has " + std::to_string(spec.order())
                                  + " vertices (exact cap " + std::to_string(exact_cap)
                                  + "); supply one with explicit:graph.col+coloring.csv");
    return exact_chromatic(spec.graph(), exact_cap).witness;
}

BigInt binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace {

BigInt count_extensions(const Graph& g, const VertexSet& pool, std::size_t needed)
{
    if (needed == 0)
        return 1;
    if (pool.size() < needed)
        return 0;
    BigInt total = 0;
    VertexSet rest = pool;
    for (auto v = pool.next(); v != VertexSet::npos; v = pool.next(v + 1)) {
        rest.erase(static_cast<Vertex>(v));
        if (rest.size() + 1 < needed)
            break;
        total += count_extensions(g, rest - g.neighbors(static_cast<Vertex>(v)), needed - 1);
    }
    return total;
}

} // namespace

BigInt count_independent_sets(const Graph& g, std::size_t k, std::size_t cap)
{
    if (k == 0)
        throw InputError("independent set size must be at least 1");
    if (k == 1)
        return g.order();
    if (g.order() > cap)
        throw SizeError("independent set enumeration limited to n <= " + std::to_string(cap) + ", got n = "
                        + std::to_string(g.order()));
    return count_extensions(g, VertexSet::full(g.order()), k);
}

BigInt count_independent_sets(const HostSpec& spec, std::size_t k, std::size_t cap)
{
    if (k == 0)
        throw InputError("independent set size must be at least 1");
    if (k == 1)
        return spec.order();
    if (const auto* m = std::get_if<MultipartiteHost>(&spec.source())) {
        BigInt total = 0;
        for (auto s : m->parts)
            total += binomial(s, k);
        return total;
    }
    return count_independent_sets(spec.graph(), k, cap);
}

} // namespace augcolor
