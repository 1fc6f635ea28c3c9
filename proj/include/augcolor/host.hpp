#pragma once

#include "augcolor/graph.hpp"
#include "augcolor/limits.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace augcolor {

using BigInt = boost::multiprecision::cpp_int;

struct MultipartiteHost {
    std::vector<std::size_t> parts;
};

struct DimacsHost {
    std::filesystem::path path;
};

struct ExplicitHost {
    Coloring coloring; // proper for the host graph
};

/// Declarative host graph. The graph itself is materialised on construction;
/// the variant records where it came from and whether a coloring is known.
class HostSpec {
public:
    using Source = std::variant<MultipartiteHost, DimacsHost, ExplicitHost>;

    // Vertices are numbered part by part: part 0 is 0..parts[0]-1, etc.
    static HostSpec multipartite(std::vector<std::size_t> parts);
    static HostSpec dimacs(const std::filesystem::path& path);
    static HostSpec from_graph(Graph graph, Coloring coloring);

    const Graph& graph() const { return graph_; }
    std::size_t order() const { return graph_.order(); }
    const Source& source() const { return source_; }

    // "multipartite:5,5,5", "dimacs:path.col", "explicit:path.col+coloring.csv"
    std::string describe() const;

private:
    HostSpec(Graph graph, Source source) : graph_(std::move(graph)), source_(std::move(source)) {}

    Graph graph_;
    Source source_;
};

HostSpec parse_host_spec(std::string_view text);

// Throws InputError on an empty list or a zero part.
Graph complete_multipartite(std::span<const std::size_t> parts);

// Optimal for multipartite hosts; the supplied coloring for explicit hosts;
// exact_chromatic for DIMACS hosts up to exact_cap, ColoringUnavailable above.
Coloring host_coloring(const HostSpec& spec, std::size_t exact_cap = kExactChromaticCap);

BigInt binomial(std::size_t n, std::size_t k);

// n_{H,k}: independent sets of size k. Closed form for multipartite hosts,
// exhaustive enumeration otherwise (n <= cap, else SizeError).
BigInt count_independent_sets(const HostSpec& spec, std::size_t k,
                              std::size_t cap = kCountIndependentSetsCap);
BigInt count_independent_sets(const Graph& g, std::size_t k, std::size_t cap = kCountIndependentSetsCap);

} // namespace augcolor
