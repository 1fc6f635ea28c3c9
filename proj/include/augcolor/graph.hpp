#pragma once

#include "augcolor/vertex_set.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace augcolor {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1, stored as one
/// adjacency bitrow per vertex. Build through GraphBuilder or build_graph.
class Graph {
public:
    Graph() = default;

    std::size_t order() const { return rows_.size(); }
    std::size_t edge_count() const { return edges_; }

    bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
    const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
    std::size_t degree(Vertex v) const { return rows_[v].size(); }
    std::size_t max_degree() const;

    // Each edge once as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;
    std::vector<VertexSet> rows_;
    std::size_t edges_ = 0;
};

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);
    explicit GraphBuilder(const Graph& base);

    // Throws InputError on out-of-range endpoints or self-loops. Duplicates
    // are absorbed.
    GraphBuilder& add_edge(Vertex u, Vertex v);
    // No range checks; for generators that produce valid pairs by construction.
    void add_edge_unchecked(Vertex u, Vertex v)
    {
        rows_[u].insert(v);
        rows_[v].insert(u);
    }

    Graph build() &&;

private:
    std::vector<VertexSet> rows_;
};

Graph build_graph(std::size_t n, std::span<const Edge> edges);

Graph graph_union(const Graph& g, const Graph& h);

struct InducedSubgraph {
    Graph graph;
    // original[i] is the vertex of the parent graph that became vertex i.
    std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);

/// Total vertex -> color map with colors relabelled to 0..k-1 in order of
/// first appearance, so k is always the number of colors in use.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<std::size_t> assignment);

    std::size_t size() const { return colors_.size(); }
    std::size_t color(Vertex v) const { return colors_[v]; }
    std::size_t num_colors() const { return k_; }
    std::span<const std::size_t> assignment() const { return colors_; }

    std::vector<VertexSet> classes() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<std::size_t> colors_;
    std::size_t k_ = 0;
};

// First edge (u < v) whose endpoints share a color, if any. Throws InputError
// when the coloring does not cover exactly the graph's vertices.
std::optional<Edge> first_conflict(const Graph& g, const Coloring& c);
bool is_proper_coloring(const Graph& g, const Coloring& c);

// Handy constructors used across tests, the CLI and the harness.
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph petersen_graph();

} // namespace augcolor
