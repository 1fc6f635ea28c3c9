#include "augcolor/graph.hpp"

#include "augcolor/errors.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace augcolor {

std::size_t Graph::max_degree() const
{
    std::size_t best = 0;
    for (const auto& row : rows_)
        best = std::max(best, row.size());
    return best;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < rows_.size(); ++u) {
        for (auto v = rows_[u].next(u + 1); v != VertexSet::npos; v = rows_[u].next(v + 1))
            out.emplace_back(u, static_cast<Vertex>(v));
    }
    return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : rows_(n, VertexSet(n)) {}

GraphBuilder::GraphBuilder(const Graph& base) : rows_(base.rows_) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v)
{
    const auto n = rows_.size();
    if (u >= n || v >= n)
        throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v)
                         + "} outside vertex range of size " + std::to_string(n));
    if (u == v)
        throw InputError("self-loop at vertex " + std::to_string(u));
    add_edge_unchecked(u, v);
    return *this;
}

Graph GraphBuilder::build() &&
{
    Graph g;
    std::size_t degree_sum = 0;
    for (const auto& row : rows_)
        degree_sum += row.size();
    g.rows_ = std::move(rows_);
    g.edges_ = degree_sum / 2;
    return g;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (const auto& [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

Graph graph_union(const Graph& g, const Graph& h)
{
    if (g.order() != h.order())
        throw InputError("union of graphs with different vertex counts ("
                         + std::to_string(g.order()) + " vs " + std::to_string(h.order()) + ")");
    GraphBuilder b(g);
    for (const auto& [u, v] : h.edges())
        b.add_edge_unchecked(u, v);
    return std::move(b).build();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.order())
        throw InputError("vertex set universe does not match graph order");
    InducedSubgraph out;
    out.original = s.members();
    std::vector<Vertex> relabel(g.order(), 0);
    for (Vertex i = 0; i < out.original.size(); ++i)
        relabel[out.original[i]] = i;

    GraphBuilder b(out.original.size());
    for (Vertex i = 0; i < out.original.size(); ++i) {
        const auto& row = g.neighbors(out.original[i]);
        for (auto v = row.next(out.original[i] + 1); v != VertexSet::npos; v = row.next(v + 1))
            if (s.contains(static_cast<Vertex>(v)))
                b.add_edge_unchecked(i, relabel[v]);
    }
    out.graph = std::move(b).build();
    return out;
}

bool is_independent(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.order())
        throw InputError("vertex set universe does not match graph order");
    bool independent = true;
    s.for_each([&](Vertex v) {
        if (independent && g.neighbors(v).intersects(s))
            independent = false;
    });
    return independent;
}

Coloring::Coloring(std::vector<std::size_t> assignment) : colors_(std::move(assignment))
{
    std::unordered_map<std::size_t, std::size_t> relabel;
    for (auto& c : colors_) {
        auto [it, inserted] = relabel.try_emplace(c, relabel.size());
        c = it->second;
    }
    k_ = relabel.size();
}

std::vector<VertexSet> Coloring::classes() const
{
    std::vector<VertexSet> out(k_, VertexSet(colors_.size()));
    for (Vertex v = 0; v < colors_.size(); ++v)
        out[colors_[v]].insert(v);
    return out;
}

std::optional<Edge> first_conflict(const Graph& g, const Coloring& c)
{
    if (c.size() != g.order())
        throw InputError("coloring covers " + std::to_string(c.size()) + " vertices, graph has "
                         + std::to_string(g.order()));
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto& row = g.neighbors(u);
        for (auto v = row.next(u + 1); v != VertexSet::npos; v = row.next(v + 1))
            if (c.color(u) == c.color(static_cast<Vertex>(v)))
                return Edge{u, static_cast<Vertex>(v)};
    }
    return std::nullopt;
}

bool is_proper_coloring(const Graph& g, const Coloring& c)
{
    return !first_conflict(g, c).has_value();
}

Graph complete_graph(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge_unchecked(u, v);
    return std::move(b).build();
}

Graph cycle_graph(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        b.add_edge(u, static_cast<Vertex>((u + 1) % n));
    return std::move(b).build();
}

Graph petersen_graph()
{
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    GraphBuilder b(10);
    for (Vertex i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
        b.add_edge(i, 5 + i);
    }
    return std::move(b).build();
}

} // namespace augcolor
