#include "augcolor/coloring.hpp"
#include "augcolor/errors.hpp"
#include "augcolor/graph.hpp"
#include "augcolor/host.hpp"
#include "augcolor/io.hpp"
#include "augcolor/random_models.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

using namespace augcolor;

namespace {

std::vector<Edge> E(std::initializer_list<Edge> e) { return e; }

} // namespace

TEST_CASE("build_graph")
{
    SUBCASE("empty graph on 4 vertices")
    {
        auto g = build_graph(4, {});
        CHECK(g.order() == 4);
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("triangle")
    {
        auto g = build_graph(3, E({{0, 1}, {0, 2}, {1, 2}}));
        CHECK(g.edge_count() == 3);
        CHECK(g.adjacent(2, 0));
    }
    SUBCASE("duplicates and reversed pairs collapse")
    {
        auto g = build_graph(3, E({{0, 1}, {0, 1}, {1, 0}}));
        CHECK(g.edge_count() == 1);
        CHECK(g.edges() == E({{0, 1}}));
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_AS(build_graph(3, E({{0, 3}})), InputError);
        CHECK_THROWS_AS(build_graph(3, E({{1, 1}})), InputError);
    }
}

TEST_CASE("graph invariants hold on random graphs")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = oracle::random_graph(1 + seed % 70, 0.3, seed);
        std::size_t degree_sum = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            CHECK_FALSE(g.adjacent(v, v));
            degree_sum += g.degree(v);
            g.neighbors(v).for_each([&](Vertex u) { CHECK(g.adjacent(u, v)); });
        }
        CHECK(degree_sum == 2 * g.edge_count());
    }
}

TEST_CASE("graph_union")
{
    CHECK(graph_union(build_graph(4, {}), build_graph(4, {})) == build_graph(4, {}));

    const auto path = build_graph(3, E({{0, 1}, {1, 2}}));
    const auto chord = build_graph(3, E({{0, 2}}));
    CHECK(graph_union(path, chord) == complete_graph(3));

    SUBCASE("K22 with a seeded G(4, 0.5) equals the edge-set union")
    {
        const auto k22 = complete_multipartite(std::vector<std::size_t>{2, 2});
        const auto r = sample_gnp(4, 0.5, Seed{11});
        std::set<Edge> expected;
        for (auto e : k22.edges())
            expected.insert(e);
        for (auto e : r.edges())
            expected.insert(e);
        const auto u = graph_union(k22, r).edges();
        CHECK(std::set<Edge>(u.begin(), u.end()) == expected);
    }

    CHECK_THROWS_AS(graph_union(build_graph(3, {}), build_graph(4, {})), InputError);

    SUBCASE("edge count is subadditive, equal iff disjoint")
    {
        for (std::uint64_t s = 0; s < 40; ++s) {
            const auto g = oracle::random_graph(12, 0.2, s);
            const auto h = oracle::random_graph(12, 0.2, s + 1000);
            const auto u = graph_union(g, h);
            std::size_t shared = 0;
            for (auto [a, b] : g.edges())
                shared += h.adjacent(a, b) ? 1 : 0;
            CHECK(u.edge_count() <= g.edge_count() + h.edge_count());
            CHECK((u.edge_count() == g.edge_count() + h.edge_count()) == (shared == 0));
        }
    }
}

TEST_CASE("induced_subgraph")
{
    const auto tri = complete_graph(3);
    const auto sub = induced_subgraph(tri, VertexSet(3, {0, 1}));
    CHECK(sub.graph == build_graph(2, E({{0, 1}})));
    CHECK(sub.original == std::vector<Vertex>{0, 1});

    const auto g = oracle::random_graph(25, 0.4, 3);
    CHECK(induced_subgraph(g, VertexSet::full(25)).graph == g);

    SUBCASE("Petersen outer vertices induce C5")
    {
        const auto p = petersen_graph();
        const auto outer = induced_subgraph(p, VertexSet(10, {0, 1, 2, 3, 4}));
        CHECK(outer.graph.edge_count() == 5);
        // Adjacency-list oracle: each vertex i adjacent to exactly i±1 mod 5.
        for (Vertex i = 0; i < 5; ++i) {
            CHECK(outer.graph.degree(i) == 2);
            CHECK(outer.graph.adjacent(i, (i + 1) % 5));
        }
    }

    SUBCASE("edge count never grows")
    {
        for (std::uint64_t s = 0; s < 20; ++s) {
            const auto h = oracle::random_graph(30, 0.3, s);
            const auto set = sample_gnp(30, 0.5, Seed{s + 77}).neighbors(0) | VertexSet(30, {0});
            CHECK(induced_subgraph(h, set).graph.edge_count() <= h.edge_count());
        }
    }
}

TEST_CASE("is_independent")
{
    CHECK_FALSE(is_independent(complete_graph(3), VertexSet(3, {0, 1})));
    CHECK(is_independent(oracle::random_graph(20, 0.5, 1), VertexSet(20)));
    const auto k22 = complete_multipartite(std::vector<std::size_t>{2, 2});
    CHECK(is_independent(k22, VertexSet(4, {0, 1})));
}

TEST_CASE("is_proper_coloring")
{
    CHECK(is_proper_coloring(complete_graph(3), Coloring({1, 2, 3})));
    const auto edge = build_graph(2, E({{0, 1}}));
    CHECK_FALSE(is_proper_coloring(edge, Coloring({1, 1})));
    CHECK(first_conflict(edge, Coloring({1, 1})) == Edge{0, 1});

    // C5 has no proper 2-coloring: check all 32 assignments.
    const auto c5 = cycle_graph(5);
    for (unsigned mask = 0; mask < 32; ++mask) {
        std::vector<std::size_t> colors(5);
        for (unsigned v = 0; v < 5; ++v)
            colors[v] = (mask >> v) & 1U;
        CHECK_FALSE(is_proper_coloring(c5, Coloring(colors)));
    }
    CHECK_THROWS_AS(is_proper_coloring(c5, Coloring({0, 1})), InputError);
}

TEST_CASE("coloring relabels to contiguous colors")
{
    Coloring c({7, 3, 7, 9});
    CHECK(c.num_colors() == 3);
    CHECK(c.color(0) == c.color(2));
    CHECK(c.classes().size() == 3);
}

TEST_CASE("proper iff every color class is independent")
{
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto g = oracle::random_graph(15, 0.3, s);
        SplitMix64 rng(Seed{s});
        std::vector<std::size_t> colors(15);
        for (auto& c : colors)
            c = rng.below(4);
        const Coloring coloring(colors);
        bool classes_independent = true;
        for (const auto& cls : coloring.classes())
            classes_independent = classes_independent && is_independent(g, cls);
        CHECK(is_proper_coloring(g, coloring) == classes_independent);
    }
}

TEST_CASE("divide and color on small graphs")
{
    // chi(g ∪ h) <= sum over an independent partition of g of chi(h[S]),
    // with equality when g is complete multipartite on that partition.
    for (std::uint64_t s = 0; s < 25; ++s) {
        const std::vector<std::size_t> parts{3, 2, 3};
        const auto g = complete_multipartite(parts);
        const auto h = oracle::random_graph(8, 0.5, s);
        std::size_t sum = 0;
        std::size_t start = 0;
        for (auto size : parts) {
            VertexSet cls(8);
            for (std::size_t i = 0; i < size; ++i)
                cls.insert(static_cast<Vertex>(start + i));
            start += size;
            sum += oracle::brute_chromatic(induced_subgraph(h, cls).graph);
        }
        CHECK(oracle::brute_chromatic(graph_union(g, h)) == sum);
    }
}

TEST_CASE("DIMACS reader and writer")
{
    std::istringstream in("c a comment\np edge 4 5\ne 1 2\ne 2 1\ne 1 2\ne 3 4\ne 4 2\n");
    const auto g = io::read_dimacs(in);
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 3);

    std::ostringstream out;
    io::write_dimacs(out, g);
    CHECK(out.str() == "p edge 4 3\ne 1 2\ne 2 4\ne 3 4\n");

    SUBCASE("round trip on random graphs")
    {
        for (std::uint64_t s = 0; s < 10; ++s) {
            const auto r = oracle::random_graph(40, 0.2, s);
            std::stringstream ss;
            io::write_dimacs(ss, r);
            CHECK(io::read_dimacs(ss) == r);
        }
    }
    SUBCASE("errors")
    {
        std::istringstream no_header("e 1 2\n");
        CHECK_THROWS_AS(io::read_dimacs(no_header), InputError);
        std::istringstream range("p edge 3 1\ne 1 4\n");
        CHECK_THROWS_AS(io::read_dimacs(range), InputError);
        std::istringstream loop("p edge 3 1\ne 2 2\n");
        CHECK_THROWS_AS(io::read_dimacs(loop), InputError);
        std::istringstream junk("p edge 3 1\nx 1 2\n");
        CHECK_THROWS_AS(io::read_dimacs(junk), InputError);
    }
}

TEST_CASE("coloring CSV")
{
    std::istringstream in("vertex,color\n1,2\n2,5\n3,2\n");
    const auto c = io::read_coloring_csv(in, 3);
    CHECK(c.num_colors() == 2);
    CHECK(c.color(0) == c.color(2));

    std::ostringstream out;
    io::write_coloring_csv(out, c);
    CHECK(out.str() == "vertex,color\n1,1\n2,2\n3,1\n");

    std::istringstream missing("1,1\n");
    CHECK_THROWS_AS(io::read_coloring_csv(missing, 2), InputError);
    std::istringstream twice("1,1\n1,2\n2,1\n");
    CHECK_THROWS_AS(io::read_coloring_csv(twice, 2), InputError);
    std::istringstream range("3,1\n");
    CHECK_THROWS_AS(io::read_coloring_csv(range, 2), InputError);
}
