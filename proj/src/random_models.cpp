#include "augcolor/random_models.hpp"

#include "augcolor/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace augcolor {

std::uint64_t SplitMix64::below(std::uint64_t bound)
{
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = next();
    while (x >= limit)
        x = next();
    return x % bound;
}

void shuffle(std::vector<Vertex>& items, Seed seed)
{
    SplitMix64 rng(seed);
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[rng.below(i)]);
}

namespace {

void check_probability(double p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw InputError("edge probability " + std::to_string(p) + " outside [0, 1]");
}

void sample_canonical(GraphBuilder& b, std::size_t n, double p, SplitMix64& rng)
{
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform() < p)
                b.add_edge_unchecked(u, v);
}

void sample_geometric(GraphBuilder& b, std::size_t n, double p, SplitMix64& rng)
{
    // Pair index walks rows u = 0.., columns v = u+1..n-1.
    const double log_q = std::log1p(-p);
    Vertex u = 0;
    std::uint64_t v = 0; // column, relative: actual column is u + 1 + v
    while (u + 1 < n) {
        const double r = 1.0 - rng.uniform(); // (0, 1]
        v += static_cast<std::uint64_t>(std::floor(std::log(r) / log_q));
        while (u + 1 < n && v >= n - u - 1) {
            v -= n - u - 1;
            ++u;
        }
        if (u + 1 >= n)
            break;
        b.add_edge_unchecked(u, static_cast<Vertex>(u + 1 + v));
        ++v;
    }
}

} // namespace

Graph sample_gnp(std::size_t n, double p, Seed seed, SamplingMode mode)
{
    check_probability(p);
    if (n == 0)
        throw InputError("G(n, p) needs n >= 1");
    GraphBuilder b(n);
    SplitMix64 rng(seed);
    if (p == 0.0)
        return std::move(b).build();
    if (mode == SamplingMode::geometric_skip && p < 0.1)
        sample_geometric(b, n, p, rng);
    else
        sample_canonical(b, n, p, rng);
    return std::move(b).build();
}

Graph augment(const Graph& host, double p, Seed seed, SamplingMode mode)
{
    return graph_union(host, sample_gnp(host.order(), p, seed, mode));
}

} // namespace augcolor
