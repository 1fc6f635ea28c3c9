#include "augcolor/indep_search.hpp"

#include "augcolor/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace augcolor {

VertexSet greedy_maximal_independent_set(const Graph& g, const VertexSet& candidates, Seed order_seed)
{
    if (candidates.universe() != g.order())
        throw InputError("candidate set universe does not match graph order");
    if (candidates.empty())
        throw InputError("greedy independent set needs a nonempty candidate set");
    auto order = candidates.members();
    shuffle(order, order_seed);
    VertexSet chosen(g.order());
    VertexSet blocked(g.order());
    for (Vertex v : order) {
        if (blocked.contains(v))
            continue;
        chosen.insert(v);
        blocked |= g.neighbors(v);
    }
    return chosen;
}

namespace {

class SizedSearch {
public:
    SizedSearch(const Graph& g, std::vector<Vertex> order, std::size_t k, std::uint64_t limit)
        : g_(g), order_(std::move(order)), k_(k), limit_(limit)
    {
    }

    bool run(VertexSet pool) { return extend(std::move(pool), 0); }

    const std::vector<Vertex>& chosen() const { return chosen_; }
    std::uint64_t nodes() const { return nodes_; }
    bool exceeded() const { return exceeded_; }

private:
    // pool: undecided vertices compatible with chosen_, all at positions >= pos.
    bool extend(VertexSet pool, std::size_t pos)
    {
        while (true) {
            if (chosen_.size() + pool.size() < k_)
                return false;
            if (++nodes_ > limit_) {
                exceeded_ = true;
                return false;
            }
            while (!pool.contains(order_[pos]))
                ++pos;
            const Vertex v = order_[pos];
            pool.erase(v);
            chosen_.push_back(v);
            if (chosen_.size() == k_)
                return true;
            if (extend(pool - g_.neighbors(v), pos + 1))
                return true;
            chosen_.pop_back();
            if (exceeded_)
                return false;
            ++pos;
        }
    }

    const Graph& g_;
    std::vector<Vertex> order_;
    std::size_t k_;
    std::uint64_t limit_;
    std::uint64_t nodes_ = 0;
    bool exceeded_ = false;
    std::vector<Vertex> chosen_;
};

} // namespace

SearchOutcome find_independent_set_of_size(const Graph& g, const VertexSet& candidates, std::size_t k,
                                           SearchBudget budget)
{
    if (candidates.universe() != g.order())
        throw InputError("candidate set universe does not match graph order");
    if (k == 0)
        throw InputError("independent set size must be at least 1");

    auto order = candidates.members();
    std::vector<std::size_t> degree(g.order(), 0);
    for (Vertex v : order)
        degree[v] = g.neighbors(v).intersection_size(candidates);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return degree[a] < degree[b]; });

    SizedSearch search(g, std::move(order), k, budget.node_limit);
    SearchOutcome out;
    if (search.run(candidates)) {
        out.status = SearchStatus::found;
        out.set = VertexSet::from(g.order(), search.chosen());
    } else {
        out.status = search.exceeded() ? SearchStatus::budget_exceeded : SearchStatus::exhausted_none;
    }
    out.nodes = search.nodes();
    return out;
}

namespace {

class MaxIndependentSet {
public:
    explicit MaxIndependentSet(const Graph& g) : adj_(g.order(), 0)
    {
        for (Vertex v = 0; v < g.order(); ++v)
            g.neighbors(v).for_each([&](Vertex u) { adj_[v] |= std::uint64_t{1} << u; });
    }

    std::uint64_t solve()
    {
        const auto n = adj_.size();
        const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        branch(all, 0);
        return best_;
    }

private:
    void branch(std::uint64_t pool, std::uint64_t current)
    {
        while (true) {
            const int current_size = std::popcount(current);
            if (pool == 0) {
                if (current_size > best_size_) {
                    best_size_ = current_size;
                    best_ = current;
                }
                return;
            }
            if (current_size + std::popcount(pool) <= best_size_)
                return;

            int min_deg = 65, max_deg = -1;
            int min_v = 0, max_v = 0;
            for (std::uint64_t rest = pool; rest != 0; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                const int d = std::popcount(adj_[v] & pool);
                if (d < min_deg) {
                    min_deg = d;
                    min_v = v;
                }
                if (d > max_deg) {
                    max_deg = d;
                    max_v = v;
                }
            }
            // Some maximum independent set contains any vertex of degree <= 1.
            if (min_deg <= 1) {
                const std::uint64_t bit = std::uint64_t{1} << min_v;
                current |= bit;
                pool &= ~(adj_[min_v] | bit);
                continue;
            }
            const std::uint64_t bit = std::uint64_t{1} << max_v;
            branch(pool & ~(adj_[max_v] | bit), current | bit);
            pool &= ~bit;
        }
    }

    std::vector<std::uint64_t> adj_;
    std::uint64_t best_ = 0;
    int best_size_ = -1;
};

} // namespace

VertexSet maximum_independent_set(const Graph& g, std::size_t cap)
{
    if (g.order() > cap || g.order() > 64)
        throw SizeError("maximum independent set limited to n <= " + std::to_string(std::min<std::size_t>(cap, 64))
                        + ", got n = " + std::to_string(g.order()));
    VertexSet out(g.order());
    if (g.order() == 0)
        return out;
    const std::uint64_t best = MaxIndependentSet(g).solve();
    for (Vertex v = 0; v < g.order(); ++v)
        if ((best >> v) & 1U)
            out.insert(v);
    return out;
}

} // namespace augcolor
