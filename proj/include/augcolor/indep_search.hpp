#pragma once

#include "augcolor/graph.hpp"
#include "augcolor/limits.hpp"
#include "augcolor/random_models.hpp"

#include <cstdint>

namespace augcolor {

struct SearchBudget {
    std::uint64_t node_limit = kDefaultNodeLimit;
};

enum class SearchStatus {
    found,
    exhausted_none,  // complete search, no set of the requested size
    budget_exceeded, // gave up after node_limit nodes
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::exhausted_none;
    VertexSet set; // meaningful only when status == found
    std::uint64_t nodes = 0;
};

// Scans candidates in a seed-shuffled order, keeping every vertex with no
// previously kept neighbor. The result is maximal within candidates.
VertexSet greedy_maximal_independent_set(const Graph& g, const VertexSet& candidates, Seed order_seed);

// Backtracking over candidates sorted by ascending degree (within the
// candidate set), pruned when the remaining compatible vertices cannot reach
// k. Deterministic.
SearchOutcome find_independent_set_of_size(const Graph& g, const VertexSet& candidates, std::size_t k,
                                           SearchBudget budget = {});

// Exact branch and bound. Throws SizeError above cap (cap itself may not
// exceed 64).
VertexSet maximum_independent_set(const Graph& g, std::size_t cap = kMaxIndependentSetCap);

} // namespace augcolor
