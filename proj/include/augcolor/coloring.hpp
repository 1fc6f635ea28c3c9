#pragma once

#include "augcolor/graph.hpp"
#include "augcolor/host.hpp"
#include "augcolor/indep_search.hpp"
#include "augcolor/limits.hpp"
#include "augcolor/random_models.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace augcolor {

/// Parameters shared by the coloring algorithms.
///
/// theta is only meaningful for the small-p algorithms, which are intended for
/// n^(-1/3 + delta) <= p <= n^(-theta). delta has no computational role and is
/// not stored; the regime is the caller's intent and is not checked beyond
/// p in (0, 1) and theta in (0, 1/3).
struct AlgoParams {
    double p = 0.5;
    double epsilon = 0.1;
    double theta = 0.25;
    Seed seed{};
    SearchBudget is_budget{};
};

struct ClassAccounting {
    std::size_t size = 0;
    bool large = false;
    std::size_t colors = 0;
};

struct PhaseAccounting {
    std::size_t independent_set_colors = 0; // colors from extracted size-s sets
    std::size_t fallback_colors = 0;        // singletons or greedy, incl. small host classes
    std::size_t remaining_at_switch = 0;    // vertices uncolored when the set phase ended
    std::size_t nu_threshold = 0;           // ceil of the phase-switch threshold
    std::size_t set_size = 0;               // s, the size of every extracted set
    std::size_t budget_exceeded = 0;        // searches cut off by the node limit
    std::vector<ClassAccounting> classes;   // augmented algorithms only

    std::size_t total() const { return independent_set_colors + fallback_colors; }
    PhaseAccounting& operator+=(const PhaseAccounting& other);
};

struct ColoringResult {
    Coloring coloring;
    PhaseAccounting accounting;
    VertexSet fallback_vertices; // colored after the set-extraction phase
};

// Repeatedly colors a seed-ordered greedy maximal independent set of the
// uncolored vertices with a new color. Uses at most max_degree + 1 colors.
Coloring greedy_color(const Graph& g, Seed seed);

// Set size used by the constant-p and small-p loops:
// max(1, floor(2 log_b(np) - 4 log_b(log_b(np)))).
std::size_t extraction_set_size(std::size_t n, double p);

// True when np > 1 and log_b(np) > 1, i.e. the loop formulas are defined.
bool extraction_regime_holds(std::size_t n, double p);

// Extract size-s independent sets while at least ceil(n / log_b(np)^2)
// vertices are uncolored, then give every remaining vertex its own color.
// Throws RegimeError when extraction_regime_holds is false (n >= 1).
ColoringResult bollobas_constant(const Graph& g, const AlgoParams& params);

// Same extraction loop with threshold ceil(n / ln(np)), then greedy_color on
// the remainder.
ColoringResult bollobas_small(const Graph& g, const AlgoParams& params);

// Partition by the host's coloring; host classes of size >= g(n) are colored
// with bollobas_constant (g(n) = beta^((1 + eps/2)^(-1/2)), beta = n / chi_H),
// every other vertex gets its own color. Colors never repeat across classes.
ColoringResult augmented_color_constant(const HostSpec& host, const Graph& g, const AlgoParams& params);

// Large classes (|S| >= beta / ln n) via bollobas_small, small classes via
// greedy_color.
ColoringResult augmented_color_small(const HostSpec& host, const Graph& g, const AlgoParams& params);

// Host classes at the given threshold; exposed for tests and reports.
double constant_class_threshold(std::size_t n, std::size_t chi_host, double epsilon);
double small_class_threshold(std::size_t n, std::size_t chi_host);

struct ExactResult {
    std::size_t chromatic_number = 0;
    Coloring witness;
};

// Iterative deepening on k between a greedy clique bound and DSATUR, each
// step an exhaustive DSATUR-ordered backtracking search. Throws SizeError
// above cap.
ExactResult exact_chromatic(const Graph& g, std::size_t cap = kExactChromaticCap);

enum class Algorithm {
    greedy,
    bollobas_constant,
    bollobas_small,
    augmented_constant,
    augmented_small,
    exact,
};

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);
bool needs_host(Algorithm a);

// Uniform entry point. host may be null unless needs_host(a).
ColoringResult run_algorithm(Algorithm a, const Graph& g, const HostSpec* host, const AlgoParams& params,
                             std::size_t exact_cap = kExactChromaticCap);

} // namespace augcolor
