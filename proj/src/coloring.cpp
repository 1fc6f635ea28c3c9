#include "augcolor/coloring.hpp"

#include "augcolor/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace augcolor {

PhaseAccounting& PhaseAccounting::operator+=(const PhaseAccounting& other)
{
    independent_set_colors += other.independent_set_colors;
    fallback_colors += other.fallback_colors;
    remaining_at_switch += other.remaining_at_switch;
    nu_threshold += other.nu_threshold;
    set_size = std::max(set_size, other.set_size);
    budget_exceeded += other.budget_exceeded;
    classes.insert(classes.end(), other.classes.begin(), other.classes.end());
    return *this;
}

namespace {

constexpr std::size_t kUncolored = std::numeric_limits<std::size_t>::max();

void validate(const AlgoParams& params, bool small_regime)
{
    if (!(params.p > 0.0 && params.p < 1.0))
        throw InputError("algorithms need 0 < p < 1, got p = " + std::to_string(params.p));
    if (!(params.epsilon > 0.0))
        throw InputError("epsilon must be positive");
    if (small_regime && !(params.theta > 0.0 && params.theta < 1.0 / 3.0))
        throw InputError("small-p algorithms need theta in (0, 1/3)");
}

double ln_b(double p) { return -std::log1p(-p); }

// log_b(np), assuming the caller checked np > 1.
double log_b_np(std::size_t n, double p) { return std::log(static_cast<double>(n) * p) / ln_b(p); }

void require_regime(std::size_t n, double p)
{
    if (!extraction_regime_holds(n, p))
        throw RegimeError("extraction loop undefined for n = " + std::to_string(n) + ", p = " + std::to_string(p)
                          + " (needs np > 1 and log_b(np) > 1)");
}

// Shared set-extraction phase. Returns the partial assignment; uncolored
// vertices hold kUncolored and are left in `uncolored`.
struct ExtractionState {
    std::vector<std::size_t> colors;
    VertexSet uncolored;
    std::size_t next_color = 0;
    PhaseAccounting accounting;
};

ExtractionState extract_sets(const Graph& g, std::size_t set_size, std::size_t nu, const SearchBudget& budget)
{
    ExtractionState st{std::vector<std::size_t>(g.order(), kUncolored), VertexSet::full(g.order()), 0, {}};
    st.accounting.set_size = set_size;
    st.accounting.nu_threshold = nu;
    while (st.uncolored.size() >= nu) {
        auto found = find_independent_set_of_size(g, st.uncolored, set_size, budget);
        if (found.status != SearchStatus::found) {
            if (found.status == SearchStatus::budget_exceeded)
                ++st.accounting.budget_exceeded;
            break;
        }
        found.set.for_each([&](Vertex v) { st.colors[v] = st.next_color; });
        st.uncolored -= found.set;
        ++st.next_color;
    }
    st.accounting.independent_set_colors = st.next_color;
    st.accounting.remaining_at_switch = st.uncolored.size();
    return st;
}

std::size_t ceil_size(double x) { return static_cast<std::size_t>(std::ceil(x)); }

} // namespace

bool extraction_regime_holds(std::size_t n, double p)
{
    if (!(p > 0.0 && p < 1.0))
        return false;
    const double np = static_cast<double>(n) * p;
    return np > 1.0 && log_b_np(n, p) > 1.0;
}

std::size_t extraction_set_size(std::size_t n, double p)
{
    require_regime(n, p);
    const double L = log_b_np(n, p);
    const double s = 2.0 * L - 4.0 * std::log(L) / ln_b(p);
    return s < 1.0 ? 1 : static_cast<std::size_t>(std::floor(s));
}

double constant_class_threshold(std::size_t n, std::size_t chi_host, double epsilon)
{
    const double beta = static_cast<double>(n) / static_cast<double>(chi_host);
    return std::pow(beta, 1.0 / std::sqrt(1.0 + epsilon / 2.0));
}

double small_class_threshold(std::size_t n, std::size_t chi_host)
{
    const double beta = static_cast<double>(n) / static_cast<double>(chi_host);
    return beta / std::log(static_cast<double>(n));
}

Coloring greedy_color(const Graph& g, Seed seed)
{
    std::vector<std::size_t> colors(g.order(), 0);
    auto uncolored = VertexSet::full(g.order());
    for (std::size_t round = 0; !uncolored.empty(); ++round) {
        const auto chosen = greedy_maximal_independent_set(g, uncolored, seed.derive(round));
        chosen.for_each([&](Vertex v) { colors[v] = round; });
        uncolored -= chosen;
    }
    return Coloring(std::move(colors));
}

ColoringResult bollobas_constant(const Graph& g, const AlgoParams& params)
{
    validate(params, false);
    const auto n = g.order();
    if (n == 0)
        return {};
    require_regime(n, params.p);
    const double L = log_b_np(n, params.p);
    auto st = extract_sets(g, extraction_set_size(n, params.p), ceil_size(static_cast<double>(n) / (L * L)),
                           params.is_budget);
    st.uncolored.for_each([&](Vertex v) { st.colors[v] = st.next_color++; });
    st.accounting.fallback_colors = st.accounting.remaining_at_switch;
    return {Coloring(std::move(st.colors)), std::move(st.accounting), std::move(st.uncolored)};
}

ColoringResult bollobas_small(const Graph& g, const AlgoParams& params)
{
    validate(params, true);
    const auto n = g.order();
    if (n == 0)
        return {};
    require_regime(n, params.p);
    const double ln_np = std::log(static_cast<double>(n) * params.p);
    auto st = extract_sets(g, extraction_set_size(n, params.p), ceil_size(static_cast<double>(n) / ln_np),
                           params.is_budget);
    if (!st.uncolored.empty()) {
        const auto rest = induced_subgraph(g, st.uncolored);
        const auto greedy = greedy_color(rest.graph, params.seed);
        for (Vertex i = 0; i < rest.original.size(); ++i)
            st.colors[rest.original[i]] = st.next_color + greedy.color(i);
        st.accounting.fallback_colors = greedy.num_colors();
    }
    return {Coloring(std::move(st.colors)), std::move(st.accounting), std::move(st.uncolored)};
}

namespace {

enum class Regime { constant, small };

ColoringResult color_by_host_classes(const HostSpec& host, const Graph& g, const AlgoParams& params, Regime regime)
{
    validate(params, regime == Regime::small);
    if (host.order() != g.order())
        throw InputError("host has " + std::to_string(host.order()) + " vertices, graph has "
                         + std::to_string(g.order()));
    const auto n = g.order();
    const auto hc = host_coloring(host);
    const auto classes = hc.classes();
    const double threshold = regime == Regime::constant
                                 ? constant_class_threshold(n, hc.num_colors(), params.epsilon)
                                 : small_class_threshold(n, hc.num_colors());

    std::vector<std::size_t> colors(n, kUncolored);
    std::size_t next_color = 0;
    ColoringResult out;
    out.fallback_vertices = VertexSet(n);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& members = classes[i];
        const auto size = members.size();
        const auto sub = induced_subgraph(g, members);
        AlgoParams class_params = params;
        class_params.seed = params.seed.derive(i);

        const bool large = static_cast<double>(size) >= threshold && extraction_regime_holds(size, params.p);
        Coloring local;
        if (large) {
            auto r = regime == Regime::constant ? bollobas_constant(sub.graph, class_params)
                                                : bollobas_small(sub.graph, class_params);
            out.accounting += r.accounting;
            r.fallback_vertices.for_each([&](Vertex v) { out.fallback_vertices.insert(sub.original[v]); });
            local = std::move(r.coloring);
        } else if (regime == Regime::small) {
            local = greedy_color(sub.graph, class_params.seed);
            out.accounting.fallback_colors += local.num_colors();
            out.fallback_vertices |= members;
        } else {
            std::vector<std::size_t> own(size);
            for (std::size_t v = 0; v < size; ++v)
                own[v] = v;
            local = Coloring(std::move(own));
            out.accounting.fallback_colors += size;
            out.fallback_vertices |= members;
        }
        for (Vertex v = 0; v < size; ++v)
            colors[sub.original[v]] = next_color + local.color(v);
        next_color += local.num_colors();
        out.accounting.classes.push_back({size, large, local.num_colors()});
    }
    out.coloring = Coloring(std::move(colors));
    return out;
}

} // namespace

ColoringResult augmented_color_constant(const HostSpec& host, const Graph& g, const AlgoParams& params)
{
    return color_by_host_classes(host, g, params, Regime::constant);
}

ColoringResult augmented_color_small(const HostSpec& host, const Graph& g, const AlgoParams& params)
{
    return color_by_host_classes(host, g, params, Regime::small);
}

namespace {

class ExactColorer {
public:
    explicit ExactColorer(const Graph& g) : n_(g.order()), adj_(g.order()), degree_(g.order())
    {
        for (Vertex v = 0; v < n_; ++v) {
            adj_[v] = g.neighbors(v).members();
            degree_[v] = adj_[v].size();
        }
    }

    std::size_t clique_lower_bound(const Graph& g) const
    {
        std::size_t best = n_ > 0 ? 1 : 0;
        for (Vertex v = 0; v < n_; ++v) {
            auto cand = adj_[v];
            std::sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) { return degree_[a] > degree_[b]; });
            std::vector<Vertex> clique{v};
            for (Vertex u : cand) {
                bool joins = true;
                for (Vertex w : clique)
                    joins = joins && g.adjacent(u, w);
                if (joins)
                    clique.push_back(u);
            }
            best = std::max(best, clique.size());
        }
        return best;
    }

    // Greedy DSATUR; an upper bound with a witness.
    std::vector<std::size_t> dsatur() 
    {
        reset(n_);
        for (std::size_t step = 0; step < n_; ++step) {
            const Vertex v = pick();
            std::size_t c = 0;
            while (forbidden_[v][c] > 0)
                ++c;
            assign(v, c);
        }
        return color_;
    }

    bool colorable(std::size_t k, std::vector<std::size_t>& witness)
    {
        reset(k);
        if (search(0, 0, k)) {
            witness = color_;
            return true;
        }
        return false;
    }

private:
    void reset(std::size_t palette)
    {
        color_.assign(n_, kUncolored);
        saturation_.assign(n_, 0);
        forbidden_.assign(n_, std::vector<std::size_t>(palette + 1, 0));
    }

    Vertex pick() const
    {
        Vertex best = 0;
        bool have = false;
        for (Vertex v = 0; v < n_; ++v) {
            if (color_[v] != kUncolored)
                continue;
            if (!have || saturation_[v] > saturation_[best]
                || (saturation_[v] == saturation_[best] && degree_[v] > degree_[best])) {
                best = v;
                have = true;
            }
        }
        return best;
    }

    void assign(Vertex v, std::size_t c)
    {
        color_[v] = c;
        for (Vertex u : adj_[v])
            if (forbidden_[u][c]++ == 0)
                ++saturation_[u];
    }

    void unassign(Vertex v)
    {
        const auto c = color_[v];
        color_[v] = kUncolored;
        for (Vertex u : adj_[v])
            if (--forbidden_[u][c] == 0)
                --saturation_[u];
    }

    bool search(std::size_t colored, std::size_t used, std::size_t k)
    {
        if (colored == n_)
            return true;
        const Vertex v = pick();
        if (saturation_[v] >= k)
            return false;
        const auto limit = std::min(used + 1, k);
        for (std::size_t c = 0; c < limit; ++c) {
            if (forbidden_[v][c] > 0)
                continue;
            assign(v, c);
            if (search(colored + 1, std::max(used, c + 1), k))
                return true;
            unassign(v);
        }
        return false;
    }

    std::size_t n_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::size_t> degree_;
    std::vector<std::size_t> color_;
    std::vector<std::size_t> saturation_;
    std::vector<std::vector<std::size_t>> forbidden_;
};

} // namespace

ExactResult exact_chromatic(const Graph& g, std::size_t cap)
{
    if (g.order() > cap)
        throw SizeError("exact chromatic number limited to n <= " + std::to_string(cap) + ", got n = "
                        + std::to_string(g.order()));
    if (g.order() == 0)
        return {0, Coloring{}};
    ExactColorer colorer(g);
    auto best = colorer.dsatur();
    const auto upper = *std::max_element(best.begin(), best.end()) + 1;
    for (auto k = colorer.clique_lower_bound(g); k < upper; ++k) {
        std::vector<std::size_t> witness;
        if (colorer.colorable(k, witness))
            return {k, Coloring(std::move(witness))};
    }
    return {upper, Coloring(std::move(best))};
}

std::string_view algorithm_name(Algorithm a)
{
    switch (a) {
    case Algorithm::greedy: return "greedy";
    case Algorithm::bollobas_constant: return "bollobas-const";
    case Algorithm::bollobas_small: return "bollobas-small";
    case Algorithm::augmented_constant: return "aug-const";
    case Algorithm::augmented_small: return "aug-small";
    case Algorithm::exact: return "exact";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name)
{
    for (auto a : {Algorithm::greedy, Algorithm::bollobas_constant, Algorithm::bollobas_small,
                   Algorithm::augmented_constant, Algorithm::augmented_small, Algorithm::exact})
        if (algorithm_name(a) == name)
            return a;
    return std::nullopt;
}

bool needs_host(Algorithm a)
{
    return a == Algorithm::augmented_constant || a == Algorithm::augmented_small;
}

ColoringResult run_algorithm(Algorithm a, const Graph& g, const HostSpec* host, const AlgoParams& params,
                             std::size_t exact_cap)
{
    if (needs_host(a) && host == nullptr)
        throw InputError(std::string(algorithm_name(a)) + " needs a host spec");
    switch (a) {
    case Algorithm::greedy: {
        ColoringResult r{greedy_color(g, params.seed), {}, VertexSet(g.order())};
        r.accounting.independent_set_colors = r.coloring.num_colors();
        return r;
    }
    case Algorithm::bollobas_constant: return bollobas_constant(g, params);
    case Algorithm::bollobas_small: return bollobas_small(g, params);
    case Algorithm::augmented_constant: return augmented_color_constant(*host, g, params);
    case Algorithm::augmented_small: return augmented_color_small(*host, g, params);
    case Algorithm::exact: {
        auto e = exact_chromatic(g, exact_cap);
        ColoringResult r{std::move(e.witness), {}, VertexSet(g.order())};
        r.accounting.independent_set_colors = e.chromatic_number;
        return r;
    }
    }
    throw InputError("unknown algorithm");
}

} // namespace augcolor
