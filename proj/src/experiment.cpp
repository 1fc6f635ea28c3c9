#include "augcolor/experiment.hpp"

#include "augcolor/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <numeric>
#include <ostream>
#include <thread>

namespace augcolor::experiment {

namespace {

std::string shortest(double x)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::size_t parse_count(const std::string& text, const std::string& what)
{
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used == text.size() && v > 0)
            return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw InputError("bad " + what + " '" + text + "'");
}

std::vector<std::size_t> balanced_parts(std::size_t n, std::size_t k)
{
    std::vector<std::size_t> parts(k, n / k);
    for (std::size_t i = 0; i < n % k; ++i)
        ++parts[i];
    return parts;
}

// Runs job(i) for i in [0, count) on up to `threads` workers. The first
// exception by job index is rethrown, so failures are deterministic too.
template <typename Job> void parallel_for(std::size_t count, std::size_t threads, Job job)
{
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                job(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

double mean_of(const std::vector<double>& xs)
{
    return xs.empty() ? 0.0 : std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_std(const std::vector<double>& xs)
{
    if (xs.size() < 2)
        return 0.0;
    const double m = mean_of(xs);
    double ss = 0;
    for (double x : xs)
        ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

std::size_t edges_inside(const Graph& g, const VertexSet& s)
{
    std::size_t twice = 0;
    s.for_each([&](Vertex v) { twice += g.neighbors(v).intersection_size(s); });
    return twice / 2;
}

} // namespace

double ProbabilitySpec::at(std::size_t n) const
{
    return exponent ? std::pow(static_cast<double>(n), -*exponent) : constant;
}

std::string ProbabilitySpec::describe() const
{
    return exponent ? "n^-" + shortest(*exponent) : shortest(constant);
}

ProbabilitySpec ProbabilitySpec::parse(const std::string& text)
{
    ProbabilitySpec spec;
    try {
        std::size_t used = 0;
        if (text.rfind("n^-", 0) == 0) {
            spec.exponent = std::stod(text.substr(3), &used);
            if (used != text.size() - 3 || !(*spec.exponent > 0.0))
                throw InputError("");
        } else {
            spec.constant = std::stod(text, &used);
            if (used != text.size() || !(spec.constant >= 0.0 && spec.constant <= 1.0))
                throw InputError("");
        }
    } catch (const std::exception&) {
        throw InputError("bad probability '" + text + "' (expected a number in [0,1] or n^-theta)");
    }
    return spec;
}

HostSpec HostFamily::at(std::size_t n) const
{
    switch (kind) {
    case Kind::empty: return HostSpec::multipartite({n});
    case Kind::complete: return HostSpec::multipartite(std::vector<std::size_t>(n, 1));
    case Kind::parts:
        if (count > n)
            throw InputError("cannot split " + std::to_string(n) + " vertices into " + std::to_string(count) + " parts");
        return HostSpec::multipartite(balanced_parts(n, count));
    case Kind::part_size: {
        std::vector<std::size_t> parts(n / count, count);
        if (n % count != 0)
            parts.push_back(n % count);
        return HostSpec::multipartite(std::move(parts));
    }
    case Kind::fixed:
        if (fixed->order() != n)
            throw InputError("fixed host has " + std::to_string(fixed->order()) + " vertices, grid asks for "
                             + std::to_string(n));
        return *fixed;
    }
    throw InputError("unknown host family");
}

std::string HostFamily::describe() const
{
    switch (kind) {
    case Kind::empty: return "empty";
    case Kind::complete: return "complete";
    case Kind::parts: return "parts:" + std::to_string(count);
    case Kind::part_size: return "part-size:" + std::to_string(count);
    case Kind::fixed: return fixed->describe();
    }
    return "?";
}

HostFamily HostFamily::parse(const std::string& text)
{
    HostFamily f;
    if (text == "empty") {
        f.kind = Kind::empty;
    } else if (text == "complete") {
        f.kind = Kind::complete;
    } else if (text.rfind("parts:", 0) == 0) {
        f.kind = Kind::parts;
        f.count = parse_count(text.substr(6), "part count");
    } else if (text.rfind("part-size:", 0) == 0) {
        f.kind = Kind::part_size;
        f.count = parse_count(text.substr(10), "part size");
    } else {
        f.kind = Kind::fixed;
        f.fixed = parse_host_spec(text);
    }
    return f;
}

void ExperimentConfig::validate() const
{
    if (trials < 1)
        throw InputError("trials must be at least 1");
    if (n_grid.empty())
        throw InputError("n_grid is empty");
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        if (n_grid[i] < 1)
            throw InputError("n_grid entries must be positive");
        if (i > 0 && n_grid[i] <= n_grid[i - 1])
            throw InputError("n_grid must be strictly increasing");
    }
    if (algorithms.empty())
        throw InputError("no algorithms selected");
    if (!(epsilon > 0.0))
        throw InputError("epsilon must be positive");
}

ExperimentConfig config_from_json(const nlohmann::json& j)
{
    ExperimentConfig c;
    try {
        if (j.contains("host"))
            c.host = HostFamily::parse(j.at("host").get<std::string>());
        if (j.contains("n_grid"))
            c.n_grid = j.at("n_grid").get<std::vector<std::size_t>>();
        if (j.contains("p")) {
            const auto& p = j.at("p");
            c.p = p.is_string() ? ProbabilitySpec::parse(p.get<std::string>())
                                : ProbabilitySpec::parse(shortest(p.get<double>()));
        }
        std::vector<std::string> names;
        if (j.contains("algorithms"))
            names = j.at("algorithms").get<std::vector<std::string>>();
        else if (j.contains("algorithm"))
            names = {j.at("algorithm").get<std::string>()};
        if (!names.empty()) {
            c.algorithms.clear();
            for (const auto& name : names) {
                auto a = parse_algorithm(name);
                if (!a)
                    throw InputError("unknown algorithm '" + name + "'");
                c.algorithms.push_back(*a);
            }
        }
        c.trials = j.value("trials", c.trials);
        c.epsilon = j.value("epsilon", c.epsilon);
        c.theta = j.value("theta", c.theta);
        c.seed = Seed{j.value("seed", c.seed.value)};
        c.out_dir = j.value("out_dir", c.out_dir.string());
        c.threads = j.value("threads", c.threads);
        c.is_budget.node_limit = j.value("is_node_limit", c.is_budget.node_limit);
        c.timing = j.value("timing", c.timing);
        c.compute_alpha = j.value("compute_alpha", c.compute_alpha);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("experiment config: ") + e.what());
    }
    return c;
}

std::string_view bound_name_for(Algorithm a)
{
    switch (a) {
    case Algorithm::greedy: return "greedy_bound";
    case Algorithm::bollobas_small:
    case Algorithm::augmented_small: return "small_p_bound";
    default: return "augmented_bound";
    }
}

std::optional<double> bound_for(Algorithm a, std::size_t n, double p, std::size_t chi_host)
{
    try {
        switch (a) {
        case Algorithm::greedy: return bounds::greedy_bound(n, p);
        case Algorithm::bollobas_small:
        case Algorithm::augmented_small: return bounds::small_p_bound(n, p, chi_host);
        default: return bounds::augmented_bound(n, p, chi_host);
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

CampaignResult run_campaign(const ExperimentConfig& config)
{
    config.validate();
    struct Cell {
        std::size_t n;
        double p;
        HostSpec host;
        std::size_t chi_host;
    };
    std::vector<Cell> cells;
    for (auto n : config.n_grid) {
        auto host = config.host.at(n);
        const auto chi = host_coloring(host).num_colors();
        cells.push_back({n, config.p.at(n), std::move(host), chi});
    }

    const auto per_cell = config.trials;
    const auto jobs = cells.size() * per_cell;
    std::vector<std::vector<TrialRecord>> results(jobs);

    parallel_for(jobs, config.threads, [&](std::size_t job) {
        const auto& cell = cells[job / per_cell];
        const std::size_t trial = job % per_cell;
        const Seed trial_seed = config.seed.derive(cell.n).derive(trial);
        const Graph g = augment(cell.host.graph(), cell.p, trial_seed);

        std::optional<std::size_t> alpha;
        if (config.compute_alpha && cell.n <= kMaxIndependentSetCap)
            alpha = maximum_independent_set(g).size();

        for (auto algorithm : config.algorithms) {
            AlgoParams params{cell.p, config.epsilon, config.theta,
                              trial_seed.derive(0x100 + static_cast<std::uint64_t>(algorithm)), config.is_budget};
            const auto start = std::chrono::steady_clock::now();
            auto r = run_algorithm(algorithm, g, &cell.host, params);
            const auto stop = std::chrono::steady_clock::now();

            TrialRecord rec;
            rec.n = cell.n;
            rec.p = cell.p;
            rec.algorithm = algorithm;
            rec.trial = trial;
            rec.seed = trial_seed.value;
            rec.colors = r.coloring.num_colors();
            rec.phase1_colors = r.accounting.independent_set_colors;
            rec.phase2_colors = r.accounting.fallback_colors;
            rec.nu = r.accounting.remaining_at_switch;
            rec.budget_exceeded = r.accounting.budget_exceeded > 0;
            rec.alpha = alpha;
            if (config.timing)
                rec.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
            if (auto bad = first_conflict(g, r.coloring)) {
                throw CampaignAbort(std::string(algorithm_name(algorithm)) + " produced an improper coloring at n = "
                                        + std::to_string(cell.n) + ", trial " + std::to_string(trial) + ", seed "
                                        + std::to_string(trial_seed.value) + ": edge {"
                                        + std::to_string(bad->first + 1) + "," + std::to_string(bad->second + 1) + "}",
                                    trial_seed.value);
            }
            results[job].push_back(rec);
        }
    });

    CampaignResult out;
    for (auto& batch : results)
        for (auto& rec : batch)
            out.records.push_back(std::move(rec));

    for (const auto& cell : cells) {
        for (auto algorithm : config.algorithms) {
            SummaryRow row;
            row.n = cell.n;
            row.algorithm = algorithm;
            row.p = cell.p;
            row.chi_host = cell.chi_host;
            row.bound_name = bound_name_for(algorithm);
            row.bound = bound_for(algorithm, cell.n, cell.p, cell.chi_host);
            std::vector<double> colors, ratios;
            std::size_t flagged = 0;
            for (const auto& rec : out.records) {
                if (rec.n != cell.n || rec.algorithm != algorithm)
                    continue;
                colors.push_back(static_cast<double>(rec.colors));
                if (row.bound)
                    ratios.push_back(static_cast<double>(rec.colors) / *row.bound);
                flagged += rec.budget_exceeded ? 1 : 0;
            }
            row.trials = colors.size();
            row.mean_colors = mean_of(colors);
            row.std_colors = sample_std(colors);
            if (row.bound)
                row.ratio_to_bound = mean_of(ratios);
            row.budget_flag_rate = static_cast<double>(flagged) / static_cast<double>(row.trials);
            if (cell.p > 0.0 && cell.p < 1.0)
                row.bounds = bounds::bound_report(cell.n, cell.p, cell.chi_host);
            out.summary.push_back(std::move(row));
        }
    }
    return out;
}

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records)
{
    out << "n,p,alg,seed,colors,phase1_colors,phase2_colors,nu,runtime_ms,budget_exceeded,alpha\n";
    for (const auto& r : records) {
        out << r.n << ',' << shortest(r.p) << ',' << algorithm_name(r.algorithm) << ',' << r.seed << ','
            << r.colors << ',' << r.phase1_colors << ',' << r.phase2_colors << ',' << r.nu << ','
            << shortest(r.runtime_ms) << ',' << (r.budget_exceeded ? 1 : 0) << ',';
        if (r.alpha)
            out << *r.alpha;
        out << '\n';
    }
}

nlohmann::json summary_json(const CampaignResult& result, const ExperimentConfig& config)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : result.summary) {
        nlohmann::json bounds_json = s.bounds;
        rows.push_back({
            {"n", s.n},
            {"alg", algorithm_name(s.algorithm)},
            {"p", s.p},
            {"trials", s.trials},
            {"chi_h", s.chi_host},
            {"mean", s.mean_colors},
            {"std", s.std_colors},
            {"bound_name", s.bound_name},
            {"bound", s.bound ? nlohmann::json(*s.bound) : nlohmann::json(nullptr)},
            {"ratio_to_bound", s.ratio_to_bound ? nlohmann::json(*s.ratio_to_bound) : nlohmann::json(nullptr)},
            {"budget_flag_rate", s.budget_flag_rate},
            {"bounds", bounds_json},
        });
    }
    return {
        {"version", std::string(kVersion)},
        {"rng", std::string(kRngName)},
        {"seed", config.seed.value},
        {"host", config.host.describe()},
        {"p", config.p.describe()},
        {"trials", config.trials},
        {"epsilon", config.epsilon},
        {"summary", rows},
    };
}

void write_campaign(const CampaignResult& result, const ExperimentConfig& config)
{
    std::filesystem::create_directories(config.out_dir);
    std::ofstream csv(config.out_dir / "trials.csv");
    std::ofstream json(config.out_dir / "summary.json");
    if (!csv || !json)
        throw InputError("cannot write results into " + config.out_dir.string());
    write_trials_csv(csv, result.records);
    json << summary_json(result, config).dump(2) << '\n';
}

ConcentrationReport concentration_experiment(std::size_t n, double p, std::size_t trials, Seed seed,
                                             Algorithm algorithm, std::vector<double> t_grid)
{
    if (trials < 100)
        throw InputError("concentration experiment needs at least 100 trials");
    ConcentrationReport r;
    r.n = n;
    r.p = p;
    r.algorithm = algorithm;
    r.trials = trials;
    r.sqrt_n = std::sqrt(static_cast<double>(n));
    const auto host = HostSpec::multipartite({n});
    r.colors.resize(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const Seed s = seed.derive(t);
        const Graph g = sample_gnp(n, p, s);
        AlgoParams params;
        params.p = p;
        params.seed = s.derive(1);
        auto result = run_algorithm(algorithm, g, &host, params);
        if (!is_proper_coloring(g, result.coloring))
            throw CampaignAbort("improper coloring in concentration experiment", s.value);
        r.colors[t] = result.coloring.num_colors();
    }
    std::vector<double> xs(r.colors.begin(), r.colors.end());
    r.mean = mean_of(xs);
    r.std_dev = sample_std(xs);

    if (t_grid.empty()) {
        t_grid = {1.0, 2.0, 5.0, 10.0};
        for (double f : {0.25, 0.5, 0.75, 1.0, 1.5, 2.0})
            t_grid.push_back(f * r.sqrt_n);
        std::sort(t_grid.begin(), t_grid.end());
    }
    r.pass = r.std_dev <= r.sqrt_n;
    for (double t : t_grid) {
        TailRow row;
        row.t = t;
        std::size_t hits = 0;
        for (double x : xs)
            hits += std::abs(x - r.mean) >= t ? 1 : 0;
        row.empirical_fraction = static_cast<double>(hits) / static_cast<double>(trials);
        const auto tail = bounds::mcdiarmid_tail(t, n);
        row.tail_raw = tail.raw;
        row.tail_probability = tail.probability;
        row.slack = 3.0 * std::sqrt(tail.probability * (1.0 - tail.probability) / static_cast<double>(trials));
        row.pass = row.empirical_fraction <= row.tail_probability + row.slack;
        r.pass = r.pass && row.pass;
        r.tails.push_back(row);
    }
    return r;
}

DistributionReport class_distribution_check(const HostSpec& host, double p, std::size_t trials, Seed seed)
{
    if (trials < 1)
        throw InputError("trials must be at least 1");
    const auto classes = host_coloring(host).classes();
    DistributionReport r;
    r.p = p;
    r.trials = trials;
    std::vector<double> sums(classes.size(), 0.0);
    for (std::size_t t = 0; t < trials; ++t) {
        const Graph g = augment(host.graph(), p, seed.derive(t));
        for (std::size_t c = 0; c < classes.size(); ++c)
            sums[c] += static_cast<double>(edges_inside(g, classes[c]));
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
        ClassCheck check;
        check.size = classes[c].size();
        check.pairs = static_cast<double>(check.size) * static_cast<double>(check.size - 1) / 2.0;
        check.expected = check.pairs * p;
        check.mean = sums[c] / static_cast<double>(trials);
        check.sigma = std::sqrt(check.pairs * p * (1.0 - p) / static_cast<double>(trials));
        const double diff = std::abs(check.mean - check.expected);
        check.z = check.sigma > 0.0 ? (check.mean - check.expected) / check.sigma : 0.0;
        check.pass = check.sigma > 0.0 ? diff <= 4.0 * check.sigma : diff == 0.0;
        r.pass = r.pass && check.pass;
        r.classes.push_back(check);
    }
    return r;
}

LowerBoundReport lower_bound_experiment(const HostSpec& host, double p, std::size_t trials, Seed seed,
                                        std::size_t exact_cap)
{
    const auto n = host.order();
    if (n > kMaxIndependentSetCap)
        throw SizeError("lower-bound experiment needs exact alpha, host n <= "
                        + std::to_string(kMaxIndependentSetCap));
    if (trials < 1)
        throw InputError("trials must be at least 1");
    LowerBoundReport r;
    r.n = n;
    r.p = p;
    r.trials = trials;
    r.chi_host = host_coloring(host).num_colors();
    r.k = bounds::alpha_threshold_k(n, p, r.chi_host);
    r.n_hk = count_independent_sets(host, r.k);
    r.markov_bound = bounds::markov_alpha_bound(r.n_hk, p, r.k);
    if (r.markov_bound < 1.0)
        r.slack = 3.0 * std::sqrt(r.markov_bound * (1.0 - r.markov_bound) / static_cast<double>(trials));
    r.alpha_host = maximum_independent_set(host.graph()).size();

    for (std::size_t t = 0; t < trials; ++t) {
        const Graph g = augment(host.graph(), p, seed.derive(t));
        const auto alpha = maximum_independent_set(g).size();
        r.alphas.push_back(alpha);
        r.hits += alpha >= r.k ? 1 : 0;
        r.monotonicity_violations += alpha > r.alpha_host ? 1 : 0;
        const double floor = bounds::chromatic_lower_from_alpha(static_cast<double>(n), static_cast<double>(alpha));
        r.chi_floors.push_back(floor);
        if (n <= exact_cap) {
            const auto chi = exact_chromatic(g, exact_cap).chromatic_number;
            r.exact_chromatic.push_back(chi);
            r.chi_floor_violations += static_cast<double>(chi) < floor ? 1 : 0;
        }
    }
    r.empirical_frequency = static_cast<double>(r.hits) / static_cast<double>(trials);
    const bool within = r.markov_bound >= 1.0 || r.empirical_frequency <= r.markov_bound + r.slack;
    r.pass = within && r.monotonicity_violations == 0 && r.chi_floor_violations == 0;
    return r;
}

void to_json(nlohmann::json& j, const ConcentrationReport& r)
{
    nlohmann::json tails = nlohmann::json::array();
    for (const auto& t : r.tails)
        tails.push_back({{"t", t.t},
                         {"empirical_fraction", t.empirical_fraction},
                         {"tail_raw", t.tail_raw},
                         {"tail_probability", t.tail_probability},
                         {"slack", t.slack},
                         {"pass", t.pass}});
    j = {{"n", r.n},   {"p", r.p},         {"alg", algorithm_name(r.algorithm)},
         {"trials", r.trials}, {"mean", r.mean}, {"std", r.std_dev},
         {"sqrt_n", r.sqrt_n}, {"tails", tails}, {"pass", r.pass}};
}

void to_json(nlohmann::json& j, const DistributionReport& r)
{
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : r.classes)
        classes.push_back({{"size", c.size},
                           {"pairs", c.pairs},
                           {"expected", c.expected},
                           {"mean", c.mean},
                           {"sigma", c.sigma},
                           {"z", c.z},
                           {"pass", c.pass}});
    j = {{"p", r.p}, {"trials", r.trials}, {"classes", classes}, {"pass", r.pass}};
}

void to_json(nlohmann::json& j, const LowerBoundReport& r)
{
    j = {{"n", r.n},
         {"p", r.p},
         {"chi_h", r.chi_host},
         {"k", r.k},
         {"n_hk", r.n_hk.str()},
         {"markov_bound", r.markov_bound},
         {"slack", r.slack},
         {"alpha_host", r.alpha_host},
         {"trials", r.trials},
         {"hits", r.hits},
         {"empirical_frequency", r.empirical_frequency},
         {"monotonicity_violations", r.monotonicity_violations},
         {"chi_floor_violations", r.chi_floor_violations},
         {"pass", r.pass}};
}

} // namespace augcolor::experiment
