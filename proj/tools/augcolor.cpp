// augcolor command line: gen / color / bound / experiment / oracle / verify.
//
// Exit codes: 0 success, 1 domain or verification failure, 2 usage error.
// Payloads (DIMACS, CSV, JSON) go to stdout or --out; the version/seed banner
// and log messages go to stderr.

#include "augcolor/bounds.hpp"
#include "augcolor/coloring.hpp"
#include "augcolor/errors.hpp"
#include "augcolor/experiment.hpp"
#include "augcolor/host.hpp"
#include "augcolor/io.hpp"
#include "augcolor/limits.hpp"
#include "augcolor/random_models.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

namespace fs = std::filesystem;
using namespace augcolor;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void setup_logging()
{
    auto logger = spdlog::stderr_color_mt("augcolor");
    logger->set_pattern("[%l] %v");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("LOG_LEVEL")) {
        const std::string level = env;
        if (level == "error")
            spdlog::set_level(spdlog::level::err);
        else if (level == "warn")
            spdlog::set_level(spdlog::level::warn);
        else if (level == "info")
            spdlog::set_level(spdlog::level::info);
        else if (level == "debug")
            spdlog::set_level(spdlog::level::debug);
        else
            spdlog::warn("ignoring LOG_LEVEL={} (expected error, warn, info or debug)", level);
    }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed)
{
    if (seed)
        return *seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void banner(std::optional<std::uint64_t> seed)
{
    std::cerr << "augcolor " << kVersion << " seed=";
    if (seed)
        std::cerr << *seed;
    else
        std::cerr << "none";
    std::cerr << '\n';
}

// Writes to `path`, or stdout when path is empty or "-".
template <typename F> void emit(const std::string& path, F&& write)
{
    if (path.empty() || path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path);
    write(out);
}

std::vector<std::size_t> parse_grid(const std::string& text)
{
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw UsageError("bad --n-grid entry '" + item + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

struct GenArgs {
    std::optional<std::size_t> n;
    double p = 0.5;
    std::optional<std::uint64_t> seed;
    std::string host;
    std::string out;
    bool geometric = false;
};

int run_gen(const GenArgs& a)
{
    const auto seed = resolve_seed(a.seed);
    banner(seed);
    const auto mode = a.geometric ? SamplingMode::geometric_skip : SamplingMode::canonical;
    Graph g;
    if (!a.host.empty()) {
        const auto host = parse_host_spec(a.host);
        if (a.n && *a.n != host.order())
            throw UsageError("--n " + std::to_string(*a.n) + " disagrees with host order "
                             + std::to_string(host.order()));
        g = augment(host.graph(), a.p, Seed{seed}, mode);
    } else {
        if (!a.n)
            throw UsageError("gen needs --n or --host");
        g = sample_gnp(*a.n, a.p, Seed{seed}, mode);
    }
    spdlog::info("sampled n={} m={}", g.order(), g.edge_count());
    emit(a.out, [&](std::ostream& os) { io::write_dimacs(os, g); });
    return kOk;
}

struct ColorArgs {
    std::string alg;
    std::string in;
    std::string host;
    std::optional<double> p;
    double epsilon = 0.1;
    double theta = 0.25;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::uint64_t node_limit = kDefaultNodeLimit;
    std::size_t exact_cap = kExactChromaticCap;
};

int run_color(const ColorArgs& a)
{
    const auto algorithm = parse_algorithm(a.alg);
    if (!algorithm)
        throw UsageError("unknown --alg '" + a.alg + "'");
    const auto seed = resolve_seed(a.seed);
    banner(seed);

    const Graph g = io::read_dimacs_file(a.in);
    std::optional<HostSpec> host;
    if (needs_host(*algorithm)) {
        if (a.host.empty())
            throw UsageError(a.alg + " needs --host");
        host = parse_host_spec(a.host);
    } else if (!a.host.empty()) {
        spdlog::warn("--host is ignored by {}", a.alg);
    }
    const bool uses_p = *algorithm != Algorithm::greedy && *algorithm != Algorithm::exact;
    if (uses_p && !a.p)
        throw UsageError(a.alg + " needs --p");

    AlgoParams params;
    params.p = a.p.value_or(0.5);
    params.epsilon = a.epsilon;
    params.theta = a.theta;
    params.seed = Seed{seed};
    params.is_budget.node_limit = a.node_limit;

    const auto r = run_algorithm(*algorithm, g, host ? &*host : nullptr, params, a.exact_cap);
    const auto conflict = first_conflict(g, r.coloring);

    nlohmann::json summary = {
        {"alg", a.alg},
        {"n", g.order()},
        {"m", g.edge_count()},
        {"colors", r.coloring.num_colors()},
        {"phase1_colors", r.accounting.independent_set_colors},
        {"phase2_colors", r.accounting.fallback_colors},
        {"nu", r.accounting.remaining_at_switch},
        {"set_size", r.accounting.set_size},
        {"budget_exceeded", r.accounting.budget_exceeded},
        {"proper", !conflict.has_value()},
    };
    emit(a.out, [&](std::ostream& os) { io::write_coloring_csv(os, r.coloring); });
    // Keep stdout a single payload: the summary goes to stdout only when the
    // coloring went to a file.
    if (a.out.empty() || a.out == "-")
        std::cerr << summary.dump() << '\n';
    else
        std::cout << summary.dump(2) << '\n';

    if (conflict) {
        std::cerr << "improper coloring: edge {" << conflict->first + 1 << "," << conflict->second + 1 << "}\n";
        return kFailure;
    }
    return kOk;
}

struct BoundArgs {
    std::uint64_t n = 0;
    double p = 0;
    std::uint64_t chi_h = 1;
    std::optional<std::uint64_t> k;
};

int run_bound(const BoundArgs& a)
{
    banner(std::nullopt);
    if (!(a.p > 0.0 && a.p < 1.0))
        throw DomainError("bound needs 0 < p < 1");
    if (a.n < 1 || a.chi_h < 1 || a.chi_h > a.n)
        throw DomainError("bound needs 1 <= chi-h <= n");
    nlohmann::json j = bounds::bound_report(a.n, a.p, a.chi_h, a.k);
    std::cout << j.dump(2) << '\n';
    return kOk;
}

struct ExperimentArgs {
    std::string config;
    std::string n_grid;
    std::optional<std::size_t> trials;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    std::optional<std::size_t> threads;
    bool timing = false;
};

nlohmann::json load_config(const std::string& path)
{
    const auto ext = fs::path(path).extension().string();
    if (ext == ".toml")
        throw UsageError("TOML configs are not supported; use JSON (" + path + ")");
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

int run_experiment(const ExperimentArgs& a)
{
    const auto j = load_config(a.config);
    auto config = experiment::config_from_json(j);
    if (!a.n_grid.empty())
        config.n_grid = parse_grid(a.n_grid);
    if (a.trials)
        config.trials = *a.trials;
    if (a.seed)
        config.seed = Seed{*a.seed};
    if (!a.out_dir.empty())
        config.out_dir = a.out_dir;
    if (a.threads)
        config.threads = *a.threads;
    if (a.timing)
        config.timing = true;
    banner(config.seed.value);

    const std::string kind = j.value("kind", "campaign");
    if (kind == "campaign") {
        config.validate();
        spdlog::info("campaign host={} p={} cells={} trials={}", config.host.describe(), config.p.describe(),
                     config.n_grid.size(), config.trials);
        const auto result = experiment::run_campaign(config);
        experiment::write_campaign(result, config);
        std::cout << experiment::summary_json(result, config).dump(2) << '\n';
        return kOk;
    }

    // Single-measurement experiments take the first grid point.
    config.validate();
    const auto n = config.n_grid.front();
    const double p = config.p.at(n);
    nlohmann::json report;
    bool pass = true;
    if (kind == "concentration") {
        const auto r = experiment::concentration_experiment(n, p, config.trials, config.seed,
                                                            config.algorithms.front());
        report = r;
        pass = r.pass;
    } else if (kind == "distribution") {
        const auto r = experiment::class_distribution_check(config.host.at(n), p, config.trials, config.seed);
        report = r;
        pass = r.pass;
    } else if (kind == "lower_bound") {
        const auto r = experiment::lower_bound_experiment(config.host.at(n), p, config.trials, config.seed);
        report = r;
        pass = r.pass;
    } else {
        throw InputError("unknown experiment kind '" + kind + "'");
    }
    fs::create_directories(config.out_dir);
    std::ofstream(config.out_dir / "report.json") << report.dump(2) << '\n';
    std::cout << report.dump(2) << '\n';
    return pass ? kOk : kFailure;
}

struct OracleArgs {
    std::string in;
    std::string out = "witness.csv";
    std::size_t cap = kExactChromaticCap;
};

int run_oracle(const OracleArgs& a)
{
    banner(std::nullopt);
    const Graph g = io::read_dimacs_file(a.in);
    const auto r = exact_chromatic(g, a.cap);
    std::cout << r.chromatic_number << '\n';
    if (a.out != "-")
        io::write_coloring_csv_file(a.out, r.witness);
    return kOk;
}

struct VerifyArgs {
    std::string coloring;
    std::string graph;
};

int run_verify(const VerifyArgs& a)
{
    banner(std::nullopt);
    const Graph g = io::read_dimacs_file(a.graph);
    const Coloring c = io::read_coloring_csv_file(a.coloring, g.order());
    if (const auto bad = first_conflict(g, c)) {
        std::cout << "improper: edge {" << bad->first + 1 << "," << bad->second + 1 << "} has both endpoints colored "
                  << c.color(bad->first) + 1 << '\n';
        return kFailure;
    }
    std::cout << "proper: " << c.num_colors() << " colors\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    setup_logging();

    CLI::App app{"Coloring experiments on randomly augmented graphs H ∪ G(n,p)", "augcolor"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Sample G(n,p) or H ∪ G(n,p) and write DIMACS");
    gen_cmd->add_option("--n", gen.n, "Vertex count (taken from --host when given)");
    gen_cmd->add_option("--p", gen.p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--seed", gen.seed, "Master seed (random when omitted)");
    gen_cmd->add_option("--host", gen.host, "Host spec: multipartite:a,b,..|dimacs:path|explicit:g.col+c.csv");
    gen_cmd->add_option("--out", gen.out, "Output DIMACS path (stdout by default)");
    gen_cmd->add_flag("--geometric", gen.geometric, "Geometric skip sampling for p < 0.1");

    ColorArgs color;
    auto* color_cmd = app.add_subcommand("color", "Color a DIMACS graph; exit 0 iff the result is proper");
    color_cmd->add_option("--alg", color.alg, "greedy|bollobas-const|bollobas-small|aug-const|aug-small|exact")
        ->required();
    color_cmd->add_option("--in", color.in, "Input DIMACS graph")->required();
    color_cmd->add_option("--host", color.host, "Host spec (aug-const, aug-small)");
    color_cmd->add_option("--p", color.p, "Edge probability of the random part")->check(CLI::Range(0.0, 1.0));
    color_cmd->add_option("--epsilon", color.epsilon, "Slack epsilon > 0")->capture_default_str();
    color_cmd->add_option("--theta", color.theta, "Small-p exponent theta in (0, 1/3)")->capture_default_str();
    color_cmd->add_option("--seed", color.seed, "Seed (random when omitted)");
    color_cmd->add_option("--out", color.out, "Output coloring CSV (stdout by default)");
    color_cmd->add_option("--is-node-limit", color.node_limit, "Node budget per independent-set search")
        ->capture_default_str();
    color_cmd->add_option("--exact-cap", color.exact_cap, "Size cap for --alg exact")->capture_default_str();

    BoundArgs bound;
    auto* bound_cmd = app.add_subcommand("bound", "Print every closed-form bound as JSON");
    bound_cmd->add_option("--n", bound.n, "Vertex count")->required();
    bound_cmd->add_option("--p", bound.p, "Edge probability")->required();
    bound_cmd->add_option("--chi-h", bound.chi_h, "Chromatic number of the host")->capture_default_str();
    bound_cmd->add_option("--k", bound.k, "Independent-set size for the Markov bound");

    ExperimentArgs exp;
    auto* exp_cmd = app.add_subcommand("experiment", "Run a seeded campaign from a JSON config");
    exp_cmd->add_option("--config", exp.config, "JSON config path")->required();
    exp_cmd->add_option("--n-grid", exp.n_grid, "Override n grid, e.g. 500,1000,2000");
    exp_cmd->add_option("--trials", exp.trials, "Override trials per cell");
    exp_cmd->add_option("--seed", exp.seed, "Override master seed");
    exp_cmd->add_option("--out-dir", exp.out_dir, "Override output directory");
    exp_cmd->add_option("--threads", exp.threads, "Worker threads");
    exp_cmd->add_flag("--timing", exp.timing, "Record runtime_ms (makes trials.csv run-dependent)");

    OracleArgs orc;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact chromatic number and a witness coloring");
    oracle_cmd->add_option("--in,graph", orc.in, "Input DIMACS graph")->required();
    oracle_cmd->add_option("--out", orc.out, "Witness CSV path ('-' to skip)")->capture_default_str();
    oracle_cmd->add_option("--cap", orc.cap, "Size cap")->capture_default_str();

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "Check a coloring CSV against a DIMACS graph");
    verify_cmd->add_option("--coloring,coloring", ver.coloring, "Coloring CSV")->required();
    verify_cmd->add_option("--graph,graph", ver.graph, "DIMACS graph")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen_cmd)
            return run_gen(gen);
        if (*color_cmd)
            return run_color(color);
        if (*bound_cmd)
            return run_bound(bound);
        if (*exp_cmd)
            return run_experiment(exp);
        if (*oracle_cmd)
            return run_oracle(orc);
        if (*verify_cmd)
            return run_verify(ver);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const experiment::CampaignAbort& e) {
        std::cerr << "campaign aborted (seed " << e.seed() << "): " << e.what() << '\n';
        return kFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}
