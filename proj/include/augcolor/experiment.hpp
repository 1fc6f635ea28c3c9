#pragma once

#include "augcolor/bounds.hpp"
#include "augcolor/coloring.hpp"
#include "augcolor/host.hpp"

#include <nlohmann/json_fwd.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace augcolor::experiment {

/// Edge probability, either constant or n^(-exponent).
struct ProbabilitySpec {
    double constant = 0.5;
    std::optional<double> exponent;

    double at(std::size_t n) const;
    std::string describe() const;
    // "0.5" or "n^-0.25"
    static ProbabilitySpec parse(const std::string& text);
};

/// Host graph as a function of n.
struct HostFamily {
    enum class Kind { empty, complete, parts, part_size, fixed };
    Kind kind = Kind::empty;
    std::size_t count = 0;         // number of parts, or part size
    std::optional<HostSpec> fixed; // Kind::fixed only

    HostSpec at(std::size_t n) const;
    std::string describe() const;
    // "empty", "complete", "parts:K" (balanced K-partite), "part-size:S",
    // or any host spec accepted by parse_host_spec (fixed n).
    static HostFamily parse(const std::string& text);
};

struct ExperimentConfig {
    HostFamily host;
    std::vector<std::size_t> n_grid;
    ProbabilitySpec p;
    std::vector<Algorithm> algorithms{Algorithm::bollobas_constant};
    std::size_t trials = 1;
    double epsilon = 0.1;
    double theta = 0.25;
    Seed seed{};
    std::filesystem::path out_dir = "results";
    std::size_t threads = 1;
    SearchBudget is_budget{};
    bool timing = false;        // off keeps trials.csv byte-identical across runs
    bool compute_alpha = false; // exact alpha of each augmented graph, n <= 40

    // Throws InputError: trials >= 1, n_grid nonempty and strictly increasing.
    void validate() const;
};

ExperimentConfig config_from_json(const nlohmann::json& j);

struct TrialRecord {
    std::size_t n = 0;
    double p = 0;
    Algorithm algorithm = Algorithm::greedy;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::size_t colors = 0;
    std::size_t phase1_colors = 0;
    std::size_t phase2_colors = 0;
    std::size_t nu = 0; // vertices remaining at the phase switch
    double runtime_ms = 0;
    bool is_proper = true;
    bool budget_exceeded = false;
    std::optional<std::size_t> alpha;
    std::string_view rng = kRngName;
};

struct SummaryRow {
    std::size_t n = 0;
    Algorithm algorithm = Algorithm::greedy;
    double p = 0;
    std::size_t trials = 0;
    double mean_colors = 0;
    double std_colors = 0;
    std::string bound_name; // which formula ratio_to_bound divides by
    std::optional<double> bound;
    std::optional<double> ratio_to_bound; // mean of colors / bound over trials
    double budget_flag_rate = 0;
    std::size_t chi_host = 1;
    bounds::BoundReport bounds;
};

struct CampaignResult {
    std::vector<TrialRecord> records; // sorted by (n, trial, algorithm order)
    std::vector<SummaryRow> summary;  // sorted by (n, algorithm order)
};

class CampaignAbort : public std::runtime_error {
public:
    CampaignAbort(const std::string& what, std::uint64_t seed) : std::runtime_error(what), seed_(seed) {}
    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

// Trial seed = seed.derive(n).derive(trial); the algorithm's own stream is
// derived from the trial seed. Throws CampaignAbort on an improper coloring.
CampaignResult run_campaign(const ExperimentConfig& config);

// Name of the bound that ratio_to_bound uses for an algorithm, and its value.
std::string_view bound_name_for(Algorithm a);
std::optional<double> bound_for(Algorithm a, std::size_t n, double p, std::size_t chi_host);

// n,p,alg,seed,colors,phase1_colors,phase2_colors,nu,runtime_ms,budget_exceeded,alpha
void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records);
nlohmann::json summary_json(const CampaignResult& result, const ExperimentConfig& config);
// Writes <out_dir>/trials.csv and <out_dir>/summary.json.
void write_campaign(const CampaignResult& result, const ExperimentConfig& config);

struct TailRow {
    double t = 0;
    double empirical_fraction = 0; // fraction of trials with |colors - mean| >= t
    double tail_raw = 0;
    double tail_probability = 0;
    double slack = 0; // 3 binomial standard deviations at tail_probability
    bool pass = true;
};

struct ConcentrationReport {
    std::size_t n = 0;
    double p = 0;
    Algorithm algorithm = Algorithm::bollobas_constant;
    std::size_t trials = 0;
    std::vector<std::size_t> colors;
    double mean = 0;
    double std_dev = 0; // sample standard deviation
    double sqrt_n = 0;
    std::vector<TailRow> tails;
    bool pass = true; // std <= sqrt(n) and every tail row passes
};

// trials >= 100. t_grid defaults to a mix of absolute and sqrt(n)-scaled values.
ConcentrationReport concentration_experiment(std::size_t n, double p, std::size_t trials, Seed seed,
                                             Algorithm algorithm = Algorithm::bollobas_constant,
                                             std::vector<double> t_grid = {});

struct ClassCheck {
    std::size_t size = 0;
    double pairs = 0;
    double expected = 0;
    double mean = 0;
    double sigma = 0; // standard error of the mean
    double z = 0;
    bool pass = true; // |mean - expected| <= 4 sigma
};

struct DistributionReport {
    double p = 0;
    std::size_t trials = 0;
    std::vector<ClassCheck> classes;
    bool pass = true;
};

// Edge counts of the augmented graph inside each host color class.
DistributionReport class_distribution_check(const HostSpec& host, double p, std::size_t trials, Seed seed);

struct LowerBoundReport {
    std::size_t n = 0;
    double p = 0;
    std::size_t chi_host = 0;
    std::size_t k = 0;
    BigInt n_hk = 0;
    double markov_bound = 0;
    double slack = 0; // 3 sqrt(bound (1 - bound) / trials) when bound < 1, else 0
    std::size_t alpha_host = 0;
    std::size_t trials = 0;
    std::size_t hits = 0; // trials with alpha(augmented) >= k
    double empirical_frequency = 0;
    std::size_t monotonicity_violations = 0; // alpha(augmented) > alpha(host)
    std::vector<std::size_t> alphas;
    std::vector<double> chi_floors;            // n / alpha per trial
    std::vector<std::size_t> exact_chromatic;  // filled when n <= exact_cap
    std::size_t chi_floor_violations = 0;      // chi_exact < n / alpha
    bool pass = true;
};

// Host n <= 40 (exact alpha). Exact chromatic numbers are computed when
// n <= exact_cap.
LowerBoundReport lower_bound_experiment(const HostSpec& host, double p, std::size_t trials, Seed seed,
                                        std::size_t exact_cap = 12);

void to_json(nlohmann::json& j, const ConcentrationReport& r);
void to_json(nlohmann::json& j, const DistributionReport& r);
void to_json(nlohmann::json& j, const LowerBoundReport& r);

} // namespace augcolor::experiment
