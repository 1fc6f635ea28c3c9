#pragma once

#include "augcolor/host.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <optional>

namespace augcolor::bounds {

// All logarithms are natural; log_b(x) = ln x / ln b with b = 1 / (1 - p).
double b_of(double p);
double ln_b(double p);
double log_b(double x, double p);

// ln C(n, k) through lgamma; 0 <= k <= n.
double ln_binomial(std::uint64_t n, std::uint64_t k);

// ln C(n,k) + C(k,2) ln(1-p) - 4 ln n; positive iff k qualifies for k0.
double k0_margin(std::uint64_t n, double p, std::uint64_t k);

// Largest k with C(n,k)(1-p)^C(k,2) > n^4, or nullopt. 0 < p < 1.
std::optional<std::uint64_t> k0(std::uint64_t n, double p);

struct Sandwich {
    double lower = 0;
    double upper = 0;
};

// [2 log_b(np) - 4 log_b(ln(np)), 2 log_b(np)]. RegimeError when np <= 1.
Sandwich k0_sandwich(std::uint64_t n, double p);

// 2 log_b(np) - 4 log_b(log_b(np)), the real-valued set size of the
// extraction loops (note the inner log_b, unlike the sandwich).
double extraction_size_formula(std::uint64_t n, double p);

// n ln b / (2 (ln n - ln chi_H)). DomainError unless 1 <= chi_H < n.
double augmented_bound(std::uint64_t n, double p, std::uint64_t chi_host);

// n p / (2 (ln(np) - ln chi_H)); the second form uses n ln b in place of n p.
// DomainError when np <= chi_H.
double small_p_bound(std::uint64_t n, double p, std::uint64_t chi_host);
double small_p_bound_log_b(std::uint64_t n, double p, std::uint64_t chi_host);

// n ln b / ln(np). RegimeError when np <= 1.
double greedy_bound(std::uint64_t n, double p);

// ceil(2 (ln n - ln chi_H) / ln b).
std::uint64_t alpha_threshold_k(std::uint64_t n, double p, std::uint64_t chi_host);

// min(1, n_Hk (1-p)^C(k,2)).
double markov_alpha_bound(const BigInt& n_hk, double p, std::uint64_t k);

struct Tail {
    double raw = 0;         // 2 exp(-2 t^2 / n), in (0, 2]
    double probability = 0; // min(1, raw)
};
Tail mcdiarmid_tail(double t, std::uint64_t n);

// n / alpha. DomainError when alpha < 1.
double chromatic_lower_from_alpha(double n, double alpha);

/// Every closed-form quantity for one (n, p, chi_H). Fields whose formula is
/// undefined for the inputs are left empty rather than failing the report.
struct BoundReport {
    std::uint64_t n = 0;
    double p = 0;
    double b = 0;
    std::uint64_t chi_h = 1;
    double beta = 0;
    std::optional<std::uint64_t> k0;
    std::optional<double> k0_lower;
    std::optional<double> k0_upper;
    std::optional<double> augmented_bound;
    std::optional<double> small_p_bound;
    std::optional<double> small_p_bound_log_b;
    std::optional<double> greedy_bound;
    std::optional<std::uint64_t> alpha_threshold_k; // k used for the Markov bound
    std::optional<std::string> n_hk;                // decimal, arbitrary precision
    std::optional<double> markov_bound;
};

// n_Hk for the Markov bound is taken from the balanced complete chi_H-partite
// host on n vertices. k defaults to alpha_threshold_k.
BoundReport bound_report(std::uint64_t n, double p, std::uint64_t chi_host,
                         std::optional<std::uint64_t> k = std::nullopt);

void to_json(nlohmann::json& j, const BoundReport& r);

} // namespace augcolor::bounds
