#include "augcolor/bounds.hpp"

#include "augcolor/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <string>

namespace augcolor::bounds {

namespace {

void check_open_unit(double p)
{
    if (!(p > 0.0 && p < 1.0))
        throw InputError("need 0 < p < 1, got p = " + std::to_string(p));
}

double ln_np(std::uint64_t n, double p)
{
    const double np = static_cast<double>(n) * p;
    if (!(np > 1.0))
        throw RegimeError("formula needs np > 1, got np = " + std::to_string(np));
    return std::log(np);
}

double ln_big(const BigInt& x)
{
    // Keep the top 64 bits; relative error ~1e-19 is far below double epsilon.
    const auto bits = boost::multiprecision::msb(x);
    if (bits < 63)
        return std::log(x.convert_to<double>());
    const auto shift = bits - 62;
    const BigInt top = x >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

} // namespace

double b_of(double p)
{
    check_open_unit(p);
    return 1.0 / (1.0 - p);
}

double ln_b(double p)
{
    check_open_unit(p);
    return -std::log1p(-p);
}

double log_b(double x, double p) { return std::log(x) / ln_b(p); }

double ln_binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        throw InputError("ln_binomial needs k <= n");
    const auto dn = static_cast<double>(n);
    const auto dk = static_cast<double>(k);
    return std::lgamma(dn + 1.0) - std::lgamma(dk + 1.0) - std::lgamma(dn - dk + 1.0);
}

double k0_margin(std::uint64_t n, double p, std::uint64_t k)
{
    const auto dk = static_cast<double>(k);
    return ln_binomial(n, k) + dk * (dk - 1.0) / 2.0 * std::log1p(-p) - 4.0 * std::log(static_cast<double>(n));
}

std::optional<std::uint64_t> k0(std::uint64_t n, double p)
{
    check_open_unit(p);
    // The margin is concave in k, so once it is falling and nonpositive it
    // stays nonpositive.
    std::optional<std::uint64_t> best;
    double previous = -HUGE_VAL;
    for (std::uint64_t k = 1; k <= n; ++k) {
        const double m = k0_margin(n, p, k);
        if (m > 0.0)
            best = k;
        else if (m < previous)
            break;
        previous = m;
    }
    return best;
}

Sandwich k0_sandwich(std::uint64_t n, double p)
{
    check_open_unit(p);
    const double l = ln_np(n, p);
    const double upper = 2.0 * l / ln_b(p);
    return {upper - 4.0 * std::log(l) / ln_b(p), upper};
}

double extraction_size_formula(std::uint64_t n, double p)
{
    check_open_unit(p);
    const double L = ln_np(n, p) / ln_b(p);
    return 2.0 * L - 4.0 * std::log(L) / ln_b(p);
}

double augmented_bound(std::uint64_t n, double p, std::uint64_t chi_host)
{
    check_open_unit(p);
    if (chi_host < 1 || chi_host >= n)
        throw DomainError("augmented bound needs 1 <= chi_H < n");
    const double denom = std::log(static_cast<double>(n)) - std::log(static_cast<double>(chi_host));
    return static_cast<double>(n) * ln_b(p) / (2.0 * denom);
}

namespace {

double small_p_denominator(std::uint64_t n, double p, std::uint64_t chi_host)
{
    check_open_unit(p);
    if (chi_host < 1)
        throw DomainError("chi_H must be at least 1");
    const double denom = std::log(static_cast<double>(n) * p) - std::log(static_cast<double>(chi_host));
    if (!(denom > 0.0))
        throw DomainError("small-p bound needs np > chi_H");
    return 2.0 * denom;
}

} // namespace

double small_p_bound(std::uint64_t n, double p, std::uint64_t chi_host)
{
    return static_cast<double>(n) * p / small_p_denominator(n, p, chi_host);
}

double small_p_bound_log_b(std::uint64_t n, double p, std::uint64_t chi_host)
{
    return static_cast<double>(n) * ln_b(p) / small_p_denominator(n, p, chi_host);
}

double greedy_bound(std::uint64_t n, double p)
{
    check_open_unit(p);
    return static_cast<double>(n) * ln_b(p) / ln_np(n, p);
}

std::uint64_t alpha_threshold_k(std::uint64_t n, double p, std::uint64_t chi_host)
{
    check_open_unit(p);
    if (chi_host < 1 || chi_host >= n)
        throw DomainError("alpha threshold needs 1 <= chi_H < n");
    const double x = 2.0 * (std::log(static_cast<double>(n)) - std::log(static_cast<double>(chi_host))) / ln_b(p);
    return static_cast<std::uint64_t>(std::ceil(x));
}

double markov_alpha_bound(const BigInt& n_hk, double p, std::uint64_t k)
{
    if (n_hk < 0)
        throw InputError("n_Hk must be nonnegative");
    if (n_hk == 0)
        return 0.0;
    if (!(p >= 0.0 && p < 1.0))
        throw InputError("markov bound needs 0 <= p < 1");
    const auto dk = static_cast<double>(k);
    const double log_value = ln_big(n_hk) + dk * (dk - 1.0) / 2.0 * std::log1p(-p);
    return log_value >= 0.0 ? 1.0 : std::exp(log_value);
}

Tail mcdiarmid_tail(double t, std::uint64_t n)
{
    if (!(t >= 0.0))
        throw InputError("tail deviation t must be nonnegative");
    if (n < 1)
        throw InputError("tail needs n >= 1");
    const double raw = 2.0 * std::exp(-2.0 * t * t / static_cast<double>(n));
    return {raw, std::min(1.0, raw)};
}

double chromatic_lower_from_alpha(double n, double alpha)
{
    if (!(alpha >= 1.0))
        throw DomainError("independence number must be at least 1");
    return n / alpha;
}

BoundReport bound_report(std::uint64_t n, double p, std::uint64_t chi_host, std::optional<std::uint64_t> k)
{
    check_open_unit(p);
    if (n < 1 || chi_host < 1 || chi_host > n)
        throw InputError("bound report needs 1 <= chi_H <= n");
    BoundReport r;
    r.n = n;
    r.p = p;
    r.b = b_of(p);
    r.chi_h = chi_host;
    r.beta = static_cast<double>(n) / static_cast<double>(chi_host);
    r.k0 = k0(n, p);

    auto attempt = [](auto&& f) -> decltype(std::optional{f()}) {
        try {
            return f();
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    };
    if (auto s = attempt([&] { return k0_sandwich(n, p); })) {
        r.k0_lower = s->lower;
        r.k0_upper = s->upper;
    }
    r.augmented_bound = attempt([&] { return augmented_bound(n, p, chi_host); });
    r.small_p_bound = attempt([&] { return small_p_bound(n, p, chi_host); });
    r.small_p_bound_log_b = attempt([&] { return small_p_bound_log_b(n, p, chi_host); });
    r.greedy_bound = attempt([&] { return greedy_bound(n, p); });
    r.alpha_threshold_k = k ? k : attempt([&] { return alpha_threshold_k(n, p, chi_host); });

    if (r.alpha_threshold_k && *r.alpha_threshold_k >= 1) {
        // Balanced parts: n mod chi parts of size ceil(n/chi), the rest floor.
        const auto kk = *r.alpha_threshold_k;
        const auto small = n / chi_host;
        const auto big_parts = n % chi_host;
        BigInt count = 0;
        if (kk == 1)
            count = n;
        else
            count = BigInt(big_parts) * binomial(small + 1, kk) + BigInt(chi_host - big_parts) * binomial(small, kk);
        r.n_hk = count.str();
        r.markov_bound = markov_alpha_bound(count, p, kk);
    }
    return r;
}

void to_json(nlohmann::json& j, const BoundReport& r)
{
    auto opt = [](const auto& v) -> nlohmann::json { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    j = nlohmann::json{
        {"n", r.n},
        {"p", r.p},
        {"b", r.b},
        {"chi_h", r.chi_h},
        {"beta", r.beta},
        {"k0", opt(r.k0)},
        {"k0_lower", opt(r.k0_lower)},
        {"k0_upper", opt(r.k0_upper)},
        {"augmented_bound", opt(r.augmented_bound)},
        {"small_p_bound", opt(r.small_p_bound)},
        {"small_p_bound_log_b", opt(r.small_p_bound_log_b)},
        {"greedy_bound", opt(r.greedy_bound)},
        {"alpha_threshold_k", opt(r.alpha_threshold_k)},
        {"n_hk", opt(r.n_hk)},
        {"markov_bound", opt(r.markov_bound)},
        {"mcdiarmid_tail", "2*exp(-2*t^2/n)"},
    };
}

} // namespace augcolor::bounds
