#include "secmimo/analytic.hpp"
#include "secmimo/errors.hpp"
#include "secmimo/numerics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace secmimo {

namespace {

void check_dims(int m_tx, int n_dest, int n_eve, double mer) {
    if (m_tx < 1 || n_dest < 1 || n_eve < 1)
        throw validation_error("antenna counts must all be >= 1");
    if (!(mer > 0.0) || !std::isfinite(mer))
        throw validation_error("mer must be positive and finite");
}

double clamp_probability(double p, const char* what) {
    if (p >= 0.0 && p <= 1.0)
        return p;
    if (p < 0.0 && p >= -1e-12)
        return 0.0;
    if (p > 1.0 && p <= 1.0 + 1e-12)
        return 1.0;
    std::ostringstream os;
    os << what << ": probability " << p << " out of range";
    throw numerical_error(os.str());
}

bool all_equal(std::span<const double> v) {
    for (double x : v)
        if (x != v[0])
            return false;
    return true;
}

void check_means(std::span<const double> means, const char* what) {
    if (means.empty())
        throw validation_error(std::string(what) + ": means must be nonempty");
    for (double m : means)
        if (!(m > 0.0) || !std::isfinite(m))
            throw validation_error(std::string(what) + ": means must be positive and finite");
}

// Only the inclusion-exclusion consumers (bound coefficients, moments) pay
// the 2^n subset cost; the cdf/pdf evaluate as plain products and are exempt.
void check_subset_cap(std::span<const double> means, const char* what) {
    if (!all_equal(means) && means.size() > kSubsetCap) {
        std::ostringstream os;
        os << what << ": " << means.size() << " distinct-mean variables exceed the "
           << kSubsetCap << "-element subset cap; equal means take the grouped path";
        throw capacity_error(os.str());
    }
}

// Applies fn(sign, log_weight, inv_sum) to every nonempty-subset term of the
// inclusion-exclusion expansion over 1/means. sign is (-1)^(|A|+1); for equal
// means subsets collapse by cardinality and the binomial count goes into
// log_weight (0 otherwise).
template <typename Fn>
void for_each_subset_term(std::span<const double> means, Fn&& fn) {
    const std::size_t n = means.size();
    if (all_equal(means)) {
        double inv = 1.0 / means[0];
        for (std::size_t s = 1; s <= n; ++s) {
            int sign = (s % 2 == 1) ? 1 : -1;
            fn(sign, log_binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(s)),
               static_cast<double>(s) * inv);
        }
        return;
    }
    std::vector<double> inv(n);
    for (std::size_t k = 0; k < n; ++k)
        inv[k] = 1.0 / means[k];
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        double r = 0.0;
        for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1)
            r += inv[static_cast<std::size_t>(std::countr_zero(bits))];
        int sign = (std::popcount(mask) % 2 == 1) ? 1 : -1;
        fn(sign, 0.0, r);
    }
}

} // namespace

double p_zero_stt(int m_tx, int n_dest, int n_eve, double mer) {
    check_dims(m_tx, n_dest, n_eve, mer);
    const std::int64_t a = static_cast<std::int64_t>(m_tx) * n_dest;
    const std::int64_t b = static_cast<std::int64_t>(m_tx) * n_eve;
    const double log_mer = std::log(mer);
    std::vector<SignedLogValue> terms;
    terms.reserve(static_cast<std::size_t>(b));
    for (std::int64_t k = 0; k < b; ++k)
        terms.push_back({1, log_binomial(a + b - 1, k) + static_cast<double>(k) * log_mer});
    SignedLogValue sum = signed_logsum(terms);
    double log_p = static_cast<double>(1 - a - b) * std::log1p(mer) + sum.log_mag;
    return clamp_probability(std::exp(log_p), "p_zero_stt");
}

double p_zero_oas(int m_tx, int n_dest, int n_eve, double mer) {
    check_dims(m_tx, n_dest, n_eve, mer);
    return std::pow(p_zero_stt(1, n_dest, n_eve, mer), static_cast<double>(m_tx));
}

double p_zero_sas(int m_tx, int n_dest, int n_eve, double mer, double rel_tol) {
    check_dims(m_tx, n_dest, n_eve, mer);
    const double a = static_cast<double>(n_dest);
    const double lg_ne = std::lgamma(static_cast<double>(n_eve));
    auto integrand = [=](double x) {
        if (x <= 0.0)
            return 0.0;
        double p = regularized_lower_gamma(a, x / mer);
        double log_w = (n_eve - 1) * std::log(x) - x - lg_ne;
        return std::pow(p, static_cast<double>(m_tx)) * std::exp(log_w);
    };
    double p = integrate_semi_infinite(integrand, rel_tol);
    return clamp_probability(p, "p_zero_sas");
}

double max_exp_cdf(std::span<const double> means, double x) {
    check_means(means, "max_exp_cdf");
    if (std::isnan(x))
        throw validation_error("max_exp_cdf: NaN x");
    if (x <= 0.0)
        return 0.0;
    // Independence makes this a plain product; -expm1 keeps each factor
    // accurate down to x << mean, where the expanded form would cancel.
    double p = 1.0;
    for (double mu : means)
        p *= -std::expm1(-x / mu);
    return p;
}

double max_exp_pdf(std::span<const double> means, double x) {
    check_means(means, "max_exp_pdf");
    if (std::isnan(x) || x < 0.0)
        throw validation_error("max_exp_pdf: x must be >= 0");
    // Sum of nonnegative terms: variable i hits x while all others sit below.
    double v = 0.0;
    for (std::size_t i = 0; i < means.size(); ++i) {
        double term = std::exp(-x / means[i]) / means[i];
        for (std::size_t j = 0; j < means.size(); ++j)
            if (j != i)
                term *= -std::expm1(-x / means[j]);
        v += term;
    }
    return v;
}

double max_exp_cdf(const std::vector<double>& means, double x) {
    return max_exp_cdf(std::span<const double>(means.data(), means.size()), x);
}

double max_exp_pdf(const std::vector<double>& means, double x) {
    return max_exp_pdf(std::span<const double>(means.data(), means.size()), x);
}

namespace {

// Shared evaluator for the bound coefficients. Every scheme's pair has the
// shape sum_over_subsets +/- G! / (scale * inv_sum)^G with a fixed prefactor,
// where G is the diversity order of the sum and inv_sum runs over a wiretap
// gain subset. lower uses scale = per_branch_order, upper multiplies by
// branches^G and scale = 1.
double bound_sum(std::span<const double> alphas, double base_log, int order, double scale,
                 double log_prefactor, const char* what) {
    std::vector<SignedLogValue> terms;
    for_each_subset_term(alphas, [&](int sign, double log_w, double inv_sum) {
        double log_term = base_log + log_prefactor + log_w
                        - static_cast<double>(order) * std::log(scale * inv_sum);
        terms.push_back({sign, log_term});
    });
    SignedLogValue s = signed_logsum(terms);
    if (s.sign <= 0)
        throw numerical_error(std::string(what) + ": nonpositive bound coefficient");
    return s.log_mag; // log of the positive sum
}

std::vector<double> alpha_row(const Matrix& a, std::size_t i) {
    std::vector<double> row(a.cols);
    for (std::size_t j = 0; j < a.cols; ++j)
        row[j] = a.at(i, j);
    return row;
}

double sum_log_alpha_d(const SystemConfig& cfg) {
    double s = 0.0;
    for (double v : cfg.alpha_d.data)
        s += std::log(v);
    return s;
}

} // namespace

AsymptoticBoundPair stt_bounds_asymptotic(const SystemConfig& cfg) {
    cfg.validate();
    const int g = cfg.m_tx * cfg.n_dest;
    const int branches = cfg.m_tx * cfg.n_eve;
    const double base = std::lgamma(static_cast<double>(g) + 1.0) - sum_log_alpha_d(cfg);
    std::span<const double> links(cfg.alpha_e.data.data(), cfg.alpha_e.data.size());
    check_means(links, "stt_bounds_asymptotic");
    check_subset_cap(links, "stt_bounds_asymptotic");
    AsymptoticBoundPair out;
    out.exponent = g;
    out.lower_coeff = std::exp(
        bound_sum(links, base, g, static_cast<double>(g), 0.0, "stt_bounds_asymptotic"));
    out.upper_coeff = std::exp(
        bound_sum(links, base, g, 1.0,
                  static_cast<double>(g) * std::log(static_cast<double>(branches)),
                  "stt_bounds_asymptotic"));
    return out;
}

AsymptoticBoundPair oas_bounds_asymptotic(const SystemConfig& cfg) {
    cfg.validate();
    const int nd = cfg.n_dest;
    const int ne = cfg.n_eve;
    double log_lower = 0.0, log_upper = 0.0;
    for (int i = 0; i < cfg.m_tx; ++i) {
        auto ii = static_cast<std::size_t>(i);
        double base = std::lgamma(static_cast<double>(nd) + 1.0);
        for (std::size_t j = 0; j < cfg.alpha_d.cols; ++j)
            base -= std::log(cfg.alpha_d.at(ii, j));
        std::vector<double> row = alpha_row(cfg.alpha_e, ii);
        check_means(row, "oas_bounds_asymptotic");
        check_subset_cap(row, "oas_bounds_asymptotic");
        log_lower += bound_sum(row, base, nd, static_cast<double>(nd), 0.0,
                               "oas_bounds_asymptotic");
        log_upper += bound_sum(row, base, nd, 1.0,
                               static_cast<double>(nd) * std::log(static_cast<double>(ne)),
                               "oas_bounds_asymptotic");
    }
    AsymptoticBoundPair out;
    out.exponent = cfg.m_tx * cfg.n_dest;
    out.lower_coeff = std::exp(log_lower);
    out.upper_coeff = std::exp(log_upper);
    return out;
}

AsymptoticBoundPair sas_bounds_asymptotic(const SystemConfig& cfg) {
    cfg.validate();
    const int g = cfg.m_tx * cfg.n_dest;
    const double base = std::lgamma(static_cast<double>(g) + 1.0) - sum_log_alpha_d(cfg);
    std::vector<double> row = alpha_row(cfg.alpha_e, 0);
    check_means(row, "sas_bounds_asymptotic");
    check_subset_cap(row, "sas_bounds_asymptotic");
    AsymptoticBoundPair out;
    out.exponent = g;
    out.lower_coeff = std::exp(
        bound_sum(row, base, g, static_cast<double>(cfg.n_dest), 0.0, "sas_bounds_asymptotic"));
    out.upper_coeff = std::exp(
        bound_sum(row, base, g, 1.0,
                  static_cast<double>(g) * std::log(static_cast<double>(cfg.n_eve)),
                  "sas_bounds_asymptotic"));
    return out;
}

MomentPair theorem1_moments(const SystemConfig& cfg, int i, int j) {
    cfg.validate();
    if (i < 0 || i >= cfg.m_tx || j < 0 || j >= cfg.n_dest)
        throw validation_error("theorem1_moments: main link index out of range");
    std::vector<double> means(cfg.alpha_e.data.size());
    for (std::size_t k = 0; k < means.size(); ++k)
        means[k] = cfg.alpha_e.data[k] * cfg.sigma2_se;
    check_means(means, "theorem1_moments");
    check_subset_cap(means, "theorem1_moments");

    std::vector<SignedLogValue> t1, t2;
    for_each_subset_term(means, [&](int sign, double log_w, double r) {
        t1.push_back({sign, log_w - std::log(r)});
        t2.push_back({sign, log_w + std::log(2.0) - 2.0 * std::log(r)});
    });
    double ex = signed_logsum(t1).to_real();  // E[max]
    double ex2 = signed_logsum(t2).to_real(); // E[max^2]

    double denom = static_cast<double>(cfg.m_tx * cfg.n_dest)
                 * cfg.alpha_d.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j))
                 * cfg.sigma2_sd;
    MomentPair out;
    out.ez = ex / denom;
    out.ez2 = ex2 / (denom * denom);
    return out;
}

} // namespace secmimo
