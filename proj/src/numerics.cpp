#include "secmimo/numerics.hpp"
#include "secmimo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace secmimo {

SignedLogValue SignedLogValue::from_real(double x) {
    if (std::isnan(x))
        throw numerical_error("SignedLogValue::from_real: NaN input");
    if (x == 0.0)
        return {0, 0.0};
    return {x > 0.0 ? 1 : -1, std::log(std::fabs(x))};
}

double SignedLogValue::to_real() const {
    if (sign == 0)
        return 0.0;
    return static_cast<double>(sign) * std::exp(log_mag);
}

double log_binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) {
        std::ostringstream os;
        os << "log_binomial: need 0 <= k <= n, got n=" << n << " k=" << k;
        throw validation_error(os.str());
    }
    if (k == 0 || k == n)
        return 0.0;
    return std::lgamma(static_cast<double>(n) + 1.0)
         - std::lgamma(static_cast<double>(k) + 1.0)
         - std::lgamma(static_cast<double>(n - k) + 1.0);
}

namespace detail {

double lower_gamma_series(double a, double x) {
    if (x == 0.0)
        return 0.0;
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    const int itmax = 2000000;
    for (int i = 0; i < itmax; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-17)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw numerical_error("lower_gamma_series: no convergence (a=" + std::to_string(a)
                          + ", x=" + std::to_string(x) + ")");
}

double upper_gamma_cf(double a, double x) {
    const double fpmin = std::numeric_limits<double>::min() / 1e-30;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    const int itmax = 2000000;
    for (int i = 1; i <= itmax; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin)
            d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw numerical_error("upper_gamma_cf: no convergence (a=" + std::to_string(a)
                          + ", x=" + std::to_string(x) + ")");
}

} // namespace detail

double regularized_lower_gamma(double a, double x) {
    if (!(a > 0.0) || std::isnan(x))
        throw validation_error("regularized_lower_gamma: need a > 0 and x >= 0");
    if (x < 0.0)
        throw validation_error("regularized_lower_gamma: negative x");
    if (x == 0.0)
        return 0.0;
    if (x < a + 1.0)
        return detail::lower_gamma_series(a, x);
    return 1.0 - detail::upper_gamma_cf(a, x);
}

SignedLogValue signed_logsum(std::span<const SignedLogValue> terms) {
    double lmax = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms) {
        if (std::isnan(t.log_mag))
            throw numerical_error("signed_logsum: NaN magnitude");
        if (t.sign != 0)
            lmax = std::max(lmax, t.log_mag);
    }
    if (!std::isfinite(lmax))
        return {0, 0.0};
    double acc = 0.0;
    for (const auto& t : terms)
        if (t.sign != 0)
            acc += static_cast<double>(t.sign) * std::exp(t.log_mag - lmax);
    if (acc == 0.0)
        return {0, 0.0};
    return {acc > 0.0 ? 1 : -1, lmax + std::log(std::fabs(acc))};
}

SignedLogValue signed_logsum(const std::vector<SignedLogValue>& terms) {
    return signed_logsum(std::span<const SignedLogValue>(terms.data(), terms.size()));
}

namespace {

// Gauss-Kronrod 7/15 abscissae and weights (positive half, symmetric).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct GkEstimate {
    double kronrod;
    double err;
};

GkEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        double f1 = f(c - x);
        double f2 = f(c + x);
        if (!std::isfinite(f1) || !std::isfinite(f2))
            throw numerical_error("integrate_semi_infinite: non-finite integrand value");
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1)
            resg += kWg[j / 2] * (f1 + f2);
    }
    return {resk * h, std::fabs((resk - resg) * h)};
}

// Bisects until the Kronrod error estimate is under tol_abs; halving the
// budget alongside the interval keeps the summed error within the original
// tolerance. An absolute budget (anchored to the panel's own first estimate
// by the caller) is essential: near a high-order zero of the integrand the
// *relative* Gauss/Kronrod discrepancy is scale-invariant and bisection
// would never terminate against a relative test.
double refine_panel(const std::function<double(double)>& f, double a, double b,
                    double tol_abs, int depth) {
    GkEstimate e = gk15(f, a, b);
    if (e.err <= tol_abs)
        return e.kronrod;
    if (depth >= 40) {
        std::ostringstream os;
        os << "integrate_semi_infinite: panel [" << a << ", " << b
           << "] did not converge (estimate " << e.kronrod << ", error " << e.err << ")";
        throw numerical_error(os.str());
    }
    double m = 0.5 * (a + b);
    return refine_panel(f, a, m, 0.5 * tol_abs, depth + 1)
         + refine_panel(f, m, b, 0.5 * tol_abs, depth + 1);
}

double integrate_panel(const std::function<double(double)>& f, double a, double b,
                       double rel_tol) {
    GkEstimate first = gk15(f, a, b);
    double tol_abs = rel_tol * std::max(std::fabs(first.kronrod),
                                        std::numeric_limits<double>::min());
    if (first.err <= tol_abs)
        return first.kronrod;
    double m = 0.5 * (a + b);
    return refine_panel(f, a, m, 0.5 * tol_abs, 1)
         + refine_panel(f, m, b, 0.5 * tol_abs, 1);
}

} // namespace

double integrate_semi_infinite(const std::function<double(double)>& f, double rel_tol) {
    if (!(rel_tol > 0.0) || rel_tol > 1e-3)
        throw validation_error("integrate_semi_infinite: rel_tol must be in (0, 1e-3]");

    // Panel edges 0, 1, 2, 4, 8, ... ; truncate once two conditions hold:
    // the latest panel is below rel_tol/10 of the running total and panels decay
    // fast enough (ratio <= 0.9) that the geometric tail stays below rel_tol.
    double total = 0.0;
    double prev_panel = -1.0;
    double lo = 0.0, hi = 1.0;
    const int max_panels = 64;
    const int min_panels_when_empty = 12;
    for (int k = 0; k < max_panels; ++k) {
        double panel = integrate_panel(f, lo, hi, rel_tol / 4.0);
        total += panel;
        bool small_enough = std::fabs(panel) <= (rel_tol / 10.0) * std::max(total, 1e-300);
        bool decaying = (panel == 0.0)
            || (prev_panel > 0.0 && panel <= 0.9 * prev_panel);
        if (small_enough && decaying && (total > 0.0 || k >= min_panels_when_empty))
            return total;
        prev_panel = panel;
        lo = hi;
        hi *= 2.0;
    }
    std::ostringstream os;
    os << "integrate_semi_infinite: tail not resolved after " << max_panels
       << " panels (total so far " << total << ", last panel " << prev_panel << ")";
    throw numerical_error(os.str());
}

} // namespace secmimo
