#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace secmimo {

// A real number stored as sign * exp(log_mag). sign == 0 encodes an exact zero
// (log_mag is meaningless in that case and kept at 0).
struct SignedLogValue {
    int sign = 0; // -1, 0, +1
    double log_mag = 0.0;

    static SignedLogValue from_real(double x);
    double to_real() const;
};

// ln C(n, k). Exact-ish via lgamma; k in [0, n] required.
double log_binomial(std::int64_t n, std::int64_t k);

// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
// Series for x < a + 1, continued fraction for the complement otherwise.
double regularized_lower_gamma(double a, double x);

namespace detail {
// The two evaluation routes, exposed for cross-checking. Both return the
// regularized value (P for the series, Q for the continued fraction).
double lower_gamma_series(double a, double x);
double upper_gamma_cf(double a, double x);
} // namespace detail

// Sum of signed exponentials: returns sum_i s_i * exp(l_i) as a SignedLogValue.
// Stable against overflow by factoring out the largest magnitude.
SignedLogValue signed_logsum(std::span<const SignedLogValue> terms);
SignedLogValue signed_logsum(const std::vector<SignedLogValue>& terms);

// Integral of f over [0, inf) for f >= 0 with (eventually) exponential decay.
// Geometric panels, Gauss-Kronrod 15 with bisection inside each panel,
// tail truncated once its estimated mass falls below rel_tol / 10 of the total.
// rel_tol must lie in (0, 1e-3].
double integrate_semi_infinite(const std::function<double(double)>& f, double rel_tol);

} // namespace secmimo
