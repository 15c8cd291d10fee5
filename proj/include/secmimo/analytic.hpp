#pragma once

#include "secmimo/model.hpp"

#include <span>
#include <vector>

namespace secmimo {

// Coefficients of the large-MER laws p ~ coeff * mer^(-m_tx * n_dest).
struct AsymptoticBoundPair {
    double lower_coeff = 0.0;
    double upper_coeff = 0.0;
    int exponent = 0; // m_tx * n_dest for every scheme
};

struct MomentPair {
    double ez = 0.0;  // E(z)
    double ez2 = 0.0; // E(z^2)
};

// Exact probability of zero secrecy capacity under i.i.d. links at
// main-to-eavesdropper ratio mer (> 0).
//
// All-antenna transmission: closed form in the aggregate gains.
double p_zero_stt(int m_tx, int n_dest, int n_eve, double mer);

// Ratio-optimal antenna selection: the per-antenna closed form raised to the
// m_tx-th power (independent antennas).
double p_zero_oas(int m_tx, int n_dest, int n_eve, double mer);

// Destination-only antenna selection: single semi-infinite integral over the
// eavesdropper aggregate, evaluated to rel_tol.
double p_zero_sas(int m_tx, int n_dest, int n_eve, double mer, double rel_tol = 1e-9);

// Subset-enumeration cap for the non-identical-gain paths below. Equal-gain
// inputs take a grouped path with no cap.
inline constexpr std::size_t kSubsetCap = 20;

// CDF / PDF of max(X_1..X_n) for independent exponentials with the given
// means, via inclusion-exclusion over nonempty subsets.
double max_exp_cdf(std::span<const double> means, double x);
double max_exp_pdf(std::span<const double> means, double x);
double max_exp_cdf(const std::vector<double>& means, double x);
double max_exp_pdf(const std::vector<double>& means, double x);

// Large-MER bound coefficients per scheme (alpha grids from cfg; mer-free).
AsymptoticBoundPair stt_bounds_asymptotic(const SystemConfig& cfg);
AsymptoticBoundPair oas_bounds_asymptotic(const SystemConfig& cfg);
// Wiretap subset sums use the first antenna's alpha_e row as the reference.
AsymptoticBoundPair sas_bounds_asymptotic(const SystemConfig& cfg);

// First two moments of z = max_e / (m_tx * n_dest * sigma2 * alpha_d(i, j)),
// where max_e is the maximum over all m_tx * n_eve eavesdropper link gains.
// (i, j) names the main link whose gain normalizes z.
MomentPair theorem1_moments(const SystemConfig& cfg, int i, int j);

} // namespace secmimo
