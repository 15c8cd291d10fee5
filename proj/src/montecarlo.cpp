#include "secmimo/montecarlo.hpp"
#include "secmimo/errors.hpp"
#include "secmimo/schemes.hpp"

#include <cmath>
#include <vector>

namespace secmimo {

void wilson_interval(std::uint64_t n_events, std::uint64_t n_samples,
                     double& low, double& high) {
    if (n_samples == 0 || n_events > n_samples)
        throw validation_error("wilson_interval: need 0 <= n_events <= n_samples, n_samples > 0");
    const double z = 1.959963984540054; // 97.5th percentile of the standard normal
    const double n = static_cast<double>(n_samples);
    const double p = static_cast<double>(n_events) / n;
    const double z2n = z * z / n;
    const double denom = 1.0 + z2n;
    const double center = (p + 0.5 * z2n) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + 0.25 * z2n / n) / denom;
    low = std::max(0.0, center - half);
    high = std::min(1.0, center + half);
}

namespace {

std::uint64_t run_partition(SchemeKind scheme, const SystemConfig& cfg,
                            std::uint64_t n, std::uint64_t seed, std::uint64_t k) {
    Rng rng = Rng::substream(seed, k);
    ChannelRealization r;
    std::uint64_t events = 0;
    for (std::uint64_t s = 0; s < n; ++s) {
        sample_realization_into(cfg, rng, r);
        if (zero_secrecy_event(scheme, cfg, r))
            ++events;
    }
    return events;
}

} // namespace

EstimateWithCI estimate_partitioned(SchemeKind scheme, const SystemConfig& cfg,
                                    std::uint64_t n_samples, std::uint64_t seed,
                                    std::uint64_t partitions) {
    cfg.validate();
    if (n_samples < 1000)
        throw validation_error("estimate: n_samples must be >= 1000");
    if (partitions < 1 || partitions > n_samples)
        throw validation_error("estimate: partitions must be in [1, n_samples]");

    // Each partition is a pure function of (seed, k); summing the counts makes
    // the merge order-independent.
    const std::uint64_t base = n_samples / partitions;
    const std::uint64_t extra = n_samples % partitions;
    std::uint64_t events = 0;
    for (std::uint64_t k = 0; k < partitions; ++k)
        events += run_partition(scheme, cfg, base + (k < extra ? 1 : 0), seed, k);

    EstimateWithCI out;
    out.n_samples = n_samples;
    out.n_events = events;
    out.seed = seed;
    out.p_hat = static_cast<double>(events) / static_cast<double>(n_samples);
    wilson_interval(events, n_samples, out.ci_low, out.ci_high);
    return out;
}

EstimateWithCI estimate(SchemeKind scheme, const SystemConfig& cfg,
                        std::uint64_t n_samples, std::uint64_t seed) {
    return estimate_partitioned(scheme, cfg, n_samples, seed, 1);
}

std::uint64_t required_samples_for_ci(double p) {
    if (!(p > 0.0) || p > 1.0)
        throw validation_error("required_samples_for_ci: p must be in (0, 1]");
    return static_cast<std::uint64_t>(std::ceil(100.0 / p));
}

} // namespace secmimo
