#pragma once

#include "secmimo/model.hpp"

#include <cstdint>

namespace secmimo {

struct EstimateWithCI {
    double p_hat = 0.0;
    double ci_low = 0.0;  // 95% Wilson score interval
    double ci_high = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t n_events = 0;
    std::uint64_t seed = 0;
};

// 95% Wilson score interval for n_events successes out of n_samples.
void wilson_interval(std::uint64_t n_events, std::uint64_t n_samples,
                     double& low, double& high);

// Empirical zero-secrecy probability over n_samples independent realizations.
// Deterministic for fixed (scheme, cfg dims/gains, n_samples, seed); identical
// to estimate_partitioned(..., 1). n_samples must be >= 1000.
EstimateWithCI estimate(SchemeKind scheme, const SystemConfig& cfg,
                        std::uint64_t n_samples, std::uint64_t seed);

// Same estimate split across `partitions` independent substreams. The event
// count of partition k depends only on (seed, k), so the merged result is
// identical no matter how or in what order partitions execute.
EstimateWithCI estimate_partitioned(SchemeKind scheme, const SystemConfig& cfg,
                                    std::uint64_t n_samples, std::uint64_t seed,
                                    std::uint64_t partitions);

// Samples needed for a CI that meaningfully constrains a probability around p
// (about 100 expected events).
std::uint64_t required_samples_for_ci(double p);

} // namespace secmimo
