// Unit tests for the Monte Carlo estimator: Wilson intervals, determinism,
// partitioned substreams, and agreement with the closed forms.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "secmimo/analytic.hpp"
#include "secmimo/errors.hpp"
#include "secmimo/montecarlo.hpp"

#include <cmath>

using namespace secmimo;

TEST_CASE("wilson interval: frozen midpoint case") {
    double lo = 0.0, hi = 0.0;
    wilson_interval(50, 100, lo, hi);
    // 50/100 at z = 1.959963984540054; reference values from the score
    // interval formula evaluated independently.
    CHECK(lo == doctest::Approx(0.4038315).epsilon(1e-6));
    CHECK(hi == doctest::Approx(0.5961685).epsilon(1e-6));
    CHECK(lo < 0.5);
    CHECK(hi > 0.5);
}

TEST_CASE("wilson interval: boundary counts stay inside [0, 1]") {
    double lo = 0.0, hi = 0.0;
    wilson_interval(0, 1000, lo, hi);
    CHECK(lo >= 0.0);
    CHECK(lo <= 1e-12);
    CHECK(hi > 0.0);
    CHECK(hi < 0.01);
    wilson_interval(1000, 1000, lo, hi);
    CHECK(hi >= 1.0 - 1e-12);
    CHECK(hi <= 1.0);
    CHECK(lo > 0.99);
    CHECK(lo < 1.0);
}

TEST_CASE("wilson interval: tighter with more samples") {
    double lo1, hi1, lo2, hi2;
    wilson_interval(50, 100, lo1, hi1);
    wilson_interval(5000, 10000, lo2, hi2);
    CHECK(hi2 - lo2 < hi1 - lo1);
}

TEST_CASE("wilson interval rejects inconsistent counts") {
    double lo, hi;
    CHECK_THROWS_AS(wilson_interval(5, 4, lo, hi), validation_error);
    CHECK_THROWS_AS(wilson_interval(0, 0, lo, hi), validation_error);
}

TEST_CASE("estimate: deterministic for a fixed seed") {
    SystemConfig cfg = make_iid_config(2, 1, 1, 1.0);
    EstimateWithCI a = estimate(SchemeKind::STT, cfg, 20000, 42);
    EstimateWithCI b = estimate(SchemeKind::STT, cfg, 20000, 42);
    CHECK(a.p_hat == b.p_hat);
    CHECK(a.n_events == b.n_events);
    CHECK(a.ci_low == b.ci_low);
    CHECK(a.ci_high == b.ci_high);
    CHECK(a.seed == 42);
    CHECK(a.n_samples == 20000);
    CHECK(a.n_events <= a.n_samples);
    CHECK(a.ci_low <= a.p_hat);
    CHECK(a.p_hat <= a.ci_high);
    EstimateWithCI c = estimate(SchemeKind::STT, cfg, 20000, 43);
    CHECK(a.n_events != c.n_events); // different seed, different stream
}

TEST_CASE("estimate: sample size floor") {
    SystemConfig cfg = make_iid_config(1, 1, 1, 1.0);
    CHECK_THROWS_AS(estimate(SchemeKind::STT, cfg, 999, 1), validation_error);
    CHECK_NOTHROW(estimate(SchemeKind::STT, cfg, 1000, 1));
}

TEST_CASE("partitioned estimate: merged result is reproducible and merges cleanly") {
    SystemConfig cfg = make_iid_config(2, 2, 2, 2.0);
    EstimateWithCI whole = estimate_partitioned(SchemeKind::SAS, cfg, 30000, 7, 8);
    EstimateWithCI again = estimate_partitioned(SchemeKind::SAS, cfg, 30000, 7, 8);
    CHECK(whole.n_events == again.n_events);
    CHECK(whole.p_hat == again.p_hat);
    // One partition is exactly the plain estimator.
    EstimateWithCI single = estimate_partitioned(SchemeKind::SAS, cfg, 30000, 7, 1);
    EstimateWithCI plain = estimate(SchemeKind::SAS, cfg, 30000, 7);
    CHECK(single.n_events == plain.n_events);
    CHECK(single.p_hat == plain.p_hat);
    // Sample count splits exactly even when partitions do not divide n.
    EstimateWithCI uneven = estimate_partitioned(SchemeKind::SAS, cfg, 30001, 7, 8);
    CHECK(uneven.n_samples == 30001);
}

TEST_CASE("partitioned estimate: partition count domain") {
    SystemConfig cfg = make_iid_config(1, 1, 1, 1.0);
    CHECK_THROWS_AS(estimate_partitioned(SchemeKind::STT, cfg, 2000, 1, 0),
                    validation_error);
    CHECK_THROWS_AS(estimate_partitioned(SchemeKind::STT, cfg, 2000, 1, 2001),
                    validation_error);
    CHECK_NOTHROW(estimate_partitioned(SchemeKind::STT, cfg, 2000, 1, 2000));
}

TEST_CASE("estimates agree with the closed forms") {
    struct Case { SchemeKind s; int m, nd, ne; double mer, expected; };
    const Case cases[] = {
        {SchemeKind::STT, 1, 1, 1, 1.0, 0.5},
        {SchemeKind::OAS, 2, 1, 1, 1.0, 0.25},
        {SchemeKind::SAS, 2, 1, 1, 1.0, 1.0 / 3.0},
        {SchemeKind::STT, 2, 2, 1, 4.0, p_zero_stt(2, 2, 1, 4.0)},
    };
    for (const Case& c : cases) {
        SystemConfig cfg = make_iid_config(c.m, c.nd, c.ne, c.mer);
        EstimateWithCI est = estimate(c.s, cfg, 100000, 1234);
        double half = 0.5 * (est.ci_high - est.ci_low);
        CHECK(std::fabs(est.p_hat - c.expected) <= 3.0 * half);
    }
}

TEST_CASE("confidence intervals cover the true value at roughly the stated rate") {
    SystemConfig cfg = make_iid_config(1, 1, 1, 1.0); // true p = 1/2
    int covered = 0;
    const int runs = 200;
    for (int k = 0; k < runs; ++k) {
        EstimateWithCI est = estimate(SchemeKind::STT, cfg, 1000, 9000 + k);
        if (est.ci_low <= 0.5 && 0.5 <= est.ci_high)
            ++covered;
    }
    // Nominal 95%; demanding at least 90% keeps the test stable.
    CHECK(covered >= runs * 9 / 10);
}

TEST_CASE("required sample count scales inversely with the probability") {
    CHECK(required_samples_for_ci(1.0) == 100);
    CHECK(required_samples_for_ci(0.5) == 200);
    CHECK(required_samples_for_ci(0.01) == 10000);
    CHECK(required_samples_for_ci(1e-6) == 100000000ULL);
    CHECK_THROWS_AS(required_samples_for_ci(0.0), validation_error);
    CHECK_THROWS_AS(required_samples_for_ci(-0.1), validation_error);
    CHECK_THROWS_AS(required_samples_for_ci(1.5), validation_error);
}
