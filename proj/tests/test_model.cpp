// Unit tests for the system model: config validation, dB conversion, channel
// sampling distributions, and JSON config parsing.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "secmimo/errors.hpp"
#include "secmimo/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

using namespace secmimo;

namespace {

// One-sided Kolmogorov-Smirnov distance against the unit-exponential CDF.
double ks_distance_unit_exp(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double cdf = 1.0 - std::exp(-xs[i]);
        double lo = static_cast<double>(i) / n;
        double hi = static_cast<double>(i + 1) / n;
        d = std::max({d, std::fabs(cdf - lo), std::fabs(cdf - hi)});
    }
    return d;
}

std::filesystem::path write_temp_config(const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / "secmimo_test_config.json";
    std::ofstream out(path);
    out << text;
    return path;
}

} // namespace

TEST_CASE("Matrix storage and equality") {
    Matrix m(2, 3, 1.5);
    CHECK(m.rows == 2);
    CHECK(m.cols == 3);
    CHECK(m.at(1, 2) == 1.5);
    m.at(0, 1) = -4.0;
    CHECK(m.data[1] == -4.0);
    Matrix n = m;
    CHECK(m == n);
    n.at(1, 0) = 9.0;
    CHECK_FALSE(m == n);
}

TEST_CASE("scheme names round trip and reject junk") {
    for (auto s : {SchemeKind::STT, SchemeKind::SAS, SchemeKind::OAS})
        CHECK(parse_scheme(scheme_name(s)) == s);
    CHECK_THROWS_AS(parse_scheme("mrc"), validation_error);
    CHECK_THROWS_AS(parse_scheme("STT"), validation_error);
    CHECK_THROWS_AS(parse_scheme(""), validation_error);
}

TEST_CASE("make_iid_config fills the expected fields") {
    SystemConfig cfg = make_iid_config(3, 2, 4, 10.0, 2.5);
    CHECK(cfg.m_tx == 3);
    CHECK(cfg.n_dest == 2);
    CHECK(cfg.n_eve == 4);
    CHECK(cfg.sigma2_se == 1.0);
    CHECK(cfg.sigma2_sd == 10.0);
    CHECK(cfg.snr == 2.5);
    CHECK(cfg.mer() == 10.0);
    CHECK(cfg.alpha_d.rows == 3);
    CHECK(cfg.alpha_d.cols == 2);
    CHECK(cfg.alpha_e.rows == 3);
    CHECK(cfg.alpha_e.cols == 4);
    for (double v : cfg.alpha_d.data)
        CHECK(v == 1.0);
    for (double v : cfg.alpha_e.data)
        CHECK(v == 1.0);
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("validate rejects broken configs") {
    auto good = [] { return make_iid_config(2, 2, 2, 1.0); };
    { auto c = good(); c.m_tx = 0; CHECK_THROWS_AS(c.validate(), validation_error); }
    { auto c = good(); c.n_dest = -1; CHECK_THROWS_AS(c.validate(), validation_error); }
    { auto c = good(); c.n_eve = 0; CHECK_THROWS_AS(c.validate(), validation_error); }
    { auto c = good(); c.sigma2_sd = 0.0; CHECK_THROWS_AS(c.validate(), validation_error); }
    { auto c = good(); c.sigma2_se = -2.0; CHECK_THROWS_AS(c.validate(), validation_error); }
    { auto c = good(); c.snr = 0.0; CHECK_THROWS_AS(c.validate(), validation_error); }
    { auto c = good(); c.alpha_d = Matrix(1, 2, 1.0); CHECK_THROWS_AS(c.validate(), validation_error); }
    { auto c = good(); c.alpha_e.at(1, 1) = 0.0; CHECK_THROWS_AS(c.validate(), validation_error); }
    { auto c = good(); c.alpha_e.at(0, 0) = -1.0; CHECK_THROWS_AS(c.validate(), validation_error); }
}

TEST_CASE("dB conversions") {
    CHECK(db_to_linear(0.0) == 1.0);
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(db_to_linear(-10.0) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(linear_to_db(100.0) == doctest::Approx(20.0).epsilon(1e-15));
    for (double db : {-37.0, -3.0, 0.0, 12.5, 60.0})
        CHECK(linear_to_db(db_to_linear(db)) == doctest::Approx(db).epsilon(1e-12));
    CHECK_THROWS_AS(linear_to_db(0.0), validation_error);
    CHECK_THROWS_AS(linear_to_db(-5.0), validation_error);
}

TEST_CASE("sampling is deterministic and the two entry points agree") {
    SystemConfig cfg = make_iid_config(2, 3, 2, 4.0);
    Rng a = Rng::substream(5, 0);
    Rng b = Rng::substream(5, 0);
    ChannelRealization r1 = sample_realization(cfg, a);
    ChannelRealization r2;
    sample_realization_into(cfg, b, r2);
    CHECK(r1.g_d == r2.g_d);
    CHECK(r1.g_e == r2.g_e);
    // A different substream gives a different draw.
    Rng c = Rng::substream(5, 1);
    ChannelRealization r3 = sample_realization(cfg, c);
    CHECK_FALSE(r1.g_d == r3.g_d);
}

TEST_CASE("sampled gains follow the configured means") {
    SystemConfig cfg = make_iid_config(1, 1, 1, 2.0);
    cfg.alpha_e.at(0, 0) = 3.0; // wiretap mean = 3 * sigma2_se = 3
    Rng rng(2024);
    const int n = 200000;
    double sum_d = 0.0, sum_e = 0.0;
    for (int i = 0; i < n; ++i) {
        ChannelRealization r = sample_realization(cfg, rng);
        sum_d += r.g_d.at(0, 0);
        sum_e += r.g_e.at(0, 0);
    }
    // Standard error of the mean is mean/sqrt(n) ~ 0.45%; allow 4 sigma.
    CHECK(sum_d / n == doctest::Approx(2.0).epsilon(0.02));
    CHECK(sum_e / n == doctest::Approx(3.0).epsilon(0.02));
}

TEST_CASE("sampled gains pass a KS test against the exponential law") {
    SystemConfig cfg = make_iid_config(1, 1, 1, 1.0);
    Rng rng(77);
    const int n = 100000;
    std::vector<double> xs;
    xs.reserve(n);
    for (int i = 0; i < n; ++i)
        xs.push_back(sample_realization(cfg, rng).g_d.at(0, 0));
    // Critical value at alpha = 1e-3: D * sqrt(n) <= 1.9495.
    CHECK(ks_distance_unit_exp(std::move(xs)) * std::sqrt(static_cast<double>(n))
          <= 1.9495);
}

TEST_CASE("gaussian sampling path matches the exponential law too") {
    SystemConfig cfg = make_iid_config(1, 1, 1, 1.0);
    Rng rng(78);
    const int n = 100000;
    std::vector<double> xs;
    xs.reserve(n);
    for (int i = 0; i < n; ++i)
        xs.push_back(sample_realization_gaussian(cfg, rng).g_d.at(0, 0));
    CHECK(ks_distance_unit_exp(std::move(xs)) * std::sqrt(static_cast<double>(n))
          <= 1.9495);
}

TEST_CASE("main and wiretap draws are uncorrelated") {
    SystemConfig cfg = make_iid_config(1, 1, 1, 1.0);
    Rng rng(79);
    const int n = 100000;
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        ChannelRealization r = sample_realization(cfg, rng);
        double x = r.g_d.at(0, 0), y = r.g_e.at(0, 0);
        sx += x; sy += y; sxx += x * x; syy += y * y; sxy += x * y;
    }
    double cov = sxy / n - (sx / n) * (sy / n);
    double rho = cov / std::sqrt((sxx / n - (sx / n) * (sx / n))
                                 * (syy / n - (sy / n) * (sy / n)));
    CHECK(std::fabs(rho) < 0.01);
}

TEST_CASE("config parsing: dims plus mer_db") {
    SystemConfig cfg = parse_config(R"({"M": 2, "N_d": 3, "N_e": 1, "mer_db": 10})");
    CHECK(cfg.m_tx == 2);
    CHECK(cfg.n_dest == 3);
    CHECK(cfg.n_eve == 1);
    CHECK(cfg.sigma2_se == 1.0);
    CHECK(cfg.sigma2_sd == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(cfg.snr == doctest::Approx(10.0).epsilon(1e-15)); // snr_db defaults to 10
    CHECK(cfg.alpha_d.rows == 2);
    CHECK(cfg.alpha_d.cols == 3);
}

TEST_CASE("config parsing: explicit gains override mer_db") {
    SystemConfig cfg = parse_config(
        R"({"M": 1, "N_d": 1, "N_e": 1, "mer_db": 30,
            "sigma2_sd": 5.0, "sigma2_se": 2.5, "snr_db": 0})");
    CHECK(cfg.sigma2_sd == 5.0);
    CHECK(cfg.sigma2_se == 2.5);
    CHECK(cfg.mer() == 2.0);
    CHECK(cfg.snr == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("config parsing: explicit alpha grids") {
    SystemConfig cfg = parse_config(
        R"({"M": 2, "N_d": 1, "N_e": 2, "mer_db": 0,
            "alpha_d": [[1.0], [2.0]],
            "alpha_e": [[0.5, 1.5], [2.0, 3.0]]})");
    CHECK(cfg.alpha_d.at(1, 0) == 2.0);
    CHECK(cfg.alpha_e.at(0, 1) == 1.5);
    CHECK(cfg.alpha_e.at(1, 1) == 3.0);
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("config parsing: malformed input is a validation error") {
    CHECK_THROWS_AS(parse_config("not json"), validation_error);
    CHECK_THROWS_AS(parse_config(R"({"M": 0, "N_d": 1, "N_e": 1, "mer_db": 0})"),
                    validation_error);
    CHECK_THROWS_AS(parse_config(R"({"N_d": 1, "N_e": 1, "mer_db": 0})"),
                    validation_error);
    // alpha grid shaped for the wrong antenna count
    CHECK_THROWS_AS(parse_config(R"({"M": 2, "N_d": 1, "N_e": 1, "mer_db": 0,
                                     "alpha_d": [[1.0]]})"),
                    validation_error);
}

TEST_CASE("config loading from disk") {
    auto path = write_temp_config(R"({"M": 4, "N_d": 2, "N_e": 2, "mer_db": 3})");
    SystemConfig cfg = load_config(path);
    CHECK(cfg.m_tx == 4);
    CHECK(cfg.sigma2_sd == doctest::Approx(std::pow(10.0, 0.3)).epsilon(1e-15));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_config("/nonexistent/dir/config.json"), io_error);
}
