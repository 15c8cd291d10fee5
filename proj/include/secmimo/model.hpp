#pragma once

#include "secmimo/rng.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace secmimo {

// Dense row-major matrix, just big enough for per-link gain grids.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    bool operator==(const Matrix&) const = default;
};

enum class SchemeKind { STT, SAS, OAS };

const char* scheme_name(SchemeKind s);
SchemeKind parse_scheme(const std::string& name); // "stt" / "sas" / "oas"

// Transmitter with m_tx antennas, destination with n_dest, eavesdropper with
// n_eve. Average link gains are sigma2 * alpha(i, j); alpha defaults to all
// ones (i.i.d. links). snr is the transmit SNR P / N0 (linear).
struct SystemConfig {
    int m_tx = 1;
    int n_dest = 1;
    int n_eve = 1;
    double sigma2_sd = 1.0;
    double sigma2_se = 1.0;
    Matrix alpha_d; // m_tx x n_dest
    Matrix alpha_e; // m_tx x n_eve
    double snr = 1.0;

    // Main-to-eavesdropper ratio sigma2_sd / sigma2_se.
    double mer() const { return sigma2_sd / sigma2_se; }

    void validate() const; // throws validation_error
};

// i.i.d. config: unit alpha grids, sigma2_se = 1, sigma2_sd = mer.
SystemConfig make_iid_config(int m_tx, int n_dest, int n_eve, double mer, double snr = 1.0);

// Squared channel magnitudes |h|^2 for one fading realization.
struct ChannelRealization {
    Matrix g_d; // m_tx x n_dest
    Matrix g_e; // m_tx x n_eve
};

double db_to_linear(double db);
double linear_to_db(double x);

// Draws each |h|^2 as an exponential with mean sigma2 * alpha(i, j); g_d is
// consumed from the stream first (row-major), then g_e.
ChannelRealization sample_realization(const SystemConfig& cfg, Rng& rng);
void sample_realization_into(const SystemConfig& cfg, Rng& rng, ChannelRealization& out);

// Debug path: draws the complex Gaussian h explicitly and squares it.
// Distributionally identical to sample_realization, used for cross-checks.
ChannelRealization sample_realization_gaussian(const SystemConfig& cfg, Rng& rng);

// JSON config with keys M, N_d, N_e, mer_db, snr_db, alpha_d, alpha_e,
// sigma2_sd, sigma2_se. sigma2_se defaults to 1 and sigma2_sd is derived from
// mer_db unless both gains are given explicitly.
SystemConfig load_config(const std::filesystem::path& file);
SystemConfig parse_config(const std::string& json_text);

} // namespace secmimo
