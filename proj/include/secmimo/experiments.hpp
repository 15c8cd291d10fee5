#pragma once

#include "secmimo/model.hpp"
#include "secmimo/montecarlo.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace secmimo {

inline constexpr const char* kVersion = "0.1.0";

// One (scheme, MER) grid point of a sweep. Absent optionals become empty CSV
// fields; a nonempty `error` marks a row whose computation failed (its value
// fields stay empty). `note` carries non-fatal diagnostics (e.g. underpowered
// MC sampling for a deep-tail point).
struct SweepRow {
    SchemeKind scheme = SchemeKind::STT;
    double mer_db = 0.0;
    int m_tx = 0;
    int n_dest = 0;
    int n_eve = 0;
    std::optional<double> p_analytic;
    std::optional<EstimateWithCI> mc;
    std::optional<double> p_lower_bound;
    std::optional<double> p_upper_bound;
    std::string error;
    std::string note;
};

struct SweepOptions {
    std::vector<SchemeKind> schemes;
    std::vector<double> mer_db_grid;
    std::uint64_t mc_samples = 0; // 0 disables the MC columns
    bool with_bounds = false;
    std::uint64_t seed = 1;
    double rel_tol = 1e-9; // quadrature tolerance for the SAS closed form
};

// Least-squares slope of -log10(p_analytic) vs log10(mer) over a dB window.
struct DiversityEstimate {
    double slope = 0.0;
    double expected = 0.0; // m_tx * n_dest
    double window_lo_db = 0.0;
    double window_hi_db = 0.0;
    double residual = 0.0; // RMS fit residual
};

// Evaluates every scheme over the MER grid against the base config (its
// sigma2_sd is re-derived from each grid value; dims, alphas and snr are
// kept). Analytic columns are filled only for unit alpha grids, where the
// i.i.d. closed forms apply. Per-row failures land in SweepRow::error.
std::vector<SweepRow> sweep_mer(const SystemConfig& base, const SweepOptions& opt);

// Fits rows of a single scheme; needs >= 4 rows with analytic values inside
// the window.
DiversityEstimate fit_diversity(const std::vector<SweepRow>& rows,
                                double window_lo_db, double window_hi_db);

// Standard sweep CSV: header
//   mer_db,scheme,p_analytic,p_mc,ci_low,ci_high,p_lower_bound,p_upper_bound
// with 12 significant digits, rows sorted by scheme then MER.
void write_sweep_csv(const std::filesystem::path& file, const std::vector<SweepRow>& rows);

struct FigureOutput {
    std::vector<std::filesystem::path> csv_files;
    std::filesystem::path manifest;
};

// Reproduces one of the four reference figures at desk scale into out_dir:
//   2: p vs MER, m_tx in {2, 4}, single-antenna receivers, all schemes
//   3: p vs m_tx (1..8) at 3 dB, single-antenna receivers, all schemes
//   4: p vs MER for m_tx = 4 with (1,1) and (4,4) receiver pairs, all schemes
//   5: exact vs asymptotic bounds for the selection scheme (4, 4, 2)
// Writes one CSV per curve plus a manifest; byte-identical for fixed inputs.
// mc_samples applies to figures 2-4; figure 5 is analytic-only.
FigureOutput figure(int id, const std::filesystem::path& out_dir,
                    std::uint64_t mc_samples, std::uint64_t seed);

} // namespace secmimo
