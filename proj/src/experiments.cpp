#include "secmimo/experiments.hpp"
#include "secmimo/analytic.hpp"
#include "secmimo/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace secmimo {

namespace {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

bool unit_alphas(const SystemConfig& cfg) {
    auto all_one = [](const Matrix& m) {
        return std::all_of(m.data.begin(), m.data.end(), [](double v) { return v == 1.0; });
    };
    return all_one(cfg.alpha_d) && all_one(cfg.alpha_e);
}

AsymptoticBoundPair bounds_for(SchemeKind s, const SystemConfig& cfg) {
    switch (s) {
    case SchemeKind::STT: return stt_bounds_asymptotic(cfg);
    case SchemeKind::SAS: return sas_bounds_asymptotic(cfg);
    case SchemeKind::OAS: return oas_bounds_asymptotic(cfg);
    }
    throw validation_error("unknown scheme");
}

double analytic_for(SchemeKind s, const SystemConfig& cfg, double mer, double rel_tol) {
    switch (s) {
    case SchemeKind::STT: return p_zero_stt(cfg.m_tx, cfg.n_dest, cfg.n_eve, mer);
    case SchemeKind::SAS: return p_zero_sas(cfg.m_tx, cfg.n_dest, cfg.n_eve, mer, rel_tol);
    case SchemeKind::OAS: return p_zero_oas(cfg.m_tx, cfg.n_dest, cfg.n_eve, mer);
    }
    throw validation_error("unknown scheme");
}

} // namespace

std::vector<SweepRow> sweep_mer(const SystemConfig& base, const SweepOptions& opt) {
    base.validate();
    if (opt.schemes.empty())
        throw validation_error("sweep_mer: no schemes given");
    if (opt.mer_db_grid.empty())
        throw validation_error("sweep_mer: empty MER grid");

    const bool iid = unit_alphas(base);
    std::vector<SweepRow> rows;
    rows.reserve(opt.schemes.size() * opt.mer_db_grid.size());
    std::uint64_t row_counter = 0;
    for (SchemeKind s : opt.schemes) {
        for (double mer_db : opt.mer_db_grid) {
            SweepRow row;
            row.scheme = s;
            row.mer_db = mer_db;
            row.m_tx = base.m_tx;
            row.n_dest = base.n_dest;
            row.n_eve = base.n_eve;
            const double mer = db_to_linear(mer_db);
            const std::uint64_t row_seed = substream_key(opt.seed, row_counter++);
            // Field failures are isolated: a quadrature breakdown in the
            // analytic column still leaves MC and bounds usable.
            auto fail = [&row](const char* what, const std::exception& e) {
                if (!row.error.empty())
                    row.error += "; ";
                row.error += std::string(what) + ": " + e.what();
            };
            if (iid) {
                try {
                    row.p_analytic = analytic_for(s, base, mer, opt.rel_tol);
                } catch (const std::exception& e) {
                    fail("analytic", e);
                }
            }
            if (opt.with_bounds) {
                try {
                    AsymptoticBoundPair b = bounds_for(s, base);
                    double scale = std::pow(mer, -static_cast<double>(b.exponent));
                    row.p_lower_bound = b.lower_coeff * scale;
                    row.p_upper_bound = b.upper_coeff * scale;
                } catch (const std::exception& e) {
                    fail("bounds", e);
                }
            }
            if (opt.mc_samples > 0) {
                try {
                    SystemConfig cfg = base;
                    cfg.sigma2_sd = mer * cfg.sigma2_se;
                    row.mc = estimate(s, cfg, opt.mc_samples, row_seed);
                    if (row.p_analytic && *row.p_analytic > 0.0) {
                        std::uint64_t need = required_samples_for_ci(*row.p_analytic);
                        if (opt.mc_samples < need) {
                            std::ostringstream os;
                            os << "mc underpowered: p ~ " << fmt12(*row.p_analytic)
                               << " needs >= " << need << " samples for a meaningful CI";
                            row.note = os.str();
                        }
                    }
                } catch (const std::exception& e) {
                    fail("mc", e);
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

DiversityEstimate fit_diversity(const std::vector<SweepRow>& rows,
                                double window_lo_db, double window_hi_db) {
    if (window_hi_db <= window_lo_db)
        throw validation_error("fit_diversity: window must satisfy lo < hi");
    std::vector<const SweepRow*> in;
    for (const auto& r : rows) {
        if (!r.error.empty() || !r.p_analytic)
            continue;
        if (r.mer_db < window_lo_db || r.mer_db > window_hi_db)
            continue;
        if (!in.empty() && in.front()->scheme != r.scheme)
            throw validation_error("fit_diversity: rows mix schemes; fit one scheme at a time");
        in.push_back(&r);
    }
    if (in.size() < 4)
        throw validation_error("fit_diversity: need at least 4 analytic rows in the window");

    // Slope of y = -log10(p) against x = log10(mer).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(in.size());
    for (const auto* r : in) {
        double x = r->mer_db / 10.0;
        double y = -std::log10(*r->p_analytic);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double denom = sxx - sx * sx / n;
    if (denom <= 0.0)
        throw validation_error("fit_diversity: degenerate MER grid");
    double slope = (sxy - sx * sy / n) / denom;
    double intercept = (sy - slope * sx) / n;
    double ss = 0.0;
    for (const auto* r : in) {
        double x = r->mer_db / 10.0;
        double y = -std::log10(*r->p_analytic);
        double e = y - (slope * x + intercept);
        ss += e * e;
    }
    DiversityEstimate out;
    out.slope = slope;
    out.expected = static_cast<double>(in.front()->m_tx * in.front()->n_dest);
    out.window_lo_db = window_lo_db;
    out.window_hi_db = window_hi_db;
    out.residual = std::sqrt(ss / n);
    return out;
}

namespace {

void sort_rows(std::vector<SweepRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.scheme != b.scheme)
            return static_cast<int>(a.scheme) < static_cast<int>(b.scheme);
        return a.mer_db < b.mer_db;
    });
}

std::ofstream open_out(const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary); // '\n' only, byte-stable
    if (!out)
        throw io_error("cannot open output file " + file.string());
    return out;
}

void write_row_values(std::ostream& out, const SweepRow& r) {
    out << (r.p_analytic ? fmt12(*r.p_analytic) : "") << ",";
    if (r.mc)
        out << fmt12(r.mc->p_hat) << "," << fmt12(r.mc->ci_low) << ","
            << fmt12(r.mc->ci_high);
    else
        out << ",,";
    out << "," << (r.p_lower_bound ? fmt12(*r.p_lower_bound) : "") << ","
        << (r.p_upper_bound ? fmt12(*r.p_upper_bound) : "");
}

} // namespace

void write_sweep_csv(const std::filesystem::path& file, const std::vector<SweepRow>& rows) {
    std::vector<SweepRow> sorted = rows;
    sort_rows(sorted);
    std::ofstream out = open_out(file);
    out << "mer_db,scheme,p_analytic,p_mc,ci_low,ci_high,p_lower_bound,p_upper_bound\n";
    for (const auto& r : sorted) {
        out << fmt12(r.mer_db) << "," << scheme_name(r.scheme) << ",";
        write_row_values(out, r);
        out << "\n";
    }
    if (!out.good())
        throw io_error("error writing " + file.string());
}

namespace {

std::vector<double> linspace(double lo, double hi, int points) {
    std::vector<double> v(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k)
        v[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (points - 1);
    return v;
}

constexpr SchemeKind kAllSchemes[] = {SchemeKind::STT, SchemeKind::SAS, SchemeKind::OAS};

// Figure 3 varies the antenna count at fixed MER, so its CSV keys rows by m.
void write_fig3_csv(const std::filesystem::path& file, const std::vector<SweepRow>& rows) {
    std::ofstream out = open_out(file);
    out << "m,scheme,p_analytic,p_mc,ci_low,ci_high\n";
    for (const auto& r : rows) {
        out << r.m_tx << "," << scheme_name(r.scheme) << ","
            << (r.p_analytic ? fmt12(*r.p_analytic) : "") << ",";
        if (r.mc)
            out << fmt12(r.mc->p_hat) << "," << fmt12(r.mc->ci_low) << ","
                << fmt12(r.mc->ci_high);
        else
            out << ",,";
        out << "\n";
    }
    if (!out.good())
        throw io_error("error writing " + file.string());
}

nlohmann::ordered_json grid_json(double lo, double hi, int points) {
    return {{"lo_db", lo}, {"hi_db", hi}, {"points", points}};
}

} // namespace

FigureOutput figure(int id, const std::filesystem::path& out_dir,
                    std::uint64_t mc_samples, std::uint64_t seed) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw io_error("cannot create output directory " + out_dir.string());

    FigureOutput out;
    nlohmann::ordered_json manifest;
    manifest["figure"] = id;
    manifest["version"] = kVersion;
    manifest["seed"] = seed;
    manifest["mc_samples"] = mc_samples;
    nlohmann::ordered_json curves = nlohmann::ordered_json::array();
    std::uint64_t curve_counter = 0;

    auto add_curve = [&](const std::string& name, const SystemConfig& cfg, SchemeKind s,
                         const std::vector<double>& grid, std::uint64_t samples,
                         bool with_bounds) {
        SweepOptions opt;
        opt.schemes = {s};
        opt.mer_db_grid = grid;
        opt.mc_samples = samples;
        opt.with_bounds = with_bounds;
        opt.seed = substream_key(seed, curve_counter++);
        std::vector<SweepRow> rows = sweep_mer(cfg, opt);
        std::filesystem::path file = out_dir / name;
        write_sweep_csv(file, rows);
        out.csv_files.push_back(file);
        curves.push_back({{"file", name},
                          {"scheme", scheme_name(s)},
                          {"m_tx", cfg.m_tx},
                          {"n_dest", cfg.n_dest},
                          {"n_eve", cfg.n_eve}});
    };

    switch (id) {
    case 2: {
        std::vector<double> grid = linspace(-10.0, 30.0, 41);
        manifest["grid"] = grid_json(-10.0, 30.0, 41);
        for (int m : {2, 4})
            for (SchemeKind s : kAllSchemes)
                add_curve("fig2_" + std::string(scheme_name(s)) + "_m" + std::to_string(m)
                              + ".csv",
                          make_iid_config(m, 1, 1, 1.0), s, grid, mc_samples, false);
        break;
    }
    case 3: {
        const double mer_db = 3.0;
        manifest["mer_db"] = mer_db;
        manifest["m_range"] = {1, 8};
        for (SchemeKind s : kAllSchemes) {
            std::vector<SweepRow> rows;
            for (int m = 1; m <= 8; ++m) {
                SweepOptions opt;
                opt.schemes = {s};
                opt.mer_db_grid = {mer_db};
                opt.mc_samples = mc_samples;
                opt.seed = substream_key(seed, curve_counter * 100 + static_cast<std::uint64_t>(m));
                std::vector<SweepRow> one = sweep_mer(make_iid_config(m, 1, 1, 1.0), opt);
                rows.push_back(one.front());
            }
            ++curve_counter;
            std::string name = "fig3_" + std::string(scheme_name(s)) + ".csv";
            std::filesystem::path file = out_dir / name;
            write_fig3_csv(file, rows);
            out.csv_files.push_back(file);
            curves.push_back({{"file", name}, {"scheme", scheme_name(s)},
                              {"m_range", {1, 8}}, {"n_dest", 1}, {"n_eve", 1}});
        }
        break;
    }
    case 4: {
        std::vector<double> grid = linspace(-10.0, 30.0, 41);
        manifest["grid"] = grid_json(-10.0, 30.0, 41);
        for (int n : {1, 4})
            for (SchemeKind s : kAllSchemes)
                add_curve("fig4_" + std::string(scheme_name(s)) + "_n" + std::to_string(n)
                              + ".csv",
                          make_iid_config(4, n, n, 1.0), s, grid, mc_samples, false);
        break;
    }
    case 5: {
        std::vector<double> grid = linspace(0.0, 60.0, 31);
        manifest["grid"] = grid_json(0.0, 60.0, 31);
        SystemConfig cfg = make_iid_config(4, 4, 2, 1.0);
        SweepOptions opt;
        opt.schemes = {SchemeKind::OAS};
        opt.mer_db_grid = grid;
        opt.with_bounds = true;
        opt.seed = substream_key(seed, curve_counter++);
        std::vector<SweepRow> rows = sweep_mer(cfg, opt);
        // One file per curve: exact, lower and upper each keep only their column.
        auto emit_view = [&](const std::string& name, int keep) {
            std::vector<SweepRow> view = rows;
            for (auto& r : view) {
                if (keep != 0) r.p_analytic.reset();
                if (keep != 1) r.p_lower_bound.reset();
                if (keep != 2) r.p_upper_bound.reset();
            }
            std::filesystem::path file = out_dir / name;
            write_sweep_csv(file, view);
            out.csv_files.push_back(file);
            curves.push_back({{"file", name}, {"scheme", "oas"},
                              {"m_tx", cfg.m_tx}, {"n_dest", cfg.n_dest},
                              {"n_eve", cfg.n_eve}});
        };
        emit_view("fig5_exact.csv", 0);
        emit_view("fig5_lower.csv", 1);
        emit_view("fig5_upper.csv", 2);
        break;
    }
    default:
        throw validation_error("figure id must be 2, 3, 4 or 5");
    }

    manifest["curves"] = curves;
    out.manifest = out_dir / ("fig" + std::to_string(id) + "_manifest.json");
    std::ofstream mf = open_out(out.manifest);
    mf << manifest.dump(2) << "\n";
    if (!mf.good())
        throw io_error("error writing " + out.manifest.string());
    return out;
}

} // namespace secmimo
