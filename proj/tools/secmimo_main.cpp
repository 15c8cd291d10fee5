#include "secmimo/analytic.hpp"
#include "secmimo/errors.hpp"
#include "secmimo/experiments.hpp"
#include "secmimo/model.hpp"
#include "secmimo/montecarlo.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace {

using namespace secmimo;

std::vector<double> parse_grid(const std::string& spec) {
    double lo = 0, hi = 0, step = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3)
        throw validation_error("--mer-db expects LO:HI:STEP, got '" + spec + "'");
    if (!(step > 0.0) || hi < lo)
        throw validation_error("--mer-db needs step > 0 and hi >= lo");
    std::vector<double> grid;
    int points = static_cast<int>((hi - lo) / step + 1e-9) + 1;
    for (int k = 0; k < points; ++k)
        grid.push_back(lo + k * step);
    return grid;
}

void parse_window(const std::string& spec, double& lo, double& hi) {
    if (std::sscanf(spec.c_str(), "%lf:%lf", &lo, &hi) != 2)
        throw validation_error("--window-db expects LO:HI, got '" + spec + "'");
}

std::vector<SchemeKind> parse_scheme_list(const std::string& list) {
    std::vector<SchemeKind> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        std::size_t comma = list.find(',', start);
        std::string tok = list.substr(start, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - start);
        if (!tok.empty())
            out.push_back(parse_scheme(tok));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (out.empty())
        throw validation_error("--schemes: no scheme names given");
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Secrecy outage tools for multi-antenna wiretap links"};
    app.require_subcommand(1);

    std::string scheme_str = "stt";
    int m = 1, nd = 1, ne = 1;
    double mer_db = 0.0, snr_db = 10.0, rel_tol = 1e-9;
    std::uint64_t samples = 100000, seed = 1, partitions = 1;
    std::string config_file, out_dir, schemes_list = "stt,sas,oas";
    std::string grid_spec, window_spec = "40:60";
    int fig_id = 2;

    auto* cmd_analytic = app.add_subcommand("analytic", "Exact zero-secrecy probability");
    cmd_analytic->add_option("--scheme", scheme_str)->required();
    cmd_analytic->add_option("--m", m)->required();
    cmd_analytic->add_option("--nd", nd)->required();
    cmd_analytic->add_option("--ne", ne)->required();
    cmd_analytic->add_option("--mer-db", mer_db)->required();
    cmd_analytic->add_option("--rel-tol", rel_tol);

    auto* cmd_sim = app.add_subcommand("simulate", "Monte Carlo estimate with 95% CI");
    cmd_sim->add_option("--scheme", scheme_str)->required();
    cmd_sim->add_option("--m", m)->required();
    cmd_sim->add_option("--nd", nd)->required();
    cmd_sim->add_option("--ne", ne)->required();
    cmd_sim->add_option("--mer-db", mer_db)->required();
    cmd_sim->add_option("--snr-db", snr_db)->required();
    cmd_sim->add_option("--samples", samples)->required();
    cmd_sim->add_option("--seed", seed)->required();
    cmd_sim->add_option("--partitions", partitions);

    auto* cmd_sweep = app.add_subcommand("sweep", "Analytic/MC sweep over a MER grid");
    cmd_sweep->add_option("--config", config_file)->required();
    cmd_sweep->add_option("--schemes", schemes_list);
    cmd_sweep->add_option("--mer-db", grid_spec)->required();
    cmd_sweep->add_option("--samples", samples);
    bool with_bounds = false;
    cmd_sweep->add_flag("--bounds", with_bounds);
    cmd_sweep->add_option("--seed", seed);
    cmd_sweep->add_option("--out", out_dir)->required();

    auto* cmd_div = app.add_subcommand("diversity", "Fitted log-log slope over a window");
    cmd_div->add_option("--config", config_file)->required();
    cmd_div->add_option("--scheme", scheme_str)->required();
    cmd_div->add_option("--window-db", window_spec)->required();

    auto* cmd_fig = app.add_subcommand("figure", "Reproduce a reference figure");
    cmd_fig->add_option("--id", fig_id)->required();
    cmd_fig->add_option("--out", out_dir)->required();
    cmd_fig->add_option("--samples", samples);
    cmd_fig->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cmd_analytic->parsed()) {
        SchemeKind s = parse_scheme(scheme_str);
        double mer = db_to_linear(mer_db);
        double p = 0.0;
        switch (s) {
        case SchemeKind::STT: p = p_zero_stt(m, nd, ne, mer); break;
        case SchemeKind::SAS: p = p_zero_sas(m, nd, ne, mer, rel_tol); break;
        case SchemeKind::OAS: p = p_zero_oas(m, nd, ne, mer); break;
        }
        std::printf("%.12g\n", p);
    } else if (cmd_sim->parsed()) {
        SchemeKind s = parse_scheme(scheme_str);
        SystemConfig cfg = make_iid_config(m, nd, ne, db_to_linear(mer_db),
                                           db_to_linear(snr_db));
        EstimateWithCI e = estimate_partitioned(s, cfg, samples, seed, partitions);
        std::printf("%.12g,%.12g,%.12g,%llu,%llu,%llu\n", e.p_hat, e.ci_low, e.ci_high,
                    static_cast<unsigned long long>(e.n_samples),
                    static_cast<unsigned long long>(e.n_events),
                    static_cast<unsigned long long>(e.seed));
    } else if (cmd_sweep->parsed()) {
        SystemConfig cfg = load_config(config_file);
        SweepOptions opt;
        opt.schemes = parse_scheme_list(schemes_list);
        opt.mer_db_grid = parse_grid(grid_spec);
        opt.mc_samples = cmd_sweep->count("--samples") ? samples : 0;
        opt.with_bounds = with_bounds;
        opt.seed = seed;
        std::vector<SweepRow> rows = sweep_mer(cfg, opt);
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec)
            throw io_error("cannot create output directory " + out_dir);
        write_sweep_csv(std::filesystem::path(out_dir) / "sweep.csv", rows);
        for (const auto& r : rows) {
            if (!r.error.empty())
                std::fprintf(stderr, "row %s @ %g dB failed: %s\n",
                             scheme_name(r.scheme), r.mer_db, r.error.c_str());
            else if (!r.note.empty())
                std::fprintf(stderr, "row %s @ %g dB: %s\n",
                             scheme_name(r.scheme), r.mer_db, r.note.c_str());
        }
    } else if (cmd_div->parsed()) {
        SystemConfig cfg = load_config(config_file);
        double lo = 0, hi = 0;
        parse_window(window_spec, lo, hi);
        SweepOptions opt;
        opt.schemes = {parse_scheme(scheme_str)};
        const int points = 11;
        for (int k = 0; k < points; ++k)
            opt.mer_db_grid.push_back(lo + (hi - lo) * k / (points - 1));
        std::vector<SweepRow> rows = sweep_mer(cfg, opt);
        DiversityEstimate d = fit_diversity(rows, lo, hi);
        std::printf("%.12g,%.12g,%.12g,%.12g,%.12g\n", d.slope, d.expected,
                    d.window_lo_db, d.window_hi_db, d.residual);
    } else if (cmd_fig->parsed()) {
        std::uint64_t n = cmd_fig->count("--samples") ? samples : 100000;
        figure(fig_id, out_dir, n, seed);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const secmimo::io_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const secmimo::numerical_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const secmimo::validation_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
