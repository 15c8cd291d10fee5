#include "secmimo/model.hpp"
#include "secmimo/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace secmimo {

const char* scheme_name(SchemeKind s) {
    switch (s) {
    case SchemeKind::STT: return "stt";
    case SchemeKind::SAS: return "sas";
    case SchemeKind::OAS: return "oas";
    }
    return "?";
}

SchemeKind parse_scheme(const std::string& name) {
    if (name == "stt") return SchemeKind::STT;
    if (name == "sas") return SchemeKind::SAS;
    if (name == "oas") return SchemeKind::OAS;
    throw validation_error("unknown scheme '" + name + "' (expected stt, sas or oas)");
}

namespace {

void check_alpha(const Matrix& a, std::size_t rows, std::size_t cols, const char* name) {
    if (a.rows != rows || a.cols != cols) {
        std::ostringstream os;
        os << name << " must be " << rows << "x" << cols
           << ", got " << a.rows << "x" << a.cols;
        throw validation_error(os.str());
    }
    for (double v : a.data)
        if (!(v > 0.0) || !std::isfinite(v))
            throw validation_error(std::string(name) + " entries must be positive and finite");
}

} // namespace

void SystemConfig::validate() const {
    if (m_tx < 1) throw validation_error("m_tx must be >= 1");
    if (n_dest < 1) throw validation_error("n_dest must be >= 1");
    if (n_eve < 1) throw validation_error("n_eve must be >= 1");
    if (!(sigma2_sd > 0.0) || !std::isfinite(sigma2_sd))
        throw validation_error("sigma2_sd must be positive and finite");
    if (!(sigma2_se > 0.0) || !std::isfinite(sigma2_se))
        throw validation_error("sigma2_se must be positive and finite");
    if (!(snr > 0.0) || !std::isfinite(snr))
        throw validation_error("snr must be positive and finite");
    check_alpha(alpha_d, static_cast<std::size_t>(m_tx), static_cast<std::size_t>(n_dest), "alpha_d");
    check_alpha(alpha_e, static_cast<std::size_t>(m_tx), static_cast<std::size_t>(n_eve), "alpha_e");
}

SystemConfig make_iid_config(int m_tx, int n_dest, int n_eve, double mer, double snr) {
    if (!(mer > 0.0) || !std::isfinite(mer))
        throw validation_error("mer must be positive and finite");
    SystemConfig cfg;
    cfg.m_tx = m_tx;
    cfg.n_dest = n_dest;
    cfg.n_eve = n_eve;
    cfg.sigma2_se = 1.0;
    cfg.sigma2_sd = mer;
    cfg.snr = snr;
    cfg.alpha_d = Matrix(static_cast<std::size_t>(m_tx), static_cast<std::size_t>(n_dest), 1.0);
    cfg.alpha_e = Matrix(static_cast<std::size_t>(m_tx), static_cast<std::size_t>(n_eve), 1.0);
    cfg.validate();
    return cfg;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double x) {
    if (!(x > 0.0))
        throw validation_error("linear_to_db: need a positive value");
    return 10.0 * std::log10(x);
}

void sample_realization_into(const SystemConfig& cfg, Rng& rng, ChannelRealization& out) {
    const auto m = static_cast<std::size_t>(cfg.m_tx);
    const auto nd = static_cast<std::size_t>(cfg.n_dest);
    const auto ne = static_cast<std::size_t>(cfg.n_eve);
    if (out.g_d.rows != m || out.g_d.cols != nd)
        out.g_d = Matrix(m, nd);
    if (out.g_e.rows != m || out.g_e.cols != ne)
        out.g_e = Matrix(m, ne);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < nd; ++j)
            out.g_d.at(i, j) = rng.exponential(cfg.sigma2_sd * cfg.alpha_d.at(i, j));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < ne; ++j)
            out.g_e.at(i, j) = rng.exponential(cfg.sigma2_se * cfg.alpha_e.at(i, j));
}

ChannelRealization sample_realization(const SystemConfig& cfg, Rng& rng) {
    ChannelRealization r;
    sample_realization_into(cfg, rng, r);
    return r;
}

ChannelRealization sample_realization_gaussian(const SystemConfig& cfg, Rng& rng) {
    ChannelRealization r;
    const auto m = static_cast<std::size_t>(cfg.m_tx);
    const auto nd = static_cast<std::size_t>(cfg.n_dest);
    const auto ne = static_cast<std::size_t>(cfg.n_eve);
    r.g_d = Matrix(m, nd);
    r.g_e = Matrix(m, ne);
    auto draw = [&rng](double sigma2) {
        double re, im;
        rng.gaussian_pair(re, im);
        double s = std::sqrt(sigma2 / 2.0);
        re *= s;
        im *= s;
        return re * re + im * im;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < nd; ++j)
            r.g_d.at(i, j) = draw(cfg.sigma2_sd * cfg.alpha_d.at(i, j));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < ne; ++j)
            r.g_e.at(i, j) = draw(cfg.sigma2_se * cfg.alpha_e.at(i, j));
    return r;
}

namespace {

Matrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols,
                        const char* name) {
    if (!j.is_array())
        throw validation_error(std::string(name) + " must be an array of rows");
    Matrix m(rows, cols);
    if (j.size() != rows)
        throw validation_error(std::string(name) + ": wrong number of rows");
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw validation_error(std::string(name) + ": wrong row length");
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = row.at(k).get<double>();
    }
    return m;
}

} // namespace

SystemConfig parse_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("config parse error: ") + e.what());
    }
    SystemConfig cfg;
    try {
        cfg.m_tx = j.at("M").get<int>();
        cfg.n_dest = j.at("N_d").get<int>();
        cfg.n_eve = j.at("N_e").get<int>();
        bool explicit_gains = j.contains("sigma2_sd") && j.contains("sigma2_se");
        if (explicit_gains) {
            cfg.sigma2_sd = j.at("sigma2_sd").get<double>();
            cfg.sigma2_se = j.at("sigma2_se").get<double>();
        } else {
            cfg.sigma2_se = 1.0;
            cfg.sigma2_sd = db_to_linear(j.at("mer_db").get<double>());
        }
        cfg.snr = db_to_linear(j.value("snr_db", 10.0));
        if (cfg.m_tx < 1 || cfg.n_dest < 1 || cfg.n_eve < 1)
            throw validation_error("M, N_d, N_e must all be >= 1");
        auto m = static_cast<std::size_t>(cfg.m_tx);
        cfg.alpha_d = j.contains("alpha_d")
            ? matrix_from_json(j.at("alpha_d"), m, static_cast<std::size_t>(cfg.n_dest), "alpha_d")
            : Matrix(m, static_cast<std::size_t>(cfg.n_dest), 1.0);
        cfg.alpha_e = j.contains("alpha_e")
            ? matrix_from_json(j.at("alpha_e"), m, static_cast<std::size_t>(cfg.n_eve), "alpha_e")
            : Matrix(m, static_cast<std::size_t>(cfg.n_eve), 1.0);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("config field error: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

SystemConfig load_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw io_error("cannot open config file " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw io_error("error reading config file " + file.string());
    return parse_config(buf.str());
}

} // namespace secmimo
