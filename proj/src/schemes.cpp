#include "secmimo/schemes.hpp"
#include "secmimo/errors.hpp"

#include <cmath>
#include <sstream>

namespace secmimo {

namespace {

constexpr double kInvLn2 = 1.4426950408889634073599246810019;

double log2_1p(double x) { return std::log1p(x) * kInvLn2; }

void check_shapes(const SystemConfig& cfg, const ChannelRealization& r) {
    const auto m = static_cast<std::size_t>(cfg.m_tx);
    if (r.g_d.rows != m || r.g_d.cols != static_cast<std::size_t>(cfg.n_dest)
        || r.g_e.rows != m || r.g_e.cols != static_cast<std::size_t>(cfg.n_eve)) {
        std::ostringstream os;
        os << "realization shape mismatch: g_d " << r.g_d.rows << "x" << r.g_d.cols
           << ", g_e " << r.g_e.rows << "x" << r.g_e.cols << " for m_tx=" << cfg.m_tx
           << " n_dest=" << cfg.n_dest << " n_eve=" << cfg.n_eve;
        throw validation_error(os.str());
    }
}

double row_sum(const Matrix& g, std::size_t i) {
    double s = 0.0;
    for (std::size_t j = 0; j < g.cols; ++j)
        s += g.at(i, j);
    return s;
}

} // namespace

RatePair stt_rates(const SystemConfig& cfg, const ChannelRealization& r) {
    cfg.validate();
    check_shapes(cfg, r);
    double td = 0.0, te = 0.0;
    for (std::size_t i = 0; i < r.g_d.rows; ++i) {
        td += row_sum(r.g_d, i);
        te += row_sum(r.g_e, i);
    }
    double share = cfg.snr / static_cast<double>(cfg.m_tx);
    return {log2_1p(share * td), log2_1p(share * te)};
}

RatePair per_antenna_rates(const SystemConfig& cfg, const ChannelRealization& r, int i) {
    cfg.validate();
    check_shapes(cfg, r);
    if (i < 0 || i >= cfg.m_tx) {
        std::ostringstream os;
        os << "antenna index " << i << " out of range [0, " << cfg.m_tx << ")";
        throw validation_error(os.str());
    }
    auto ii = static_cast<std::size_t>(i);
    return {log2_1p(cfg.snr * row_sum(r.g_d, ii)), log2_1p(cfg.snr * row_sum(r.g_e, ii))};
}

int oas_select(const SystemConfig& cfg, const ChannelRealization& r) {
    cfg.validate();
    check_shapes(cfg, r);
    int best = 0;
    double best_ratio = -1.0;
    for (int i = 0; i < cfg.m_tx; ++i) {
        auto ii = static_cast<std::size_t>(i);
        double ratio = (1.0 + cfg.snr * row_sum(r.g_d, ii))
                     / (1.0 + cfg.snr * row_sum(r.g_e, ii));
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best = i;
        }
    }
    return best;
}

int sas_select(const SystemConfig& cfg, const ChannelRealization& r) {
    cfg.validate();
    check_shapes(cfg, r);
    int best = 0;
    double best_sum = -1.0;
    for (int i = 0; i < cfg.m_tx; ++i) {
        double s = row_sum(r.g_d, static_cast<std::size_t>(i));
        if (s > best_sum) {
            best_sum = s;
            best = i;
        }
    }
    return best;
}

bool zero_secrecy_event(SchemeKind scheme, const SystemConfig& cfg, const ChannelRealization& r) {
    cfg.validate();
    check_shapes(cfg, r);
    const auto m = static_cast<std::size_t>(cfg.m_tx);
    switch (scheme) {
    case SchemeKind::STT: {
        // Both rates see the same SNR scale, so the event reduces to the
        // aggregate channel comparison.
        double td = 0.0, te = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            td += row_sum(r.g_d, i);
            te += row_sum(r.g_e, i);
        }
        return td < te;
    }
    case SchemeKind::OAS: {
        // The best ratio is below one iff every antenna's ratio is, which is
        // an SNR-free statement about the channel sums.
        for (std::size_t i = 0; i < m; ++i)
            if (!(row_sum(r.g_d, i) < row_sum(r.g_e, i)))
                return false;
        return true;
    }
    case SchemeKind::SAS: {
        std::size_t best = 0;
        double best_d = -1.0, best_e = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double d = row_sum(r.g_d, i);
            if (d > best_d) {
                best_d = d;
                best_e = row_sum(r.g_e, i);
                best = i;
            }
        }
        (void)best;
        return best_d < best_e;
    }
    }
    throw validation_error("unknown scheme");
}

} // namespace secmimo
