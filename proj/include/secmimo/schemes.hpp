#pragma once

#include "secmimo/model.hpp"

namespace secmimo {

struct RatePair {
    double main = 0.0;    // bits/s/Hz on the source-destination link
    double wiretap = 0.0; // bits/s/Hz on the source-eavesdropper link
};

// All-antenna transmission: power is split across the m_tx antennas and the
// per-link SNRs add up at each receiver.
RatePair stt_rates(const SystemConfig& cfg, const ChannelRealization& r);

// Rates when only antenna i transmits at full power.
RatePair per_antenna_rates(const SystemConfig& cfg, const ChannelRealization& r, int i);

// Antenna maximizing the ratio (1 + snr * sum_d) / (1 + snr * sum_e); needs
// both channels' CSI. Ties resolve to the lowest index.
int oas_select(const SystemConfig& cfg, const ChannelRealization& r);

// Antenna maximizing the destination channel sum alone (no eavesdropper CSI).
int sas_select(const SystemConfig& cfg, const ChannelRealization& r);

// Whether the secrecy capacity is zero for this realization, i.e. the chosen
// transmission yields a main rate no better than the wiretap rate. Evaluated
// on channel sums only, so the outcome is independent of cfg.snr; exact ties
// count as a nonzero capacity (false).
bool zero_secrecy_event(SchemeKind scheme, const SystemConfig& cfg, const ChannelRealization& r);

} // namespace secmimo
