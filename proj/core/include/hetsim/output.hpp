#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hetsim/sim_engine.hpp"

namespace hetsim {

inline constexpr const char* kRoundCsvHeader =
    "round,alive,dead,ch_count,energy_round_j,energy_cum_j,packets_bs_round,packets_bs_cum,packets_ch_round";

/// Per-round CSV: frozen header, one row per round, 9 significant digits, '\n' line ends.
void emit_round_csv(const std::vector<RoundMetrics>& trace, std::ostream& sink);

/// Run summary with a full config echo, pretty-printed JSON.
std::string summary_json(const RunSummary& summary);

}  // namespace hetsim
