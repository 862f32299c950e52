#include "hetsim/output.hpp"

#include <cstdio>
#include <json.hpp>

#include "hetsim/error.hpp"

namespace hetsim {

namespace {

std::string sig9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

nlohmann::ordered_json optional_round(const std::optional<std::int64_t>& r) {
  if (r) return *r;
  return nullptr;
}

}  // namespace

void emit_round_csv(const std::vector<RoundMetrics>& trace, std::ostream& sink) {
  sink << kRoundCsvHeader << '\n';
  for (const RoundMetrics& m : trace) {
    sink << m.round << ',' << m.alive << ',' << m.dead << ',' << m.ch_count << ',' << sig9(m.energy_round) << ','
         << sig9(m.energy_cum) << ',' << m.packets_bs_round << ',' << m.packets_bs_cum << ',' << m.packets_ch_round
         << '\n';
  }
  if (!sink) throw IoError("failed writing round CSV");
}

std::string summary_json(const RunSummary& s) {
  nlohmann::ordered_json j;
  j["first_death_round"] = optional_round(s.first_death_round);
  j["last_death_round"] = optional_round(s.last_death_round);
  j["stable_region"] = s.stable_region;
  j["unstable_region"] = s.unstable_region;
  j["total_packets_bs"] = s.total_packets_bs;
  j["rounds_simulated"] = s.rounds_simulated;
  j["e_total_j"] = s.e_total;
  j["r_estimate"] = s.r_estimate;
  j["seed"] = s.seed;
  nlohmann::ordered_json cfg;
  for (const auto& [k, v] : config_entries(s.config_echo)) cfg[k] = v;
  j["config"] = cfg;
  return j.dump(2) + "\n";
}

}  // namespace hetsim
