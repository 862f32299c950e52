#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hetsim/energy_model.hpp"
#include "hetsim/field_layout.hpp"
#include "hetsim/protocol.hpp"

namespace hetsim {

/// How the lifetime estimate R is obtained.
enum class RMode {
  measured,  // R = E_total / energy of a discarded dry run of round 0
  fixed,     // R given directly
  analytic,  // R = E_total / configured per-round energy
};

/// Population the average-energy estimate is taken over for Ad-LEACH.
enum class AverageScope {
  global,   // network E_total over N
  cluster,  // cluster initial energy over cluster population
};

struct ScenarioConfig {
  ProtocolKind protocol = ProtocolKind::adleach;
  int n = 100;
  double field_w = 100.0;
  double field_h = 50.0;
  int q = 4;
  double m = 0.1;
  double a = 0.0;
  double e0 = 0.5;
  double p_opt = 0.1;
  RadioParams radio;
  double control_bits = 200.0;
  std::int64_t max_rounds = 100000;
  std::uint64_t seed = 1;
  RMode r_mode = RMode::measured;
  double r_fixed = 5000.0;
  double e_round = 0.01;
  AverageScope avg_scope = AverageScope::global;
  bool r_online = false;

  HeterogeneityConfig heterogeneity() const { return {m, a, e0}; }

  /// Throws ConfigError naming the first out-of-domain key.
  void validate() const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Ordered (key, value) pairs in the flat config syntax; used for echoes and round trips.
std::vector<std::pair<std::string, std::string>> config_entries(const ScenarioConfig& config);

/// Flat `key = value` text, one entry per line.
std::string serialize_config(const ScenarioConfig& config);

/// Applies one key/value onto config. Throws ConfigError for unknown keys or
/// malformed values; domain checks happen in validate().
void apply_setting(ScenarioConfig& config, const std::string& key, const std::string& value, int line = 0);

/// Parses flat key-value text (`#` comments, blank lines allowed) on top of
/// `base`, then validates. Unknown keys are errors.
ScenarioConfig parse_config_text(const std::string& text, ScenarioConfig base = {});

ScenarioConfig parse_config_file(const std::string& path, ScenarioConfig base = {});

std::string_view to_string(RMode mode);
std::string_view to_string(AverageScope scope);

}  // namespace hetsim
