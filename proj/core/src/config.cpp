#include "hetsim/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "hetsim/error.hpp"

namespace hetsim {

std::string_view to_string(RMode mode) {
  switch (mode) {
    case RMode::measured:
      return "measured";
    case RMode::fixed:
      return "fixed";
    case RMode::analytic:
      return "analytic";
  }
  return "unknown";
}

std::string_view to_string(AverageScope scope) { return scope == AverageScope::global ? "global" : "cluster"; }

void ScenarioConfig::validate() const {
  if (n < 1) throw ConfigError("nodes must be >= 1", "nodes");
  if (!(field_w > 0.0) || !std::isfinite(field_w)) throw ConfigError("field_w must be > 0", "field_w");
  if (!(field_h > 0.0) || !std::isfinite(field_h)) throw ConfigError("field_h must be > 0", "field_h");
  if (q < 1) throw ConfigError("clusters must be >= 1", "clusters");
  heterogeneity().validate();
  if (!(p_opt > 0.0 && p_opt <= 1.0)) throw ConfigError("p_opt must lie in (0, 1]", "p_opt");
  radio.validate();
  if (!(control_bits >= 0.0) || !std::isfinite(control_bits)) throw ConfigError("control_bits must be >= 0", "control_bits");
  if (max_rounds < 0) throw ConfigError("max_rounds must be >= 0", "max_rounds");
  if (!(r_fixed > 0.0) || !std::isfinite(r_fixed)) throw ConfigError("r_fixed must be > 0", "r_fixed");
  if (!(e_round > 0.0) || !std::isfinite(e_round)) throw ConfigError("e_round must be > 0", "e_round");
}

namespace {

// Shortest text that parses back to the same double.
std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(const std::string& key, const std::string& value, int line) {
  T out{};
  const char* first = value.data();
  const char* last = first + value.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last) {
    std::string where = line > 0 ? "line " + std::to_string(line) + ": " : "";
    throw ConfigError(where + key + ": malformed number '" + value + "'", key, line);
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value, int line) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  std::string where = line > 0 ? "line " + std::to_string(line) + ": " : "";
  throw ConfigError(where + key + ": expected true/false, got '" + value + "'", key, line);
}

}  // namespace

std::vector<std::pair<std::string, std::string>> config_entries(const ScenarioConfig& c) {
  return {
      {"protocol", std::string(to_string(c.protocol))},
      {"nodes", std::to_string(c.n)},
      {"field_w", format_double(c.field_w)},
      {"field_h", format_double(c.field_h)},
      {"clusters", std::to_string(c.q)},
      {"m", format_double(c.m)},
      {"a", format_double(c.a)},
      {"e0", format_double(c.e0)},
      {"p_opt", format_double(c.p_opt)},
      {"e_elec", format_double(c.radio.e_elec)},
      {"eps_fs", format_double(c.radio.eps_fs)},
      {"eps_mp", format_double(c.radio.eps_mp)},
      {"e_da", format_double(c.radio.e_da)},
      {"packet_bits", format_double(c.radio.packet_bits)},
      {"control_bits", format_double(c.control_bits)},
      {"max_rounds", std::to_string(c.max_rounds)},
      {"seed", std::to_string(c.seed)},
      {"r_mode", std::string(to_string(c.r_mode))},
      {"r_fixed", format_double(c.r_fixed)},
      {"e_round", format_double(c.e_round)},
      {"avg_scope", std::string(to_string(c.avg_scope))},
      {"r_online", c.r_online ? "true" : "false"},
  };
}

std::string serialize_config(const ScenarioConfig& config) {
  std::string out;
  for (const auto& [k, v] : config_entries(config)) out += k + " = " + v + "\n";
  return out;
}

void apply_setting(ScenarioConfig& c, const std::string& key, const std::string& value, int line) {
  auto num = [&](auto& field) { field = parse_number<std::remove_reference_t<decltype(field)>>(key, value, line); };
  const std::string where = line > 0 ? "line " + std::to_string(line) + ": " : "";

  if (key == "protocol") {
    auto p = parse_protocol(value);
    if (!p) throw ConfigError(where + "protocol: unknown protocol '" + value + "'", key, line);
    c.protocol = *p;
  } else if (key == "nodes") {
    num(c.n);
  } else if (key == "field_w") {
    num(c.field_w);
  } else if (key == "field_h") {
    num(c.field_h);
  } else if (key == "clusters") {
    num(c.q);
  } else if (key == "m") {
    num(c.m);
  } else if (key == "a") {
    num(c.a);
  } else if (key == "e0") {
    num(c.e0);
  } else if (key == "p_opt") {
    num(c.p_opt);
  } else if (key == "e_elec") {
    num(c.radio.e_elec);
  } else if (key == "eps_fs") {
    num(c.radio.eps_fs);
  } else if (key == "eps_mp") {
    num(c.radio.eps_mp);
  } else if (key == "e_da") {
    num(c.radio.e_da);
  } else if (key == "packet_bits") {
    num(c.radio.packet_bits);
  } else if (key == "control_bits") {
    num(c.control_bits);
  } else if (key == "max_rounds") {
    num(c.max_rounds);
  } else if (key == "seed") {
    num(c.seed);
  } else if (key == "r_mode") {
    if (value == "measured") c.r_mode = RMode::measured;
    else if (value == "fixed") c.r_mode = RMode::fixed;
    else if (value == "analytic") c.r_mode = RMode::analytic;
    else throw ConfigError(where + "r_mode: expected measured|fixed|analytic, got '" + value + "'", key, line);
  } else if (key == "r_fixed") {
    num(c.r_fixed);
  } else if (key == "e_round") {
    num(c.e_round);
  } else if (key == "avg_scope") {
    if (value == "global") c.avg_scope = AverageScope::global;
    else if (value == "cluster") c.avg_scope = AverageScope::cluster;
    else throw ConfigError(where + "avg_scope: expected global|cluster, got '" + value + "'", key, line);
  } else if (key == "r_online") {
    c.r_online = parse_bool(key, value, line);
  } else {
    throw ConfigError(where + "unknown key '" + key + "'", key, line);
  }
}

ScenarioConfig parse_config_text(const std::string& text, ScenarioConfig base) {
  std::map<std::string, int> key_lines;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(std::string_view(raw).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'", {}, line);
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(line) + ": missing key", {}, line);
    apply_setting(base, key, value, line);
    key_lines[key] = line;
  }

  try {
    base.validate();
  } catch (const ConfigError& e) {
    auto it = key_lines.find(e.key());
    if (it == key_lines.end()) throw;
    throw ConfigError("line " + std::to_string(it->second) + ": " + e.what(), e.key(), it->second);
  }
  return base;
}

ScenarioConfig parse_config_file(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), std::move(base));
}

}  // namespace hetsim
