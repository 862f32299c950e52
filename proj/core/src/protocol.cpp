#include "hetsim/protocol.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "hetsim/error.hpp"

namespace hetsim {

std::string_view to_string(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::leach:
      return "leach";
    case ProtocolKind::deec:
      return "deec";
    case ProtocolKind::adleach:
      return "adleach";
  }
  return "unknown";
}

std::optional<ProtocolKind> parse_protocol(std::string_view name) {
  std::string s;
  for (char c : name) {
    if (c == '-' || c == '_') continue;
    s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (s == "leach") return ProtocolKind::leach;
  if (s == "deec") return ProtocolKind::deec;
  if (s == "adleach") return ProtocolKind::adleach;
  return std::nullopt;
}

double average_energy(std::int64_t round, const ElectionContext& ctx) {
  const double ramp = 1.0 - static_cast<double>(round) / ctx.r_estimate;
  const double avg = ctx.e_total / ctx.scope_size * ramp;
  return std::max(avg, kAverageEnergyFloor);
}

std::optional<double> estimate_R(double e_total, double e_round) {
  if (!(e_round > 0.0)) return std::nullopt;
  return e_total / e_round;
}

namespace {

double clamp_probability(double p) {
  if (!(p > 0.0)) return std::numeric_limits<double>::min();
  return std::min(p, 1.0);
}

}  // namespace

double reference_probability(const NodeState& node, const ElectionContext& ctx) {
  if (!node.alive) throw ContractViolation("reference_probability on dead node " + std::to_string(node.id));
  const double boost = node.kind == NodeKind::advanced ? 1.0 + ctx.a : 1.0;
  const double p = ctx.p_opt * boost * node.e_residual / ((1.0 + ctx.a * ctx.m) * ctx.e_avg);
  return clamp_probability(p);
}

double leach_probability(const NodeState& node, double p_opt) {
  if (!node.alive) throw ContractViolation("leach_probability on dead node " + std::to_string(node.id));
  return p_opt;
}

std::int64_t epoch_length(double p) {
  const double len = std::round(1.0 / p);
  // Vanishing probabilities would overflow; such nodes are effectively never re-eligible anyway.
  if (!(len < 4.0e18)) return std::int64_t{4'000'000'000'000'000'000};
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(len));
}

std::int64_t next_epoch_start(double p, std::int64_t round) {
  const std::int64_t len = epoch_length(p);
  return (round / len + 1) * len;
}

double election_threshold(double p, std::int64_t round, bool eligible) {
  if (!eligible) return 0.0;
  const std::int64_t phase = round % epoch_length(p);
  const double denom = 1.0 - p * static_cast<double>(phase);
  if (denom <= 0.0) return 1.0;
  return std::min(p / denom, 1.0);
}

double election_probability(const NodeState& node, const ElectionContext& ctx, ProtocolKind kind) {
  if (kind == ProtocolKind::leach) return leach_probability(node, ctx.p_opt);
  return reference_probability(node, ctx);
}

std::vector<int> elect_cluster_heads(std::span<NodeState* const> scope, const ElectionContext& ctx, ProtocolKind kind,
                                     Rng& rng) {
  std::vector<int> heads;
  for (NodeState* node : scope) {
    if (!node->alive) continue;
    const double p = election_probability(*node, ctx, kind);
    const double t = election_threshold(p, ctx.round, is_eligible(*node, ctx.round));
    const double u = rng.uniform01();
    if (u < t) {
      node->is_ch_this_round = true;
      node->ineligible_until = next_epoch_start(p, ctx.round);
      heads.push_back(node->id);
    }
  }
  return heads;
}

}  // namespace hetsim
