#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hetsim/field_layout.hpp"
#include "hetsim/random.hpp"

namespace hetsim {

enum class ProtocolKind { leach, deec, adleach };

std::string_view to_string(ProtocolKind kind);
/// Accepts "leach", "deec", "adleach" (case-insensitive, "ad-leach" too).
std::optional<ProtocolKind> parse_protocol(std::string_view name);

/// Lower bound applied to the estimated average energy once the linear
/// lifetime ramp reaches zero.
inline constexpr double kAverageEnergyFloor = 1e-9;

/// Everything a node needs to compute its election probability in round r.
struct ElectionContext {
  std::int64_t round = 0;
  double p_opt = 0.1;
  double m = 0.1;
  double a = 0.0;
  double e_total = 0.0;      // energy the average is taken over [J]
  double r_estimate = 1.0;   // R, estimated network lifetime in rounds
  double e_avg = 0.0;        // Ebar(r) [J]
  int scope_size = 1;        // node count e_total is spread over
};

/// Ebar(r) = e_total/scope_size * (1 - r/R), floored at kAverageEnergyFloor.
double average_energy(std::int64_t round, const ElectionContext& ctx);

/// R = e_total / e_round; nullopt when e_round <= 0 (caller falls back to a bootstrap R).
std::optional<double> estimate_R(double e_total, double e_round);

/// Two-level DEEC reference probability, clamped into (0, 1].
double reference_probability(const NodeState& node, const ElectionContext& ctx);

/// LEACH ignores energy and node kind; returns p_opt for any living node.
double leach_probability(const NodeState& node, double p_opt);

/// Epoch length round(1/p) in rounds, at least 1.
std::int64_t epoch_length(double p);

/// First round of the epoch after the one containing `round`, for epoch
/// length round(1/p). A node elected CH stays out of G until then.
std::int64_t next_epoch_start(double p, std::int64_t round);

/// T(s) = p / (1 - p (r mod round(1/p))), clamped to <= 1; 0 when not eligible.
double election_threshold(double p, std::int64_t round, bool eligible);

inline bool is_eligible(const NodeState& node, std::int64_t round) { return round >= node.ineligible_until; }

/// Election probability of one node under the given protocol.
double election_probability(const NodeState& node, const ElectionContext& ctx, ProtocolKind kind);

/// Runs one election over the given scope. Each node draws u ~ U[0,1) from
/// `rng` in scope order and becomes CH iff u < T. Winners get
/// is_ch_this_round set and sit out the rest of their current epoch
/// (ineligible_until = next_epoch_start(p_i, round)).
/// Returns the winners' ids in scope order.
std::vector<int> elect_cluster_heads(std::span<NodeState* const> scope, const ElectionContext& ctx, ProtocolKind kind,
                                     Rng& rng);

}  // namespace hetsim
