#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hetsim/config.hpp"
#include "hetsim/energy_model.hpp"
#include "hetsim/field_layout.hpp"
#include "hetsim/protocol.hpp"
#include "hetsim/random.hpp"

namespace hetsim {

struct RoundMetrics {
  std::int64_t round = 0;
  int alive = 0;
  int dead = 0;
  int ch_count = 0;
  double energy_round = 0.0;
  double energy_cum = 0.0;
  std::int64_t packets_bs_round = 0;
  std::int64_t packets_bs_cum = 0;
  std::int64_t packets_ch_round = 0;
  /// Nodes that sent their frame straight to the BS this round.
  int direct_count = 0;

  friend bool operator==(const RoundMetrics&, const RoundMetrics&) = default;
};

struct RunSummary {
  std::optional<std::int64_t> first_death_round;
  std::optional<std::int64_t> last_death_round;
  std::int64_t stable_region = 0;
  std::int64_t unstable_region = 0;
  std::int64_t total_packets_bs = 0;
  std::int64_t rounds_simulated = 0;
  double e_total = 0.0;
  double r_estimate = 0.0;
  std::uint64_t seed = 0;
  ScenarioConfig config_echo;
};

struct Network {
  FieldLayout layout;
  std::vector<NodeState> nodes;
  double e_total = 0.0;
  /// Initial energy and population per static cluster.
  std::vector<double> cluster_energy;
  std::vector<int> cluster_population;

  int alive_count() const;
  double residual_energy() const;
};

/// Builds layout and nodes for a validated config, drawing placement from `rng`.
Network build_network(const ScenarioConfig& config, Rng& rng);

/// One election/association unit. cluster_id is -1 for the whole-field scope.
struct Scope {
  int cluster_id = -1;
  Rect bounds;
  std::vector<NodeState*> members;
};

/// LEACH/DEEC: one scope with all alive nodes. Ad-LEACH: one per cluster with
/// alive nodes; empty clusters are skipped.
std::vector<Scope> scope_of(ProtocolKind kind, const FieldLayout& layout, std::vector<NodeState>& nodes);

/// Static per-run settings consumed by run_round.
struct RoundSettings {
  RadioParams radio;
  double control_bits = 200.0;
  AverageScope avg_scope = AverageScope::global;
};

struct DebitRecord {
  std::int64_t round = 0;
  int node = 0;
  double requested = 0.0;
  double paid = 0.0;
  bool fatal = false;
};

/// Executes one full round: election, advertisement, association, one TDMA
/// data frame per member, aggregation and BS delivery, direct-to-BS fallback.
/// `ctx` carries the network-wide election inputs for this round. Each scope
/// draws from its own substream of `rng` keyed by (round, cluster).
/// If `log` is non-null every debit is appended to it.
RoundMetrics run_round(Network& net, std::int64_t round, ProtocolKind kind, const ElectionContext& ctx,
                       const RoundSettings& settings, const Rng& rng, std::vector<DebitRecord>* log = nullptr);

struct RunResult {
  std::vector<RoundMetrics> trace;
  RunSummary summary;
  /// Node states after the last simulated round.
  std::vector<NodeState> final_nodes;
};

/// Validates the config, then simulates until every node is dead or
/// max_rounds rounds have run. Output depends only on (config, config.seed).
RunResult run_simulation(const ScenarioConfig& config);

/// Same, with the per-round debit log captured (test hook).
RunResult run_simulation(const ScenarioConfig& config, std::vector<DebitRecord>* log);

/// First round whose cumulative energy reaches `threshold` (relative slack
/// 1e-9 for float accumulation), if any.
std::optional<std::int64_t> energy_reach_round(const std::vector<RoundMetrics>& trace, double threshold);

}  // namespace hetsim
