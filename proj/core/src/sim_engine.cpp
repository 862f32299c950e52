#include "hetsim/sim_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hetsim {

namespace {

// Substream identifiers under the run's root seed.
constexpr std::uint64_t kPlacementStream = 1;
constexpr std::uint64_t kElectionStream = 2;
constexpr std::uint64_t kDryRunStream = 3;

/// Debits and their bookkeeping for one round.
class Ledger {
 public:
  Ledger(std::int64_t round, std::vector<DebitRecord>* log) : round_(round), log_(log) {}

  bool charge(NodeState& node, double amount) {
    const EnergyDebit d = debit(node, amount);
    spent_ += d.paid;
    if (log_ != nullptr) log_->push_back({round_, node.id, d.requested, d.paid, d.fatal});
    return d.ok();
  }

  double spent() const { return spent_; }

 private:
  std::int64_t round_;
  std::vector<DebitRecord>* log_;
  double spent_ = 0.0;
};

ElectionContext scope_context(const Network& net, const ElectionContext& global, const Scope& scope,
                              AverageScope avg_scope) {
  if (avg_scope == AverageScope::global || scope.cluster_id < 0) return global;
  ElectionContext ctx = global;
  const auto c = static_cast<std::size_t>(scope.cluster_id);
  ctx.e_total = net.cluster_energy[c];
  ctx.scope_size = std::max(1, net.cluster_population[c]);
  ctx.e_avg = average_energy(ctx.round, ctx);
  return ctx;
}

struct Head {
  NodeState* node = nullptr;
  std::vector<NodeState*> members;
};

}  // namespace

int Network::alive_count() const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const NodeState& s) { return s.alive; }));
}

double Network::residual_energy() const {
  double sum = 0.0;
  for (const NodeState& s : nodes) sum += s.e_residual;
  return sum;
}

Network build_network(const ScenarioConfig& config, Rng& rng) {
  Network net;
  net.layout = make_layout(config.field_w, config.field_h, config.q);
  net.nodes = place_nodes(net.layout, config.n, config.heterogeneity(), rng);
  net.e_total = total_initial_energy(net.nodes);
  net.cluster_energy.assign(net.layout.q(), 0.0);
  net.cluster_population.assign(net.layout.q(), 0);
  for (const NodeState& s : net.nodes) {
    const auto c = static_cast<std::size_t>(s.cluster_id);
    net.cluster_energy[c] += s.e_init;
    net.cluster_population[c] += 1;
  }
  return net;
}

std::vector<Scope> scope_of(ProtocolKind kind, const FieldLayout& layout, std::vector<NodeState>& nodes) {
  std::vector<Scope> scopes;
  if (kind != ProtocolKind::adleach) {
    Scope all{-1, layout.field(), {}};
    for (NodeState& s : nodes)
      if (s.alive) all.members.push_back(&s);
    if (!all.members.empty()) scopes.push_back(std::move(all));
    return scopes;
  }

  std::vector<Scope> per_cluster(layout.q());
  for (std::size_t c = 0; c < layout.q(); ++c) per_cluster[c] = {static_cast<int>(c), layout.clusters[c], {}};
  for (NodeState& s : nodes)
    if (s.alive) per_cluster[static_cast<std::size_t>(s.cluster_id)].members.push_back(&s);
  for (Scope& sc : per_cluster)
    if (!sc.members.empty()) scopes.push_back(std::move(sc));
  return scopes;
}

RoundMetrics run_round(Network& net, std::int64_t round, ProtocolKind kind, const ElectionContext& ctx,
                       const RoundSettings& settings, const Rng& rng, std::vector<DebitRecord>* log) {
  Ledger ledger(round, log);
  const RadioParams& radio = settings.radio;
  const Point bs = net.layout.bs_position;
  RoundMetrics out;
  out.round = round;

  for (NodeState& s : net.nodes) s.is_ch_this_round = false;

  auto send_direct = [&](NodeState& s) {
    ++out.direct_count;
    if (ledger.charge(s, tx_energy(radio.packet_bits, distance(s.position, bs), radio))) ++out.packets_bs_round;
  };

  for (Scope& scope : scope_of(kind, net.layout, net.nodes)) {
    // 1. election
    const ElectionContext sctx = scope_context(net, ctx, scope, settings.avg_scope);
    Rng draw = rng.derive(kElectionStream, static_cast<std::uint64_t>(round),
                          static_cast<std::uint64_t>(scope.cluster_id + 1));
    const std::vector<int> elected = elect_cluster_heads(scope.members, sctx, kind, draw);
    out.ch_count += static_cast<int>(elected.size());

    // 2. advertisement over the scope's covering radius
    const double ad_radius = scope.bounds.circumradius();
    std::vector<Head> heads;
    for (int id : elected) {
      NodeState& ch = net.nodes[static_cast<std::size_t>(id)];
      if (ledger.charge(ch, tx_energy(settings.control_bits, ad_radius, radio))) heads.push_back({&ch, {}});
    }
    // every listener hears each advertisement that went out
    for (std::size_t i = 0; i < heads.size(); ++i) {
      for (NodeState* s : scope.members)
        if (s->alive && !s->is_ch_this_round) ledger.charge(*s, rx_energy(settings.control_bits, radio));
    }

    std::vector<NodeState*> orphans;
    // 3. association: nearest advertised CH, ties to the lowest id (heads are in id order)
    for (NodeState* s : scope.members) {
      if (!s->alive || s->is_ch_this_round) continue;
      Head* best = nullptr;
      double best_d = std::numeric_limits<double>::infinity();
      for (Head& h : heads) {
        if (!h.node->alive) continue;
        const double d = distance(s->position, h.node->position);
        if (d < best_d) {
          best_d = d;
          best = &h;
        }
      }
      if (best == nullptr) {
        orphans.push_back(s);
        continue;
      }
      if (!ledger.charge(*s, tx_energy(settings.control_bits, best_d, radio))) continue;
      if (best->node->alive) ledger.charge(*best->node, rx_energy(settings.control_bits, radio));
      best->members.push_back(s);
    }

    // 4. steady state: one TDMA frame per member, then fuse and forward
    for (Head& h : heads) {
      NodeState& ch = *h.node;
      if (!ch.alive) {
        // CH lost before its schedule started; its members fall back to the BS.
        for (NodeState* s : h.members)
          if (s->alive) orphans.push_back(s);
        continue;
      }
      int received = 0;
      for (NodeState* s : h.members) {
        if (!s->alive) continue;
        if (!ledger.charge(*s, tx_energy(radio.packet_bits, distance(s->position, ch.position), radio))) continue;
        if (!ch.alive) continue;
        if (ledger.charge(ch, rx_energy(radio.packet_bits, radio))) {
          ++received;
          ++out.packets_ch_round;
        }
      }
      if (!ch.alive) continue;
      if (!ledger.charge(ch, aggregate_energy(radio.packet_bits, received + 1, radio))) continue;
      if (ledger.charge(ch, tx_energy(radio.packet_bits, distance(ch.position, bs), radio))) ++out.packets_bs_round;
    }

    // 5. nodes without a usable CH report straight to the BS
    std::sort(orphans.begin(), orphans.end(), [](const NodeState* x, const NodeState* y) { return x->id < y->id; });
    for (NodeState* s : orphans)
      if (s->alive) send_direct(*s);
  }

  out.alive = net.alive_count();
  out.dead = static_cast<int>(net.nodes.size()) - out.alive;
  out.energy_round = ledger.spent();
  return out;
}

RunResult run_simulation(const ScenarioConfig& config) { return run_simulation(config, nullptr); }

RunResult run_simulation(const ScenarioConfig& config, std::vector<DebitRecord>* log) {
  config.validate();

  const Rng root(config.seed);
  Rng placement = root.derive(kPlacementStream);
  Network net = build_network(config, placement);
  const RoundSettings settings{config.radio, config.control_bits, config.avg_scope};
  const Rng elections = root.derive(kElectionStream);

  ElectionContext ctx;
  ctx.p_opt = config.p_opt;
  ctx.m = config.m;
  ctx.a = config.a;
  ctx.e_total = net.e_total;
  ctx.scope_size = config.n;

  double r_estimate = config.r_fixed;
  switch (config.r_mode) {
    case RMode::fixed:
      break;
    case RMode::analytic:
      r_estimate = estimate_R(net.e_total, config.e_round).value_or(config.r_fixed);
      break;
    case RMode::measured: {
      // Dry run of round 0 on a throwaway copy; Ebar(0) does not depend on R.
      Network probe = net;
      ElectionContext c0 = ctx;
      c0.round = 0;
      c0.r_estimate = config.r_fixed;
      c0.e_avg = average_energy(0, c0);
      const RoundMetrics m0 = run_round(probe, 0, config.protocol, c0, settings, root.derive(kDryRunStream));
      r_estimate = estimate_R(net.e_total, m0.energy_round).value_or(config.r_fixed);
      break;
    }
  }

  RunResult result;
  RunSummary& summary = result.summary;
  summary.seed = config.seed;
  summary.config_echo = config;
  summary.e_total = net.e_total;
  summary.r_estimate = r_estimate;

  double energy_cum = 0.0;
  std::int64_t packets_cum = 0;
  int prev_dead = 0;
  for (std::int64_t r = 0; r < config.max_rounds && net.alive_count() > 0; ++r) {
    ctx.round = r;
    ctx.r_estimate = r_estimate;
    ctx.e_avg = average_energy(r, ctx);

    RoundMetrics m = run_round(net, r, config.protocol, ctx, settings, elections, log);
    energy_cum += m.energy_round;
    packets_cum += m.packets_bs_round;
    m.energy_cum = energy_cum;
    m.packets_bs_cum = packets_cum;

    if (m.dead > 0 && prev_dead == 0) summary.first_death_round = r;
    if (m.alive == 0) summary.last_death_round = r;
    prev_dead = m.dead;
    result.trace.push_back(m);

    if (config.r_online && energy_cum > 0.0) r_estimate = net.e_total * static_cast<double>(r + 1) / energy_cum;
  }

  result.final_nodes = std::move(net.nodes);
  summary.rounds_simulated = static_cast<std::int64_t>(result.trace.size());
  summary.total_packets_bs = packets_cum;
  summary.stable_region = summary.first_death_round.value_or(summary.rounds_simulated);
  if (summary.first_death_round) {
    const std::int64_t end = summary.last_death_round.value_or(summary.rounds_simulated);
    summary.unstable_region = end - *summary.first_death_round;
  }
  return result;
}

std::optional<std::int64_t> energy_reach_round(const std::vector<RoundMetrics>& trace, double threshold) {
  const double target = threshold * (1.0 - 1e-9);
  for (const RoundMetrics& m : trace)
    if (m.energy_cum >= target) return m.round;
  return std::nullopt;
}

}  // namespace hetsim
