#include <benchmark/benchmark.h>

#include "hetsim/energy_model.hpp"
#include "hetsim/sim_engine.hpp"

namespace {

void BM_TxEnergy(benchmark::State& state) {
  const hetsim::RadioParams radio;
  double d = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hetsim::tx_energy(radio.packet_bits, d, radio));
    d = d > 120.0 ? 0.0 : d + 0.37;
  }
}
BENCHMARK(BM_TxEnergy);

void BM_RunRound(benchmark::State& state) {
  hetsim::ScenarioConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.protocol = hetsim::ProtocolKind::deec;
  hetsim::Rng rng(7);
  const hetsim::Network fresh = hetsim::build_network(cfg, rng);
  hetsim::ElectionContext ctx;
  ctx.e_total = fresh.e_total;
  ctx.scope_size = cfg.n;
  ctx.r_estimate = 5000.0;
  ctx.e_avg = hetsim::average_energy(0, ctx);
  const hetsim::RoundSettings settings{cfg.radio, cfg.control_bits, cfg.avg_scope};
  std::int64_t r = 0;
  for (auto _ : state) {
    state.PauseTiming();
    hetsim::Network net = fresh;
    state.ResumeTiming();
    ctx.round = r++;
    benchmark::DoNotOptimize(hetsim::run_round(net, ctx.round, cfg.protocol, ctx, settings, rng));
  }
}
BENCHMARK(BM_RunRound)->Arg(100)->Arg(1000);

void BM_FullRun(benchmark::State& state) {
  hetsim::ScenarioConfig cfg;
  cfg.protocol = static_cast<hetsim::ProtocolKind>(state.range(0));
  for (auto _ : state) {
    auto result = hetsim::run_simulation(cfg);
    benchmark::DoNotOptimize(result.summary.rounds_simulated);
  }
}
BENCHMARK(BM_FullRun)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
