// Acceptance suite: runs every exit criterion and prints one PASS/FAIL line each.
// Usage: hetsim_acceptance [--only NAME] [--seeds N]

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hetsim/energy_model.hpp"
#include "hetsim/field_layout.hpp"
#include "hetsim/output.hpp"
#include "hetsim/protocol.hpp"
#include "hetsim/sim_engine.hpp"
#include "oracles.hpp"

using namespace hetsim;

namespace {

constexpr std::int64_t kNever = std::numeric_limits<std::int64_t>::max();
constexpr double kOrderFraction = 0.90;
constexpr ProtocolKind kProtocols[] = {ProtocolKind::leach, ProtocolKind::deec, ProtocolKind::adleach};

struct Outcome {
  std::int64_t first_death = kNever;
  std::int64_t last_death = kNever;
  std::int64_t energy_reach = kNever;  // round energy_cum reaches E_total
  std::int64_t packets_bs = 0;
  double conservation_error = 0.0;     // relative
  bool monotone = true;
};

using SeedTable = std::map<ProtocolKind, std::vector<Outcome>>;

Outcome evaluate(const ScenarioConfig& cfg) {
  const RunResult run = run_simulation(cfg);
  Outcome o;
  o.first_death = run.summary.first_death_round.value_or(kNever);
  o.last_death = run.summary.last_death_round.value_or(kNever);
  o.energy_reach = energy_reach_round(run.trace, run.summary.e_total).value_or(kNever);
  o.packets_bs = run.summary.total_packets_bs;

  double residual = 0.0;
  for (const NodeState& s : run.final_nodes) residual += s.e_residual;
  const double spent = run.trace.empty() ? 0.0 : run.trace.back().energy_cum;
  o.conservation_error = std::abs(spent + residual - run.summary.e_total) / run.summary.e_total;

  int prev = 0;
  for (const RoundMetrics& m : run.trace) {
    if (m.dead < prev || m.alive + m.dead != cfg.n) o.monotone = false;
    prev = m.dead;
  }
  return o;
}

SeedTable sweep(double m, double a, int seeds) {
  SeedTable table;
  for (ProtocolKind p : kProtocols) {
    for (int s = 1; s <= seeds; ++s) {
      ScenarioConfig cfg;
      cfg.protocol = p;
      cfg.m = m;
      cfg.a = a;
      cfg.seed = static_cast<std::uint64_t>(s);
      table[p].push_back(evaluate(cfg));
    }
  }
  return table;
}

template <typename F>
double median_of(const std::vector<Outcome>& runs, F field) {
  std::vector<double> v;
  for (const Outcome& o : runs) {
    const auto x = field(o);
    v.push_back(x == kNever ? std::numeric_limits<double>::infinity() : static_cast<double>(x));
  }
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

/// Fraction of seeds where field(LEACH) < field(DEEC) < field(Ad-LEACH).
template <typename F>
double ordered_fraction(const SeedTable& t, F field) {
  const auto& l = t.at(ProtocolKind::leach);
  const auto& d = t.at(ProtocolKind::deec);
  const auto& a = t.at(ProtocolKind::adleach);
  int ok = 0;
  for (std::size_t i = 0; i < l.size(); ++i) ok += field(l[i]) < field(d[i]) && field(d[i]) < field(a[i]);
  return static_cast<double>(ok) / static_cast<double>(l.size());
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

struct Band {
  double lo, hi;
  bool contains(double v) const { return v >= lo && v <= hi; }
};

struct Criterion {
  std::string name;
  std::function<bool(std::ostringstream&)> check;
};

class Suite {
 public:
  explicit Suite(int seeds) : seeds_(seeds) {}

  const SeedTable& base() {
    if (base_.empty()) base_ = sweep(0.1, 0.0, seeds_);
    return base_;
  }
  const SeedTable& hetero() {
    if (hetero_.empty()) hetero_ = sweep(0.5, 4.0, seeds_);
    return hetero_;
  }
  int seeds() const { return seeds_; }

 private:
  int seeds_;
  SeedTable base_, hetero_;
};

bool protocol_ordering(Suite& suite, std::ostringstream& note) {
  const SeedTable& t = suite.base();
  const double fd = ordered_fraction(t, [](const Outcome& o) { return o.first_death; });
  const double lt = ordered_fraction(t, [](const Outcome& o) { return o.last_death; });
  note << "first-death order in " << fmt("%.0f%%", 100 * fd) << " of seeds, lifetime order in "
       << fmt("%.0f%%", 100 * lt) << " (need >= 90%)";
  return fd >= kOrderFraction && lt >= kOrderFraction;
}

bool quantitative_bands(Suite& suite, std::ostringstream& note) {
  const SeedTable& t = suite.base();
  const std::map<ProtocolKind, Band> first = {
      {ProtocolKind::leach, {600, 1400}}, {ProtocolKind::deec, {900, 2100}}, {ProtocolKind::adleach, {1380, 3220}}};
  const std::map<ProtocolKind, Band> life = {
      {ProtocolKind::leach, {900, 2100}}, {ProtocolKind::deec, {2100, 4900}}, {ProtocolKind::adleach, {3000, 7000}}};
  bool ok = true;
  for (ProtocolKind p : kProtocols) {
    const double fd = median_of(t.at(p), [](const Outcome& o) { return o.first_death; });
    const double lt = median_of(t.at(p), [](const Outcome& o) { return o.last_death; });
    const bool in = first.at(p).contains(fd) && life.at(p).contains(lt);
    ok = ok && in;
    note << to_string(p) << " median first death " << fmt("%.0f", fd) << " [" << first.at(p).lo << ","
         << first.at(p).hi << "], lifetime " << fmt("%.0f", lt) << " [" << life.at(p).lo << "," << life.at(p).hi
         << "]" << (in ? "" : " <-") << "; ";
  }
  return ok;
}

bool energy_exhaustion(Suite& suite, std::ostringstream& note) {
  const SeedTable& t = suite.base();
  const std::map<ProtocolKind, Band> band = {
      {ProtocolKind::leach, {600, 2100}}, {ProtocolKind::deec, {1300, 3100}}, {ProtocolKind::adleach, {1900, 4400}}};
  bool ok = true;
  for (ProtocolKind p : kProtocols) {
    const double r = median_of(t.at(p), [](const Outcome& o) { return o.energy_reach; });
    const bool in = band.at(p).contains(r);
    ok = ok && in;
    note << to_string(p) << " median 50 J round " << fmt("%.0f", r) << " [" << band.at(p).lo << "," << band.at(p).hi
         << "]" << (in ? "" : " <-") << "; ";
  }
  const double order = ordered_fraction(t, [](const Outcome& o) { return o.energy_reach; });
  note << "order in " << fmt("%.0f%%", 100 * order) << " of seeds";
  return ok && order >= kOrderFraction;
}

bool throughput_ordering(Suite& suite, std::ostringstream& note) {
  auto packets = [](const Outcome& o) { return o.packets_bs; };
  const double base = ordered_fraction(suite.base(), packets);
  const double het = ordered_fraction(suite.hetero(), packets);
  note << "Ad-LEACH > DEEC > LEACH in " << fmt("%.0f%%", 100 * base) << " of seeds at (m=0.1,a=0), "
       << fmt("%.0f%%", 100 * het) << " at (m=0.5,a=4) (need >= 90%)";
  return base >= kOrderFraction && het >= kOrderFraction;
}

bool leach_energy_blind(Suite&, std::ostringstream& note) {
  int evaluated = 0;
  bool ok = true;
  const double e0 = 0.5;
  for (std::int64_t r = 0; r < 40; ++r) {
    const double reference = election_threshold(0.1, r, true);
    for (double m : {0.0, 0.1, 0.3, 0.5, 1.0}) {
      for (double a : {0.0, 0.5, 1.0, 2.0, 4.0}) {
        for (double frac : {1.0, 0.7, 0.3, 0.01, 1e-6}) {
          for (NodeKind kind : {NodeKind::normal, NodeKind::advanced}) {
            NodeState s;
            s.kind = kind;
            s.e_init = kind == NodeKind::advanced ? e0 * (1 + a) : e0;
            s.e_residual = s.e_init * frac;
            ElectionContext ctx;
            ctx.round = r;
            ctx.p_opt = 0.1;
            ctx.m = m;
            ctx.a = a;
            ctx.e_total = 50;
            ctx.scope_size = 100;
            ctx.r_estimate = 3000;
            ctx.e_avg = average_energy(r, ctx);
            const double t = election_threshold(election_probability(s, ctx, ProtocolKind::leach), r, true);
            ok = ok && t == reference;
            ++evaluated;
          }
        }
      }
    }
  }
  note << evaluated << " node states x rounds evaluated, T(s) identical to the energy-free value: " << (ok ? "yes" : "no");
  return ok;
}

bool property_suite(Suite& suite, std::ostringstream& note) {
  bool all = true;
  auto item = [&](const char* what, bool ok) {
    note << what << (ok ? " ok" : " FAILED") << "; ";
    all = all && ok;
  };

  double worst = 0.0;
  bool monotone = true;
  for (const auto& [p, runs] : suite.base()) {
    for (const Outcome& o : runs) {
      worst = std::max(worst, o.conservation_error);
      monotone = monotone && o.monotone;
    }
  }
  item(("conservation (worst rel " + fmt("%.1e", worst) + ")").c_str(), worst <= 1e-9);
  item("monotone dead counts", monotone);

  const RadioParams radio;
  const double d0 = d0_threshold(radio);
  const double fs = radio.packet_bits * radio.e_elec + radio.packet_bits * radio.eps_fs * d0 * d0;
  const double mp = tx_energy(radio.packet_bits, d0, radio);
  item("tx continuity at d0", std::abs(fs - mp) <= 1e-9 * fs);
  item(("d0 = " + fmt("%.4f", d0)).c_str(), std::abs(d0 - 87.7058) <= 1e-3);

  bool reduction = true, ratio = true;
  for (double e : {0.01, 0.2, 0.5}) {
    for (double avg : {0.1, 0.5}) {
      for (double a : {0.5, 1.0, 4.0}) {
        ElectionContext ctx;
        ctx.p_opt = 0.1;
        ctx.m = 0.3;
        ctx.e_avg = avg;
        NodeState n, adv;
        n.e_residual = adv.e_residual = e;
        adv.kind = NodeKind::advanced;
        ctx.a = 0.0;
        for (const NodeState* s : {&n, &adv}) {
          const double expect = std::min(1.0, 0.1 * e / avg);
          reduction = reduction && std::abs(reference_probability(*s, ctx) - expect) <= 1e-12 * expect;
        }
        ctx.a = a;
        const double pn = reference_probability(n, ctx);
        const double pa = reference_probability(adv, ctx);
        if (pa < 1.0) ratio = ratio && std::abs(pa / pn - (1.0 + a)) <= 4 * std::numeric_limits<double>::epsilon() * (1 + a);
      }
    }
  }
  item("a=0 reduction", reduction);
  item("(1+a) kind ratio", ratio);

  long heads = 0;
  constexpr int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    std::vector<NodeState> nodes(100);
    std::vector<NodeState*> scope;
    for (int i = 0; i < 100; ++i) {
      nodes[static_cast<std::size_t>(i)].id = i;
      nodes[static_cast<std::size_t>(i)].e_init = nodes[static_cast<std::size_t>(i)].e_residual = 0.5;
      scope.push_back(&nodes[static_cast<std::size_t>(i)]);
    }
    ElectionContext ctx;
    ctx.p_opt = 0.1;
    ctx.e_total = 50;
    ctx.scope_size = 100;
    ctx.r_estimate = 3000;
    ctx.e_avg = average_energy(0, ctx);
    Rng rng(static_cast<std::uint64_t>(t) + 1000);
    heads += static_cast<long>(elect_cluster_heads(scope, ctx, ProtocolKind::deec, rng).size());
  }
  const double mean = static_cast<double>(heads) / trials;
  item(("MC CH count mean " + fmt("%.3f", mean)).c_str(), std::abs(mean - 10.0) <= 0.03 * 10.0);

  bool identical = true;
  for (ProtocolKind p : kProtocols) {
    ScenarioConfig cfg;
    cfg.protocol = p;
    cfg.seed = 11;
    std::ostringstream a, b;
    emit_round_csv(run_simulation(cfg).trace, a);
    emit_round_csv(run_simulation(cfg).trace, b);
    identical = identical && a.str() == b.str();
  }
  item("byte-identical CSV", identical);
  return all;
}

bool grid_partition(Suite&, std::ostringstream& note) {
  bool ok = true;
  for (int q = 1; q <= 12; ++q) {
    const auto cells = partition_field(100, 50, q);
    double area = 0.0;
    for (const Rect& c : cells) area += c.area();
    const auto expect = oracle::nearest_square_grid(100, 50, q);
    const GridShape g = choose_grid(100, 50, q);
    const bool match = g.rows == expect.first && g.cols == expect.second && cells.size() == static_cast<std::size_t>(q);
    ok = ok && match && std::abs(area - 5000.0) <= 1e-12 * 5000.0;
    note << q << ":" << g.rows << "x" << g.cols << (match ? "" : "!") << " ";
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::string only;
  int seeds = 30;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = argv[++i];
    else if (!std::strcmp(argv[i], "--seeds") && i + 1 < argc) seeds = std::atoi(argv[++i]);
  }

  Suite suite(seeds);
  const std::vector<std::pair<std::string, bool (*)(Suite&, std::ostringstream&)>> criteria = {
      {"protocol-ordering", protocol_ordering},
      {"quantitative-bands", quantitative_bands},
      {"energy-exhaustion", energy_exhaustion},
      {"throughput-ordering", throughput_ordering},
      {"leach-energy-blindness", leach_energy_blind},
      {"property-suite", property_suite},
      {"grid-partition-oracle", grid_partition},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    if (!only.empty() && only != name) continue;
    std::ostringstream note;
    const bool ok = check(suite, note);
    failed += !ok;
    std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d criterion(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}
