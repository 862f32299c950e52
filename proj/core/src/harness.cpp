#include "hetsim/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "hetsim/error.hpp"
#include "hetsim/output.hpp"

namespace hetsim {

namespace {

std::string short_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string cell_name(const ScenarioConfig& c) {
  return std::string(to_string(c.protocol)) + "_" + std::to_string(c.seed);
}

std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::uint64_t parse_u64(const std::string& s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw ConfigError("malformed seed '" + s + "'", "seed");
  return v;
}

}  // namespace

std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::uint64_t lo = parse_u64(text.substr(0, dots));
    const std::uint64_t hi = parse_u64(text.substr(dots + 2));
    if (hi < lo) throw ConfigError("empty seed range '" + text + "'", "seeds");
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) seeds.push_back(parse_u64(item));
  if (seeds.empty()) throw ConfigError("no seeds given", "seeds");
  return seeds;
}

std::vector<Cell> expand_cells(const SweepSpec& spec) {
  const auto protocols = spec.protocols.empty() ? std::vector<ProtocolKind>{spec.base.protocol} : spec.protocols;
  const auto seeds = spec.seeds.empty() ? std::vector<std::uint64_t>{spec.base.seed} : spec.seeds;
  const auto ms = spec.m_values.empty() ? std::vector<double>{spec.base.m} : spec.m_values;
  const auto as = spec.a_values.empty() ? std::vector<double>{spec.base.a} : spec.a_values;
  const bool grid = ms.size() * as.size() > 1;

  std::vector<Cell> cells;
  for (double m : ms) {
    for (double a : as) {
      const auto dir = grid ? spec.out_dir / ("m" + short_double(m) + "_a" + short_double(a)) : spec.out_dir;
      for (ProtocolKind p : protocols) {
        for (std::uint64_t seed : seeds) {
          ScenarioConfig c = spec.base;
          c.m = m;
          c.a = a;
          c.protocol = p;
          c.seed = seed;
          cells.push_back({c, dir});
        }
      }
    }
  }
  return cells;
}

int run_command(const SweepSpec& spec, unsigned jobs, std::ostream& err) {
  std::vector<Cell> cells;
  try {
    cells = expand_cells(spec);
    for (const Cell& c : cells) c.config.validate();
    for (const Cell& c : cells) std::filesystem::create_directories(c.dir);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::vector<RunSummary> summaries(cells.size());
  std::vector<std::string> failures(cells.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const Cell& cell = cells[i];
      try {
        RunResult r = run_simulation(cell.config);
        std::ostringstream csv;
        emit_round_csv(r.trace, csv);
        const std::string stem = cell_name(cell.config);
        write_file(cell.dir / (stem + ".csv"), csv.str());
        write_file(cell.dir / (stem + ".json"), summary_json(r.summary));
        summaries[i] = std::move(r.summary);
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, cells.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }

  int status = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (failures[i].empty()) continue;
    const ScenarioConfig& c = cells[i].config;
    err << "error: cell " << cell_name(c) << " (m=" << short_double(c.m) << ", a=" << short_double(c.a)
        << ") failed: " << failures[i] << '\n';
    status = 1;
  }
  if (status != 0) return status;

  if (cells.size() > 1 || spec.force_summary) {
    std::ostringstream out;
    out << kSweepSummaryHeader << '\n';
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const RunSummary& s = summaries[i];
      const ScenarioConfig& c = cells[i].config;
      out << to_string(c.protocol) << ',' << short_double(c.m) << ',' << short_double(c.a) << ',' << c.seed << ','
          << opt_str(s.first_death_round) << ',' << opt_str(s.last_death_round) << ',' << s.stable_region << ','
          << s.unstable_region << ',' << s.total_packets_bs << ',' << s.rounds_simulated << '\n';
    }
    try {
      write_file(spec.out_dir / "sweep_summary.csv", out.str());
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
  }
  return 0;
}

}  // namespace hetsim
