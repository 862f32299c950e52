#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hetsim/config.hpp"
#include "hetsim/sim_engine.hpp"

namespace hetsim {

/// Cartesian product of protocols x seeds x (m, a) grid over a base config.
struct SweepSpec {
  ScenarioConfig base;
  std::vector<ProtocolKind> protocols;
  std::vector<std::uint64_t> seeds;
  std::vector<double> m_values;
  std::vector<double> a_values;
  std::filesystem::path out_dir;
  /// Write sweep_summary.csv even for a single cell.
  bool force_summary = false;
};

struct Cell {
  ScenarioConfig config;
  /// Directory the cell's CSV/JSON go to.
  std::filesystem::path dir;
};

inline constexpr const char* kSweepSummaryHeader =
    "protocol,m,a,seed,first_death_round,last_death_round,stable_region,unstable_region,total_packets_bs,"
    "rounds_simulated";

/// Expands the spec in (m, a, protocol, seed) order. With more than one grid
/// point each point gets its own `m<m>_a<a>` subdirectory.
std::vector<Cell> expand_cells(const SweepSpec& spec);

/// Parses "A..B" (inclusive) or a comma list into seeds.
std::vector<std::uint64_t> parse_seed_range(const std::string& text);

/// Runs every cell on up to `jobs` worker threads (0 = hardware concurrency),
/// writing `<protocol>_<seed>.csv` and `.json` per cell and, for sweeps,
/// `sweep_summary.csv`. Returns a process exit status; errors are reported
/// on `err` with the offending cell named.
int run_command(const SweepSpec& spec, unsigned jobs, std::ostream& err);

}  // namespace hetsim
