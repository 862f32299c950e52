#include "hetsim/field_layout.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hetsim/error.hpp"

namespace hetsim {

void HeterogeneityConfig::validate() const {
  if (!(m >= 0.0 && m <= 1.0)) throw ConfigError("m must lie in [0, 1], got " + std::to_string(m), "m");
  if (!(a >= 0.0) || !std::isfinite(a)) throw ConfigError("a must be a finite value >= 0", "a");
  if (!(e0 > 0.0) || !std::isfinite(e0)) throw ConfigError("e0 must be > 0", "e0");
}

GridShape choose_grid(double width, double height, int q) {
  if (q < 1) throw ConfigError("cluster count q must be >= 1", "clusters");
  if (!(width > 0.0) || !(height > 0.0)) throw ConfigError("field dimensions must be positive", "field");

  GridShape best;
  double best_elongation = INFINITY;
  // Strict "<" while walking cols upward keeps the candidate with fewer columns on ties.
  for (int cols = 1; cols <= q; ++cols) {
    if (q % cols != 0) continue;
    const int rows = q / cols;
    const double cw = width / cols;
    const double ch = height / rows;
    const double elongation = std::max(cw, ch) / std::min(cw, ch);
    if (elongation < best_elongation) {
      best_elongation = elongation;
      best = {rows, cols};
    }
  }
  return best;
}

std::vector<Rect> partition_field(double width, double height, int q) {
  const GridShape g = choose_grid(width, height, q);
  std::vector<Rect> cells;
  cells.reserve(static_cast<std::size_t>(q));
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      // Edges computed from the integer index so adjacent cells share exact boundaries.
      const double x0 = width * c / g.cols;
      const double x1 = c + 1 == g.cols ? width : width * (c + 1) / g.cols;
      const double y0 = height * r / g.rows;
      const double y1 = r + 1 == g.rows ? height : height * (r + 1) / g.rows;
      cells.push_back({x0, y0, x1, y1});
    }
  }
  return cells;
}

FieldLayout make_layout(double width, double height, int q) {
  FieldLayout layout;
  layout.width = width;
  layout.height = height;
  layout.bs_position = {width / 2.0, height / 2.0};
  layout.clusters = partition_field(width, height, q);
  return layout;
}

int FieldLayout::cluster_of(Point p) const {
  if (p.x < 0.0 || p.y < 0.0 || p.x > width || p.y > height) return -1;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const Rect& c = clusters[i];
    const bool in_x = p.x >= c.x0 && (p.x < c.x1 || (c.x1 == width && p.x <= c.x1));
    const bool in_y = p.y >= c.y0 && (p.y < c.y1 || (c.y1 == height && p.y <= c.y1));
    if (in_x && in_y) return static_cast<int>(i);
  }
  return -1;
}

int advanced_count(int n, double m) { return static_cast<int>(std::lround(m * n)); }

std::vector<NodeState> place_nodes(const FieldLayout& layout, int n, const HeterogeneityConfig& het, Rng& rng) {
  if (n < 1) throw ConfigError("node count must be >= 1", "nodes");
  het.validate();

  std::vector<NodeState> nodes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    NodeState& s = nodes[static_cast<std::size_t>(i)];
    s.id = i;
    s.position = {rng.uniform01() * layout.width, rng.uniform01() * layout.height};
    s.cluster_id = layout.cluster_of(s.position);
  }

  // Partial Fisher-Yates: the first k entries of the permutation become advanced.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  const int k = advanced_count(n, het.m);
  for (int i = 0; i < k; ++i) {
    const auto j = i + static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(n - i)));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    nodes[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])].kind = NodeKind::advanced;
  }

  for (NodeState& s : nodes) {
    s.e_init = het.initial_energy(s.kind);
    s.e_residual = s.e_init;
  }
  return nodes;
}

double total_initial_energy(const std::vector<NodeState>& nodes) {
  double sum = 0.0;
  for (const NodeState& s : nodes) sum += s.e_init;
  return sum;
}

}  // namespace hetsim
