#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hetsim/geometry.hpp"
#include "hetsim/random.hpp"

namespace hetsim {

enum class NodeKind { normal, advanced };

struct HeterogeneityConfig {
  double m = 0.1;   // fraction of advanced nodes
  double a = 0.0;   // extra-energy multiplier of advanced nodes
  double e0 = 0.5;  // normal node initial energy [J]

  /// Throws ConfigError when a parameter is out of its domain.
  void validate() const;
  double initial_energy(NodeKind kind) const { return kind == NodeKind::advanced ? e0 * (1.0 + a) : e0; }
};

struct NodeState {
  int id = 0;
  Point position;
  NodeKind kind = NodeKind::normal;
  double e_init = 0.0;
  double e_residual = 0.0;
  int cluster_id = 0;
  bool alive = true;
  /// Node is in the election candidate set G when round >= ineligible_until.
  std::int64_t ineligible_until = 0;
  bool is_ch_this_round = false;
};

/// Static simulation geometry. Clusters are stored row-major, bottom row first.
struct FieldLayout {
  double width = 0.0;
  double height = 0.0;
  Point bs_position;
  std::vector<Rect> clusters;

  std::size_t q() const { return clusters.size(); }
  Rect field() const { return {0.0, 0.0, width, height}; }

  /// Index of the cluster containing p; points on the far field edges belong
  /// to the last row/column. Returns -1 for points outside the field.
  int cluster_of(Point p) const;
};

struct GridShape {
  int rows = 1;
  int cols = 1;
};

/// rows x cols factorization of q whose cells are closest to square on a
/// width x height field. Ties go to the shape with fewer columns.
GridShape choose_grid(double width, double height, int q);

std::vector<Rect> partition_field(double width, double height, int q);

/// Field with the base station at its center and q grid clusters.
FieldLayout make_layout(double width, double height, int q);

/// Uniform i.i.d. placement over the whole field; exactly round(m*n) nodes,
/// chosen uniformly at random, are advanced.
std::vector<NodeState> place_nodes(const FieldLayout& layout, int n, const HeterogeneityConfig& het, Rng& rng);

double total_initial_energy(const std::vector<NodeState>& nodes);

/// Number of advanced nodes for n nodes at advanced fraction m.
int advanced_count(int n, double m);

}  // namespace hetsim
