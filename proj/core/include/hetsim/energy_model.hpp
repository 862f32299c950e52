#pragma once

#include "hetsim/field_layout.hpp"

namespace hetsim {

/// First-order radio dissipation constants. Defaults are the reference
/// deployment: 5 nJ/bit electronics, 10 pJ/bit/m^2 free space,
/// 0.0013 pJ/bit/m^4 multipath, 5 nJ/bit/signal aggregation.
struct RadioParams {
  double e_elec = 5e-9;
  double eps_fs = 10e-12;
  double eps_mp = 0.0013e-12;
  double e_da = 5e-9;
  double packet_bits = 4000.0;

  void validate() const;

  friend bool operator==(const RadioParams&, const RadioParams&) = default;
};

/// Crossover distance between the d^2 and d^4 amplifier regimes.
double d0_threshold(const RadioParams& params);

double tx_energy(double bits, double distance, const RadioParams& params);
double rx_energy(double bits, const RadioParams& params);
/// Fusion cost for n_signals messages of `bits` each, the CH's own reading included.
double aggregate_energy(double bits, int n_signals, const RadioParams& params);

struct EnergyDebit {
  double requested = 0.0;
  double paid = 0.0;
  bool fatal = false;

  /// The action completed; a fatal debit means the message was lost.
  bool ok() const { return !fatal; }
};

/// Charges `amount` against the node. A node that cannot pay strictly more
/// than the amount is drained to exactly zero and marked dead. Throws
/// ContractViolation if the node is already dead or amount is negative.
EnergyDebit debit(NodeState& node, double amount);

}  // namespace hetsim
