#include "hetsim/energy_model.hpp"

#include <cmath>
#include <string>

#include "hetsim/error.hpp"

namespace hetsim {

void RadioParams::validate() const {
  auto positive = [](double v, const char* key) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(key) + " must be a finite value > 0", key);
  };
  positive(e_elec, "e_elec");
  positive(eps_fs, "eps_fs");
  positive(eps_mp, "eps_mp");
  positive(e_da, "e_da");
  positive(packet_bits, "packet_bits");
}

double d0_threshold(const RadioParams& params) { return std::sqrt(params.eps_fs / params.eps_mp); }

double tx_energy(double bits, double distance, const RadioParams& params) {
  const double d2 = distance * distance;
  if (distance < d0_threshold(params)) return bits * params.e_elec + bits * params.eps_fs * d2;
  return bits * params.e_elec + bits * params.eps_mp * d2 * d2;
}

double rx_energy(double bits, const RadioParams& params) { return bits * params.e_elec; }

double aggregate_energy(double bits, int n_signals, const RadioParams& params) {
  return params.e_da * bits * n_signals;
}

EnergyDebit debit(NodeState& node, double amount) {
  if (!node.alive) throw ContractViolation("debit on dead node " + std::to_string(node.id));
  if (!(amount >= 0.0)) throw ContractViolation("negative debit on node " + std::to_string(node.id));

  EnergyDebit d{amount, amount, false};
  if (amount >= node.e_residual) {
    d.paid = node.e_residual;
    d.fatal = true;
    node.e_residual = 0.0;
    node.alive = false;
  } else {
    node.e_residual -= amount;
  }
  return d;
}

}  // namespace hetsim
