#ifndef QADSIM_EVOLUTION_EVOLVE_HPP
#define QADSIM_EVOLUTION_EVOLVE_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qadsim/hamiltonian/family.hpp"

namespace qadsim {

enum class Integrator { RK4, MidpointExponential };

std::string to_string(Integrator integrator);
Integrator integrator_from_string(const std::string& text);

struct EvolutionParams {
  double total_time = 10.0;  // T
  double step = 0.02;        // h
  Integrator integrator = Integrator::MidpointExponential;
  std::size_t record_grid = 101;
  bool renormalize = false;  // RK4 only
  double max_norm_drift = 1e-3;
};

struct Snapshot {
  double t;
  double norm_error;  // | ||psi(t)|| - 1 |
  std::vector<double> probabilities;
};

struct EvolutionTrace {
  std::vector<Snapshot> snapshots;
  StateVector final_state;
  std::size_t steps = 0;
  double max_norm_error = 0.0;
};

/// Integrates d psi/dt = -i H(t/T) psi on [0, T] with fixed steps of size h.
/// floor(T/h) full steps are taken and a shorter final step covers any
/// remainder exactly.
///
/// RK4 is the classic four-stage scheme; its norm drift is a diagnostic and is
/// only removed when `renormalize` is set. MidpointExponential applies
/// exp(-i h H(s_mid)) through a dense eigendecomposition and is unitary per
/// step.
///
/// Throws EvolutionError when the norm drifts by more than max_norm_drift or
/// an amplitude becomes non-finite.
EvolutionTrace evolve(const AdiabaticFamily& family, const StateVector& init,
                      const EvolutionParams& params);

/// Columns: t, norm_error, p_top1, p_top2, top1_index.
void write_csv(const EvolutionTrace& trace, std::ostream& out);

}  // namespace qadsim

#endif  // QADSIM_EVOLUTION_EVOLVE_HPP
