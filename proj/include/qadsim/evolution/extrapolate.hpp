#ifndef QADSIM_EVOLUTION_EXTRAPOLATE_HPP
#define QADSIM_EVOLUTION_EXTRAPOLATE_HPP

#include <optional>
#include <span>
#include <vector>

#include "qadsim/evolution/evolve.hpp"

namespace qadsim {

struct Extrapolation {
  double value = 0.0;
  double error_estimate = 0.0;
  std::optional<double> order;  // absent when the samples are already converged
  std::vector<double> steps;
  std::vector<double> samples;
};

/// Richardson extrapolation of samples f(h_0), f(h_1), ... taken at step sizes
/// in a fixed geometric ratio h_i / h_{i+1} = r. With d_i = f(h_{i+1}) - f(h_i),
/// each window of three samples gives an order q_j = log(|d_j| / |d_{j+1}|) / log r
/// and an extrapolant R_j = f(h_{j+2}) + d_{j+1} / (r^{q_j} - 1). The result is
/// the last R_j with its q_j. The error estimate is |R_last - R_prev| when there
/// are at least four samples, otherwise the size of the last correction.
///
/// Throws NotAsymptoticError when the differences do not shrink
/// monotonically.
Extrapolation richardson(std::span<const double> steps, std::span<const double> samples);

/// Runs `evolve` once per step size and extrapolates the summed final
/// probability of `observable` (basis indices) to h -> 0.
Extrapolation extrapolate_to_zero_step(const AdiabaticFamily& family,
                                       const StateVector& init, double total_time,
                                       std::span<const double> steps,
                                       std::span<const std::size_t> observable,
                                       Integrator integrator);

}  // namespace qadsim

#endif  // QADSIM_EVOLUTION_EXTRAPOLATE_HPP
