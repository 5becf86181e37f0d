#include "qadsim/evolution/extrapolate.hpp"

#include <cmath>
#include <sstream>

#include "qadsim/error.hpp"

namespace qadsim {

Extrapolation richardson(std::span<const double> steps, std::span<const double> samples) {
  if (steps.size() != samples.size()) throw ConfigError("steps and samples differ in length");
  if (steps.size() < 3) throw ConfigError("Richardson extrapolation needs at least 3 step sizes");
  for (double h : steps) {
    if (!(h > 0.0)) throw ConfigError("step sizes must be positive");
  }
  const double ratio = steps[0] / steps[1];
  if (!(ratio > 1.0)) throw ConfigError("step sizes must decrease");
  for (std::size_t i = 1; i + 1 < steps.size(); ++i) {
    if (std::abs(steps[i] / steps[i + 1] - ratio) > 1e-9 * ratio) {
      throw ConfigError("step sizes must be in a fixed geometric ratio");
    }
  }

  Extrapolation out;
  out.steps.assign(steps.begin(), steps.end());
  out.samples.assign(samples.begin(), samples.end());

  std::vector<double> diffs(samples.size() - 1);
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) diffs[i] = samples[i + 1] - samples[i];

  bool converged = true;
  for (double d : diffs) converged = converged && d == 0.0;
  if (converged) {
    out.value = samples.back();
    out.error_estimate = 0.0;
    return out;
  }

  for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
    if (!(std::abs(diffs[i + 1]) < std::abs(diffs[i]))) {
      std::ostringstream msg;
      msg << "not in asymptotic regime: |f(h" << i + 2 << ") - f(h" << i + 1
          << ")| = " << std::abs(diffs[i + 1]) << " does not shrink below "
          << std::abs(diffs[i]);
      throw NotAsymptoticError(msg.str());
    }
  }

  // One order per window of three samples; the extrapolant of window j
  // corrects samples[j + 2] with its own fitted order.
  const std::size_t windows = diffs.size() - 1;
  std::vector<double> orders(windows), extrapolants(windows), corrections(windows);
  for (std::size_t j = 0; j < windows; ++j) {
    orders[j] = std::log(std::abs(diffs[j]) / std::abs(diffs[j + 1])) / std::log(ratio);
    corrections[j] = diffs[j + 1] / (std::pow(ratio, orders[j]) - 1.0);
    extrapolants[j] = samples[j + 2] + corrections[j];
  }

  out.order = orders.back();
  out.value = extrapolants.back();
  out.error_estimate = windows >= 2
                           ? std::abs(extrapolants[windows - 1] - extrapolants[windows - 2])
                           : std::abs(corrections.back());
  return out;
}

Extrapolation extrapolate_to_zero_step(const AdiabaticFamily& family,
                                       const StateVector& init, double total_time,
                                       std::span<const double> steps,
                                       std::span<const std::size_t> observable,
                                       Integrator integrator) {
  if (observable.empty()) throw ConfigError("observable needs at least one basis index");
  std::vector<double> samples;
  samples.reserve(steps.size());
  for (double h : steps) {
    EvolutionParams params;
    params.total_time = total_time;
    params.step = h;
    params.integrator = integrator;
    params.record_grid = 2;
    const auto p = evolve(family, init, params).final_state.probabilities();
    double sum = 0.0;
    for (std::size_t i : observable) {
      if (i >= p.size()) throw ArityError("observable index out of range");
      sum += p[i];
    }
    samples.push_back(sum);
  }
  return richardson(steps, samples);
}

}  // namespace qadsim
