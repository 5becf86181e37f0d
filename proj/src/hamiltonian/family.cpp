#include "qadsim/hamiltonian/family.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qadsim/error.hpp"
#include "qadsim/kernels/kernels.hpp"

namespace qadsim {

std::string to_string(Schedule schedule) {
  return schedule == Schedule::SmoothStep ? "smoothstep" : "linear";
}

Schedule schedule_from_string(const std::string& text) {
  if (text == "linear") return Schedule::Linear;
  if (text == "smoothstep") return Schedule::SmoothStep;
  throw ConfigError("unknown schedule '" + text + "' (expected linear or smoothstep)");
}

double schedule_weight(Schedule schedule, double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw ConfigError("interpolation parameter s = " + std::to_string(s) +
                      " outside [0,1]");
  }
  if (schedule == Schedule::SmoothStep) return s * s * (3.0 - 2.0 * s);
  return s;
}

std::vector<cplx> default_alphas(std::size_t num_modes) {
  return std::vector<cplx>(num_modes, cplx(1.0 / std::sqrt(2.0), 0.0));
}

InitialHamiltonian build_initial_hamiltonian(const FockBasis& basis,
                                             std::span<const cplx> alphas) {
  CoherentState coherent = coherent_state(basis, alphas);

  const bool undisplaced =
      std::all_of(alphas.begin(), alphas.end(), [](cplx a) { return a == cplx(0.0); });
  if (undisplaced) {
    HermitianOperator h = number_operator(basis, 0);
    for (std::size_t m = 1; m < basis.num_modes(); ++m) h = h + number_operator(basis, m);
    return {std::move(h), std::move(coherent.state), coherent.truncated_weight};
  }

  const Operator id = identity(basis).to_operator();
  Operator total = 0.0 * id;
  for (std::size_t m = 0; m < basis.num_modes(); ++m) {
    const Operator shifted = annihilation(basis, m) - alphas[m] * id;
    total = total + compose(shifted.adjoint(), shifted);
  }
  return {HermitianOperator::from(total), std::move(coherent.state),
          coherent.truncated_weight};
}

std::vector<std::int64_t> problem_levels(const Polynomial& p, const FockBasis& basis) {
  if (p.num_vars() != basis.num_modes()) {
    throw ArityError("polynomial has " + std::to_string(p.num_vars()) +
                     " variables but the basis has " +
                     std::to_string(basis.num_modes()) + " modes");
  }
  return kernels::parallel::squared_values(p, basis.cutoff());
}

namespace {

RealVector to_real(const std::vector<std::int64_t>& levels) {
  RealVector d(static_cast<Eigen::Index>(levels.size()));
  for (std::size_t i = 0; i < levels.size(); ++i) {
    d[static_cast<Eigen::Index>(i)] = static_cast<double>(levels[i]);
  }
  return d;
}

}  // namespace

HermitianOperator build_problem_hamiltonian(const Polynomial& p,
                                            const FockBasis& basis) {
  return HermitianOperator::diagonal(basis, to_real(problem_levels(p, basis)));
}

AdiabaticFamily::AdiabaticFamily(HermitianOperator initial,
                                 std::vector<std::int64_t> levels,
                                 Schedule schedule)
    : initial_(std::move(initial)),
      levels_(std::move(levels)),
      problem_(HermitianOperator::diagonal(initial_.basis(), to_real(levels_))),
      schedule_(schedule) {
  if (levels_.empty()) throw ConfigError("empty problem Hamiltonian");
  ground_level_ = *std::min_element(levels_.begin(), levels_.end());
  ground_degeneracy_ = static_cast<std::size_t>(
      std::count(levels_.begin(), levels_.end(), ground_level_));
}

AdiabaticFamily AdiabaticFamily::build(const Polynomial& p, const FockBasis& basis,
                                       std::span<const cplx> alphas,
                                       Schedule schedule) {
  auto levels = problem_levels(p, basis);
  return AdiabaticFamily(build_initial_hamiltonian(basis, alphas).hamiltonian,
                         std::move(levels), schedule);
}

HermitianOperator AdiabaticFamily::at(double s) const {
  const double w = weight(s);
  if (w == 0.0) return initial_;
  if (w == 1.0) return problem_;
  return (1.0 - w) * initial_ + w * problem_;
}

DenseMatrix AdiabaticFamily::dense_at(double s) const {
  const double w = weight(s);
  DenseMatrix m = (1.0 - w) * initial_.to_dense();
  m.diagonal() += (w * problem_.diagonal_values()).cast<cplx>();
  return m;
}

void AdiabaticFamily::apply(double s, std::span<const cplx> x, std::span<cplx> y) const {
  const double w = weight(s);
  qadsim::apply(initial_, x, y);
  const auto& d = problem_.diagonal_values();
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = (1.0 - w) * y[i] + w * d[static_cast<Eigen::Index>(i)] * x[i];
  }
}

HermitianOperator interpolate(const AdiabaticFamily& family, double s) {
  return family.at(s);
}

}  // namespace qadsim
