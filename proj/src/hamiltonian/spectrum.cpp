#include "qadsim/hamiltonian/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <ostream>

#include <Eigen/Eigenvalues>

#include "qadsim/error.hpp"

namespace qadsim {

RealVector eigenvalues(const HermitianOperator& op) {
  if (op.is_diagonal()) {
    RealVector v = op.diagonal_values();
    std::sort(v.begin(), v.end());
    return v;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      Eigen::MatrixXcd(op.dense_matrix()), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw EigensolverError("eigensolver did not converge");
  return solver.eigenvalues();
}

Eigenpair ground_state(const HermitianOperator& op) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(op.to_dense()));
  if (solver.info() != Eigen::Success) throw EigensolverError("eigensolver did not converge");
  ComplexVector v = solver.eigenvectors().col(0);
  Eigen::Index big = 0;
  v.cwiseAbs().maxCoeff(&big);
  v *= std::conj(v[big]) / std::abs(v[big]);
  v /= v.norm();
  return {solver.eigenvalues()[0], StateVector(op.basis(), std::move(v))};
}

namespace {

std::vector<double> lowest_levels(const AdiabaticFamily& family, double s,
                                  std::size_t m) {
  RealVector all;
  try {
    all = eigenvalues(family.at(s));
  } catch (const EigensolverError&) {
    throw EigensolverError("eigensolver failed at s = " + std::to_string(s));
  }
  return std::vector<double>(all.data(), all.data() + m);
}

}  // namespace

SpectralProfile spectral_profile(const AdiabaticFamily& family,
                                 const SpectralOptions& options) {
  if (options.grid_size < 2) throw ConfigError("spectral grid needs at least 2 points");
  const std::size_t dim = family.basis().dimension();
  if (options.levels < 2 || options.levels > dim) {
    throw ConfigError("levels must lie in [2, dimension=" + std::to_string(dim) + "]");
  }

  const std::size_t n = options.grid_size;
  SpectralProfile out;
  out.s.resize(n);
  out.energies.resize(n);
  out.gap.resize(n);
  out.gap_tolerance = options.gap_tolerance;
  out.ground_degeneracy = family.ground_degeneracy();
  for (std::size_t i = 0; i < n; ++i) {
    out.s[i] = (i + 1 == n) ? 1.0 : static_cast<double>(i) / static_cast<double>(n - 1);
  }

  std::exception_ptr error;
  const auto count = static_cast<std::int64_t>(n);
  // Each grid point writes only its own slot, so the assembled profile is in
  // s order whatever the schedule.
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out.energies[k] = lowest_levels(family, out.s[k], options.levels);
      out.gap[k] = std::max(0.0, out.energies[k][1] - out.energies[k][0]);
    } catch (...) {
#pragma omp critical(qadsim_spectrum_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  out.endpoint_excluded = out.ground_degeneracy > 1;
  const std::size_t last = out.endpoint_excluded ? n - 1 : n;
  out.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < last; ++i) {
    if (out.gap[i] < out.min_gap) {
      out.min_gap = out.gap[i];
      out.min_gap_s = out.s[i];
    }
  }
  out.crossing_suspected = out.min_gap < options.gap_tolerance;
  return out;
}

void write_csv(const SpectralProfile& profile, std::ostream& out) {
  const std::size_t m = profile.energies.empty() ? 0 : profile.energies.front().size();
  const auto old_precision = out.precision(17);
  out << "s";
  for (std::size_t j = 0; j < m; ++j) out << ",E_" << j;
  out << ",gap\n";
  for (std::size_t i = 0; i < profile.s.size(); ++i) {
    out << profile.s[i];
    for (double e : profile.energies[i]) out << ',' << e;
    out << ',' << profile.gap[i] << '\n';
  }
  out.precision(old_precision);
}

}  // namespace qadsim
