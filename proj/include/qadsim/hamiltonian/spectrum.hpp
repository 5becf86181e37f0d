#ifndef QADSIM_HAMILTONIAN_SPECTRUM_HPP
#define QADSIM_HAMILTONIAN_SPECTRUM_HPP

#include <iosfwd>
#include <vector>

#include "qadsim/hamiltonian/family.hpp"

namespace qadsim {

/// Ascending eigenvalues.
RealVector eigenvalues(const HermitianOperator& op);

struct Eigenpair {
  double energy;
  StateVector vector;
};

/// Lowest eigenpair; the eigenvector phase is fixed so that its largest
/// component is real and positive.
Eigenpair ground_state(const HermitianOperator& op);

struct SpectralOptions {
  std::size_t grid_size = 101;
  std::size_t levels = 4;
  double gap_tolerance = 1e-9;
  bool parallel = true;  // false runs the serial reference loop
};

/// Lowest levels and gap E_1 - E_0 of H(s) on a uniform s grid.
///
/// When the H_P ground level is d-fold degenerate (d > 1), g(1) = 0 by
/// construction; that grid point is then left out of min_gap and the
/// crossing flag, and endpoint_excluded is set.
struct SpectralProfile {
  std::vector<double> s;
  std::vector<std::vector<double>> energies;
  std::vector<double> gap;
  double min_gap = 0.0;
  double min_gap_s = 0.0;
  std::size_t ground_degeneracy = 1;
  bool endpoint_excluded = false;
  bool crossing_suspected = false;
  double gap_tolerance = 1e-9;
};

SpectralProfile spectral_profile(const AdiabaticFamily& family,
                                 const SpectralOptions& options = {});

/// Columns: s, E_0..E_{m-1}, gap.
void write_csv(const SpectralProfile& profile, std::ostream& out);

}  // namespace qadsim

#endif  // QADSIM_HAMILTONIAN_SPECTRUM_HPP
