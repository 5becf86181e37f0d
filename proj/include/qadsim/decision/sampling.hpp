#ifndef QADSIM_DECISION_SAMPLING_HPP
#define QADSIM_DECISION_SAMPLING_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qadsim/fock/operators.hpp"

namespace qadsim {

/// Derives an independent stream seed (splitmix64 mixing of seed and stream).
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

struct MeasurementRun {
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  std::vector<std::uint64_t> counts;
  std::vector<double> frequencies;  // counts / shots
  std::vector<double> exact;        // |psi_i|^2
};

/// Draws `shots` independent basis outcomes from |psi_i|^2. The generator is
/// mt19937_64 and uniforms are built from its top 53 bits, so a run depends
/// only on (state, shots, seed) and not on the standard library in use.
MeasurementRun sample_measurements(const StateVector& state, std::uint64_t shots,
                                   std::uint64_t seed);

/// Columns: index, count, frequency, exact_probability.
void write_csv(const MeasurementRun& run, std::ostream& out);

}  // namespace qadsim

#endif  // QADSIM_DECISION_SAMPLING_HPP
