#ifndef QADSIM_HAMILTONIAN_FAMILY_HPP
#define QADSIM_HAMILTONIAN_FAMILY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qadsim/diophantine/polynomial.hpp"
#include "qadsim/fock/operators.hpp"

namespace qadsim {

enum class Schedule { Linear, SmoothStep };

std::string to_string(Schedule schedule);
Schedule schedule_from_string(const std::string& text);

/// Weight w(s) of the problem Hamiltonian; linear is w = s, smooth-step is
/// w = 3s^2 - 2s^3. Both satisfy w(0) = 0, w(1) = 1.
double schedule_weight(Schedule schedule, double s);

/// alpha_i = 1/sqrt(2) on every mode.
std::vector<cplx> default_alphas(std::size_t num_modes);

struct InitialHamiltonian {
  HermitianOperator hamiltonian;
  StateVector coherent;  // nominal ground state
  double truncated_weight;
};

/// H_I = sum_i (a_i^dagger - conj(alpha_i)) (a_i - alpha_i) on the truncated
/// space. With all alphas zero the result is the diagonal sum of number
/// operators.
InitialHamiltonian build_initial_hamiltonian(const FockBasis& basis,
                                             std::span<const cplx> alphas);

/// Exact D(n)^2 at every basis state.
std::vector<std::int64_t> problem_levels(const Polynomial& p, const FockBasis& basis);

/// Diagonal H_P with entries D(n)^2.
HermitianOperator build_problem_hamiltonian(const Polynomial& p,
                                            const FockBasis& basis);

/// H(s) = (1 - w(s)) H_I + w(s) H_P with an integer-valued diagonal H_P.
class AdiabaticFamily {
 public:
  AdiabaticFamily(HermitianOperator initial, std::vector<std::int64_t> levels,
                  Schedule schedule = Schedule::Linear);

  static AdiabaticFamily build(const Polynomial& p, const FockBasis& basis,
                               std::span<const cplx> alphas,
                               Schedule schedule = Schedule::Linear);

  const FockBasis& basis() const noexcept { return initial_.basis(); }
  const HermitianOperator& initial() const noexcept { return initial_; }
  const HermitianOperator& problem() const noexcept { return problem_; }
  const std::vector<std::int64_t>& levels() const noexcept { return levels_; }
  Schedule schedule() const noexcept { return schedule_; }

  std::int64_t ground_level() const noexcept { return ground_level_; }
  std::size_t ground_degeneracy() const noexcept { return ground_degeneracy_; }

  double weight(double s) const { return schedule_weight(schedule_, s); }
  HermitianOperator at(double s) const;
  DenseMatrix dense_at(double s) const;
  /// y = H(s) x without forming H(s).
  void apply(double s, std::span<const cplx> x, std::span<cplx> y) const;

 private:
  HermitianOperator initial_;
  std::vector<std::int64_t> levels_;
  HermitianOperator problem_;
  Schedule schedule_;
  std::int64_t ground_level_;
  std::size_t ground_degeneracy_;
};

/// (1-s) H_I + s H_P under the family's schedule; s must lie in [0,1].
HermitianOperator interpolate(const AdiabaticFamily& family, double s);

}  // namespace qadsim

#endif  // QADSIM_HAMILTONIAN_FAMILY_HPP
