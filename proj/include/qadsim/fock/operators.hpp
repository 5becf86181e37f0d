#ifndef QADSIM_FOCK_OPERATORS_HPP
#define QADSIM_FOCK_OPERATORS_HPP

#include <complex>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qadsim/fock/basis.hpp"

namespace qadsim {

using cplx = std::complex<double>;
using DenseMatrix =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Dense storage beyond this dimension is refused.
inline constexpr std::size_t kMaxDenseDimension = 4096;

class StateVector {
 public:
  StateVector(FockBasis basis, ComplexVector amplitudes);

  const FockBasis& basis() const noexcept { return basis_; }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  ComplexVector& amplitudes() noexcept { return amplitudes_; }

  double norm() const { return amplitudes_.norm(); }
  std::vector<double> probabilities() const;
  StateVector normalized() const;

 private:
  FockBasis basis_;
  ComplexVector amplitudes_;
};

/// |n> for the basis state at `index`.
StateVector basis_state(const FockBasis& basis, std::size_t index);

/// General (not necessarily Hermitian) dense operator.
class Operator {
 public:
  Operator(FockBasis basis, DenseMatrix matrix);

  const FockBasis& basis() const noexcept { return basis_; }
  const DenseMatrix& matrix() const noexcept { return matrix_; }

  Operator adjoint() const;
  friend Operator compose(const Operator& lhs, const Operator& rhs);
  friend Operator operator+(const Operator& lhs, const Operator& rhs);
  friend Operator operator-(const Operator& lhs, const Operator& rhs);
  friend Operator operator*(cplx scale, const Operator& op);

 private:
  FockBasis basis_;
  DenseMatrix matrix_;
};

/// Hermitian operator stored either as a real diagonal or a dense matrix.
/// Diagonal op Diagonal stays diagonal; any mix with Dense gives Dense.
class HermitianOperator {
 public:
  static HermitianOperator diagonal(FockBasis basis, RealVector values);
  /// Verifies conjugate symmetry to `tolerance` and symmetrizes exactly.
  static HermitianOperator dense(FockBasis basis, DenseMatrix matrix,
                                 double tolerance = 1e-12);
  static HermitianOperator from(const Operator& op, double tolerance = 1e-12);

  const FockBasis& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.dimension(); }
  bool is_diagonal() const noexcept {
    return std::holds_alternative<RealVector>(storage_);
  }
  const RealVector& diagonal_values() const;
  const DenseMatrix& dense_matrix() const;
  DenseMatrix to_dense() const;
  Operator to_operator() const { return Operator(basis_, to_dense()); }

  /// max |H_ij - conj(H_ji)|; zero for diagonal storage.
  double hermiticity_error() const;

  friend HermitianOperator operator+(const HermitianOperator& lhs,
                                     const HermitianOperator& rhs);
  friend HermitianOperator operator*(double scale, const HermitianOperator& op);
  /// Operator product; Hermitian only when the factors commute, so the result
  /// is a general Operator unless both are diagonal.
  friend Operator compose(const HermitianOperator& lhs,
                          const HermitianOperator& rhs);

 private:
  HermitianOperator(FockBasis basis, std::variant<RealVector, DenseMatrix> s)
      : basis_(std::move(basis)), storage_(std::move(s)) {}

  FockBasis basis_;
  std::variant<RealVector, DenseMatrix> storage_;
};

Operator annihilation(const FockBasis& basis, std::size_t mode);
Operator creation(const FockBasis& basis, std::size_t mode);
HermitianOperator number_operator(const FockBasis& basis, std::size_t mode);
HermitianOperator identity(const FockBasis& basis);

StateVector apply(const Operator& op, const StateVector& v);
StateVector apply(const HermitianOperator& op, const StateVector& v);

/// y = H x on raw amplitude spans; diagonal storage is an elementwise product.
void apply(const HermitianOperator& op, std::span<const cplx> x,
           std::span<cplx> y);

double expectation(const HermitianOperator& op, const StateVector& v);

struct CoherentState {
  StateVector state;
  // Weight of the exact (untruncated) coherent state lying above the cutoff.
  double truncated_weight;
};

/// Truncated product coherent state, amplitudes proportional to
/// prod_i alpha_i^{n_i} / sqrt(n_i!), renormalized on the box. Emits a
/// warning when the truncated weight exceeds 1e-6.
CoherentState coherent_state(const FockBasis& basis,
                             std::span<const cplx> alphas);

}  // namespace qadsim

#endif  // QADSIM_FOCK_OPERATORS_HPP
