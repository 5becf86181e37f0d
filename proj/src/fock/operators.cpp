#include "qadsim/fock/operators.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "qadsim/error.hpp"
#include "qadsim/kernels/kernels.hpp"
#include "qadsim/log.hpp"

namespace qadsim {

namespace {

void require_same_basis(const FockBasis& a, const FockBasis& b) {
  if (!(a == b)) {
    throw BasisMismatch("operands live on different Fock bases");
  }
}

void require_dense_ok(const FockBasis& basis) {
  if (basis.dimension() > kMaxDenseDimension) {
    throw ConfigError("dimension " + std::to_string(basis.dimension()) +
                      " exceeds the dense-operator limit of " +
                      std::to_string(kMaxDenseDimension));
  }
}

void require_mode(const FockBasis& basis, std::size_t mode) {
  if (mode >= basis.num_modes()) {
    throw ArityError("mode " + std::to_string(mode) + " out of range for " +
                     std::to_string(basis.num_modes()) + " modes");
  }
}

}  // namespace

StateVector::StateVector(FockBasis basis, ComplexVector amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != basis_.dimension()) {
    throw BasisMismatch("amplitude vector length does not match basis dimension");
  }
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(static_cast<std::size_t>(amplitudes_.size()));
  for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
    p[static_cast<std::size_t>(i)] = std::norm(amplitudes_[i]);
  }
  return p;
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw Error("cannot normalize the zero vector");
  return StateVector(basis_, amplitudes_ / n);
}

StateVector basis_state(const FockBasis& basis, std::size_t index) {
  if (index >= basis.dimension()) throw ArityError("basis index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(basis.dimension()));
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(basis, std::move(v));
}

// Operator -------------------------------------------------------------------

Operator::Operator(FockBasis basis, DenseMatrix matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  const auto d = static_cast<Eigen::Index>(basis_.dimension());
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw BasisMismatch("matrix shape does not match basis dimension");
  }
}

Operator Operator::adjoint() const {
  return Operator(basis_, matrix_.adjoint());
}

Operator compose(const Operator& lhs, const Operator& rhs) {
  require_same_basis(lhs.basis_, rhs.basis_);
  return Operator(lhs.basis_, lhs.matrix_ * rhs.matrix_);
}

Operator operator+(const Operator& lhs, const Operator& rhs) {
  require_same_basis(lhs.basis_, rhs.basis_);
  return Operator(lhs.basis_, lhs.matrix_ + rhs.matrix_);
}

Operator operator-(const Operator& lhs, const Operator& rhs) {
  require_same_basis(lhs.basis_, rhs.basis_);
  return Operator(lhs.basis_, lhs.matrix_ - rhs.matrix_);
}

Operator operator*(cplx scale, const Operator& op) {
  return Operator(op.basis_, scale * op.matrix_);
}

// HermitianOperator ----------------------------------------------------------

HermitianOperator HermitianOperator::diagonal(FockBasis basis, RealVector values) {
  if (static_cast<std::size_t>(values.size()) != basis.dimension()) {
    throw BasisMismatch("diagonal length does not match basis dimension");
  }
  return HermitianOperator(std::move(basis), std::move(values));
}

HermitianOperator HermitianOperator::dense(FockBasis basis, DenseMatrix matrix,
                                           double tolerance) {
  require_dense_ok(basis);
  const auto d = static_cast<Eigen::Index>(basis.dimension());
  if (matrix.rows() != d || matrix.cols() != d) {
    throw BasisMismatch("matrix shape does not match basis dimension");
  }
  const double err = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (err > tolerance) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max |H - H^dagger| = " << err;
    throw Error(msg.str());
  }
  DenseMatrix sym = 0.5 * (matrix + matrix.adjoint());
  return HermitianOperator(std::move(basis), std::move(sym));
}

HermitianOperator HermitianOperator::from(const Operator& op, double tolerance) {
  return dense(op.basis(), op.matrix(), tolerance);
}

const RealVector& HermitianOperator::diagonal_values() const {
  if (!is_diagonal()) throw Error("operator does not have diagonal storage");
  return std::get<RealVector>(storage_);
}

const DenseMatrix& HermitianOperator::dense_matrix() const {
  if (is_diagonal()) throw Error("operator does not have dense storage");
  return std::get<DenseMatrix>(storage_);
}

DenseMatrix HermitianOperator::to_dense() const {
  if (!is_diagonal()) return dense_matrix();
  require_dense_ok(basis_);
  return diagonal_values().cast<cplx>().asDiagonal();
}

double HermitianOperator::hermiticity_error() const {
  if (is_diagonal()) return 0.0;
  const auto& m = dense_matrix();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianOperator operator+(const HermitianOperator& lhs,
                            const HermitianOperator& rhs) {
  require_same_basis(lhs.basis_, rhs.basis_);
  if (lhs.is_diagonal() && rhs.is_diagonal()) {
    return HermitianOperator(lhs.basis_,
                             RealVector(lhs.diagonal_values() + rhs.diagonal_values()));
  }
  DenseMatrix m;
  if (lhs.is_diagonal()) {
    m = rhs.dense_matrix();
    m.diagonal() += lhs.diagonal_values().cast<cplx>();
  } else if (rhs.is_diagonal()) {
    m = lhs.dense_matrix();
    m.diagonal() += rhs.diagonal_values().cast<cplx>();
  } else {
    m = lhs.dense_matrix() + rhs.dense_matrix();
  }
  return HermitianOperator(lhs.basis_, std::move(m));
}

HermitianOperator operator*(double scale, const HermitianOperator& op) {
  if (op.is_diagonal()) {
    return HermitianOperator(op.basis_, RealVector(scale * op.diagonal_values()));
  }
  return HermitianOperator(op.basis_, DenseMatrix(scale * op.dense_matrix()));
}

Operator compose(const HermitianOperator& lhs, const HermitianOperator& rhs) {
  require_same_basis(lhs.basis_, rhs.basis_);
  if (lhs.is_diagonal() && rhs.is_diagonal()) {
    RealVector d = lhs.diagonal_values().cwiseProduct(rhs.diagonal_values());
    return Operator(lhs.basis_, d.cast<cplx>().asDiagonal());
  }
  return Operator(lhs.basis_, lhs.to_dense() * rhs.to_dense());
}

// Builders -------------------------------------------------------------------

Operator annihilation(const FockBasis& basis, std::size_t mode) {
  require_mode(basis, mode);
  require_dense_ok(basis);
  const auto d = static_cast<Eigen::Index>(basis.dimension());
  DenseMatrix m = DenseMatrix::Zero(d, d);
  for (std::size_t col = 0; col < basis.dimension(); ++col) {
    std::size_t row;
    if (basis.shifted(col, mode, -1, row)) {
      const auto n = static_cast<double>(basis.occupation(col, mode));
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = std::sqrt(n);
    }
  }
  return Operator(basis, std::move(m));
}

Operator creation(const FockBasis& basis, std::size_t mode) {
  return annihilation(basis, mode).adjoint();
}

HermitianOperator number_operator(const FockBasis& basis, std::size_t mode) {
  require_mode(basis, mode);
  RealVector d(static_cast<Eigen::Index>(basis.dimension()));
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    d[static_cast<Eigen::Index>(i)] = static_cast<double>(basis.occupation(i, mode));
  }
  return HermitianOperator::diagonal(basis, std::move(d));
}

HermitianOperator identity(const FockBasis& basis) {
  return HermitianOperator::diagonal(
      basis, RealVector::Ones(static_cast<Eigen::Index>(basis.dimension())));
}

StateVector apply(const Operator& op, const StateVector& v) {
  require_same_basis(op.basis(), v.basis());
  ComplexVector out(v.amplitudes().size());
  const auto& m = op.matrix();
  kernels::parallel::dense_matvec(
      {m.data(), static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols())},
      {v.amplitudes().data(), static_cast<std::size_t>(v.amplitudes().size())},
      {out.data(), static_cast<std::size_t>(out.size())});
  return StateVector(v.basis(), std::move(out));
}

void apply(const HermitianOperator& op, std::span<const cplx> x, std::span<cplx> y) {
  if (x.size() != op.dimension() || y.size() != op.dimension()) {
    throw BasisMismatch("vector length does not match operator dimension");
  }
  if (op.is_diagonal()) {
    const auto& d = op.diagonal_values();
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = d[static_cast<Eigen::Index>(i)] * x[i];
    return;
  }
  const auto& m = op.dense_matrix();
  kernels::parallel::dense_matvec(
      {m.data(), static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols())},
      x, y);
}

StateVector apply(const HermitianOperator& op, const StateVector& v) {
  require_same_basis(op.basis(), v.basis());
  ComplexVector out(v.amplitudes().size());
  apply(op, {v.amplitudes().data(), static_cast<std::size_t>(v.amplitudes().size())},
        {out.data(), static_cast<std::size_t>(out.size())});
  return StateVector(v.basis(), std::move(out));
}

double expectation(const HermitianOperator& op, const StateVector& v) {
  const StateVector hv = apply(op, v);
  return v.amplitudes().dot(hv.amplitudes()).real();  // dot conjugates lhs
}

CoherentState coherent_state(const FockBasis& basis, std::span<const cplx> alphas) {
  if (alphas.size() != basis.num_modes()) {
    throw ArityError("need one displacement per mode");
  }
  const auto levels = static_cast<std::size_t>(basis.cutoff()) + 1;
  // Per-mode amplitudes alpha^n / sqrt(n!), and the Poisson weight kept.
  std::vector<std::vector<cplx>> table(alphas.size(), std::vector<cplx>(levels));
  double kept = 1.0;
  for (std::size_t m = 0; m < alphas.size(); ++m) {
    table[m][0] = 1.0;
    double mode_weight = 1.0;
    for (std::size_t n = 1; n < levels; ++n) {
      table[m][n] = table[m][n - 1] * alphas[m] / std::sqrt(static_cast<double>(n));
      mode_weight += std::norm(table[m][n]);
    }
    kept *= std::exp(-std::norm(alphas[m])) * mode_weight;
  }

  ComplexVector v(static_cast<Eigen::Index>(basis.dimension()));
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    cplx a = 1.0;
    for (std::size_t m = 0; m < alphas.size(); ++m) {
      a *= table[m][static_cast<std::size_t>(basis.occupation(i, m))];
    }
    v[static_cast<Eigen::Index>(i)] = a;
  }
  v /= v.norm();

  const double truncated = std::max(0.0, 1.0 - kept);
  if (truncated > 1e-6) {
    std::ostringstream msg;
    msg << "coherent state loses weight " << truncated << " above cutoff "
        << basis.cutoff() << "; raise the cutoff or shrink |alpha|";
    log::warn(msg.str());
  }
  return {StateVector(basis, std::move(v)), truncated};
}

}  // namespace qadsim
