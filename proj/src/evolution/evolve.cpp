#include "qadsim/evolution/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qadsim/error.hpp"

namespace qadsim {

std::string to_string(Integrator integrator) {
  return integrator == Integrator::RK4 ? "rk4" : "midexp";
}

Integrator integrator_from_string(const std::string& text) {
  if (text == "rk4") return Integrator::RK4;
  if (text == "midexp" || text == "midpoint-exponential") {
    return Integrator::MidpointExponential;
  }
  throw ConfigError("unknown integrator '" + text + "' (expected rk4 or midexp)");
}

namespace {

const cplx kMinusI{0.0, -1.0};

class Stepper {
 public:
  Stepper(const AdiabaticFamily& family, double total_time)
      : family_(family), total_time_(total_time) {
    const auto d = static_cast<Eigen::Index>(family.basis().dimension());
    k1_.resize(d);
    k2_.resize(d);
    k3_.resize(d);
    k4_.resize(d);
    tmp_.resize(d);
    if (!family.initial().is_diagonal()) {
      const DenseMatrix& hi = family.initial().dense_matrix();
      if (hi.imag().cwiseAbs().maxCoeff() == 0.0) {
        // Real displacements give a real symmetric H(s); the real solver
        // is faster and its eigenvectors are orthogonal to tighter precision.
        real_initial_ = hi.real();
      }
    }
  }

  void rk4(ComplexVector& psi, double t, double dt) {
    derivative(t, psi, k1_);
    tmp_ = psi + (0.5 * dt) * k1_;
    derivative(t + 0.5 * dt, tmp_, k2_);
    tmp_ = psi + (0.5 * dt) * k2_;
    derivative(t + 0.5 * dt, tmp_, k3_);
    tmp_ = psi + dt * k3_;
    derivative(t + dt, tmp_, k4_);
    psi += (dt / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
  }

  void midpoint_exponential(ComplexVector& psi, double t, double dt) {
    const double s = param(t + 0.5 * dt);
    if (family_.initial().is_diagonal()) {
      const double w = family_.weight(s);
      const auto& hi = family_.initial().diagonal_values();
      const auto& hp = family_.problem().diagonal_values();
      for (Eigen::Index i = 0; i < psi.size(); ++i) {
        const double e = (1.0 - w) * hi[i] + w * hp[i];
        psi[i] *= std::exp(kMinusI * (dt * e));
      }
      return;
    }
    if (real_initial_.size() > 0) {
      real_midpoint_exponential(psi, s, dt);
      return;
    }
    solver_.compute(Eigen::MatrixXcd(family_.dense_at(s)));
    if (solver_.info() != Eigen::Success) {
      throw EigensolverError("eigensolver failed at s = " + std::to_string(s));
    }
    // Same refinement as the real path, with V^dagger in place of V^T.
    vc_ = solver_.eigenvectors().cast<ExtComplex>();
    const auto refine = [this](ExtComplexVector& x) {
      cwork_.noalias() = vc_ * x;
      x = 1.5L * x;
      x.noalias() -= 0.5L * (vc_.adjoint() * cwork_);
    };
    const auto& e = solver_.eigenvalues();
    cy_.noalias() = vc_.adjoint() * psi.cast<ExtComplex>();
    refine(cy_);
    for (Eigen::Index i = 0; i < e.size(); ++i) {
      const long double theta = static_cast<long double>(dt) * e[i];
      cy_[i] *= ExtComplex(std::cos(theta), -std::sin(theta));
    }
    refine(cy_);
    psi = (vc_ * cy_).cast<cplx>();
  }

 private:
  void real_midpoint_exponential(ComplexVector& psi, double s, double dt) {
    const double w = family_.weight(s);
    Eigen::MatrixXd h = (1.0 - w) * real_initial_;
    h.diagonal() += w * family_.problem().diagonal_values();
    real_solver_.compute(h);
    if (real_solver_.info() != Eigen::Success) {
      throw EigensolverError("eigensolver failed at s = " + std::to_string(s));
    }
    // The eigenvectors V carry an O(n eps) orthogonality defect that barely
    // changes between steps, so its norm error would accumulate linearly.
    // The propagator uses the Newton-Schulz refinement V G with
    // G = (3I - V^T V) / 2, applied to vectors as G x = 1.5 x - 0.5 V^T (V x),
    // in extended precision.
    v_ = real_solver_.eigenvectors().cast<long double>();
    const auto refine = [this](ExtMatrix& x) {
      work_.noalias() = v_ * x;
      x = 1.5L * x;
      x.noalias() -= 0.5L * (v_.transpose() * work_);
    };
    const Eigen::VectorXd& e = real_solver_.eigenvalues();
    x_.resize(psi.size(), 2);
    x_.col(0) = psi.real().cast<long double>();
    x_.col(1) = psi.imag().cast<long double>();
    y_.noalias() = v_.transpose() * x_;
    refine(y_);
    for (Eigen::Index i = 0; i < e.size(); ++i) {
      const long double theta = static_cast<long double>(dt) * e[i];
      const long double c = std::cos(theta), sn = std::sin(theta);
      const long double re = y_(i, 0), im = y_(i, 1);
      y_(i, 0) = c * re + sn * im;
      y_(i, 1) = c * im - sn * re;
    }
    refine(y_);
    x_.noalias() = v_ * y_;
    psi.real() = x_.col(0).cast<double>();
    psi.imag() = x_.col(1).cast<double>();
  }

  double param(double t) const { return std::clamp(t / total_time_, 0.0, 1.0); }

  void derivative(double t, const ComplexVector& x, ComplexVector& out) {
    family_.apply(param(t), {x.data(), static_cast<std::size_t>(x.size())},
                  {out.data(), static_cast<std::size_t>(out.size())});
    out *= kMinusI;
  }

  const AdiabaticFamily& family_;
  double total_time_;
  ComplexVector k1_, k2_, k3_, k4_, tmp_;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver_;
  Eigen::MatrixXd real_initial_;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> real_solver_;
  using ExtMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  ExtMatrix v_, x_, y_, work_;
  using ExtComplex = std::complex<long double>;
  using ExtComplexVector = Eigen::Matrix<ExtComplex, Eigen::Dynamic, 1>;
  Eigen::Matrix<ExtComplex, Eigen::Dynamic, Eigen::Dynamic> vc_;
  ExtComplexVector cy_, cwork_;
};

Snapshot snapshot(double t, const ComplexVector& psi) {
  Snapshot s{t, std::abs(psi.norm() - 1.0), {}};
  s.probabilities.resize(static_cast<std::size_t>(psi.size()));
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    s.probabilities[static_cast<std::size_t>(i)] = std::norm(psi[i]);
  }
  return s;
}

}  // namespace

EvolutionTrace evolve(const AdiabaticFamily& family, const StateVector& init,
                      const EvolutionParams& params) {
  const double T = params.total_time;
  const double h = params.step;
  if (!(T > 0.0) || !std::isfinite(T)) throw ConfigError("total time T must be positive");
  if (!(h > 0.0) || !std::isfinite(h)) throw ConfigError("step h must be positive");
  if (h > T) throw ConfigError("step h must not exceed T");
  if (params.record_grid < 2) throw ConfigError("record grid needs at least 2 points");
  if (!(init.basis() == family.basis())) {
    throw BasisMismatch("initial state and family live on different bases");
  }
  if (std::abs(init.norm() - 1.0) > 1e-10) throw ConfigError("initial state is not normalized");

  // Steps start at k*h; the last one ends exactly at T.
  auto full = static_cast<std::size_t>(std::floor(T / h + 1e-9));
  full = std::max<std::size_t>(full, 1);
  const double remainder = T - static_cast<double>(full) * h;
  const std::size_t total_steps = full + (remainder > 1e-12 * T ? 1 : 0);
  auto boundary = [&](std::size_t k) {
    return k >= total_steps ? T : static_cast<double>(k) * h;
  };

  // Nearest step boundary for each snapshot time.
  std::vector<std::size_t> record_at(params.record_grid);
  for (std::size_t j = 0; j < params.record_grid; ++j) {
    const double target = T * static_cast<double>(j) / static_cast<double>(params.record_grid - 1);
    auto k = static_cast<std::size_t>(std::llround(target / h));
    k = std::min(k, total_steps);
    if (k + 1 == total_steps && total_steps > full &&
        std::abs(boundary(k + 1) - target) < std::abs(boundary(k) - target)) {
      ++k;
    }
    record_at[j] = k;
  }

  ComplexVector psi = init.amplitudes();
  EvolutionTrace trace{{}, init, 0, 0.0};
  trace.snapshots.reserve(params.record_grid);
  std::size_t next_record = 0;
  auto record = [&](std::size_t k) {
    while (next_record < record_at.size() && record_at[next_record] == k) {
      trace.snapshots.push_back(snapshot(boundary(k), psi));
      ++next_record;
    }
  };

  Stepper stepper(family, T);
  record(0);
  for (std::size_t k = 0; k < total_steps; ++k) {
    const double t = boundary(k);
    const double dt = boundary(k + 1) - t;
    if (params.integrator == Integrator::RK4) {
      stepper.rk4(psi, t, dt);
    } else {
      stepper.midpoint_exponential(psi, t, dt);
    }

    const double norm = psi.norm();
    if (!std::isfinite(norm)) {
      throw EvolutionError("non-finite amplitudes at t = " + std::to_string(t + dt) +
                           "; reduce the step size");
    }
    const double drift = std::abs(norm - 1.0);
    trace.max_norm_error = std::max(trace.max_norm_error, drift);
    if (drift > params.max_norm_drift) {
      std::ostringstream msg;
      msg << "norm drift " << drift << " exceeds " << params.max_norm_drift
          << " at t = " << t + dt << " with h = " << h
          << "; reduce the step size (RK4 needs h * max|E| well below 1)";
      throw EvolutionError(msg.str());
    }
    if (params.renormalize && params.integrator == Integrator::RK4) psi /= norm;
    record(k + 1);
  }

  trace.steps = total_steps;
  trace.final_state = StateVector(init.basis(), std::move(psi));
  return trace;
}

void write_csv(const EvolutionTrace& trace, std::ostream& out) {
  const auto old_precision = out.precision(17);
  out << "t,norm_error,p_top1,p_top2,top1_index\n";
  for (const auto& s : trace.snapshots) {
    std::size_t top1 = 0;
    for (std::size_t i = 1; i < s.probabilities.size(); ++i) {
      if (s.probabilities[i] > s.probabilities[top1]) top1 = i;
    }
    double top2 = 0.0;
    for (std::size_t i = 0; i < s.probabilities.size(); ++i) {
      if (i != top1) top2 = std::max(top2, s.probabilities[i]);
    }
    out << s.t << ',' << s.norm_error << ',' << s.probabilities[top1] << ',' << top2 << ','
        << top1 << '\n';
  }
  out.precision(old_precision);
}

}  // namespace qadsim
