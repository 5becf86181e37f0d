#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "qadsim/diophantine/parser.hpp"
#include "qadsim/error.hpp"
#include "qadsim/evolution/extrapolate.hpp"
#include "qadsim/hamiltonian/spectrum.hpp"

using namespace qadsim;

namespace {

AdiabaticFamily family_for(const char* eq, std::int64_t cutoff, double alpha) {
  const Polynomial p = parse(eq);
  const FockBasis basis(p.num_vars(), cutoff);
  const std::vector<cplx> alphas(p.num_vars(), alpha);
  return AdiabaticFamily::build(p, basis, alphas);
}

StateVector ground(const AdiabaticFamily& f) { return ground_state(f.initial()).vector; }

EvolutionParams params(double T, double h, Integrator integrator) {
  EvolutionParams p;
  p.total_time = T;
  p.step = h;
  p.integrator = integrator;
  return p;
}

StateVector random_state(const FockBasis& b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  ComplexVector v(static_cast<Eigen::Index>(b.dimension()));
  for (auto& x : v) x = {g(rng), g(rng)};
  return StateVector(b, v).normalized();
}

}  // namespace

TEST_CASE("diagonal generator leaves probabilities invariant") {
  const AdiabaticFamily f = family_for("x+y-3", 3, 0.0);
  REQUIRE(f.initial().is_diagonal());
  const StateVector init = random_state(f.basis(), 1);
  const auto p0 = init.probabilities();
  const EvolutionTrace t = evolve(f, init, params(7.0, 0.05, Integrator::MidpointExponential));
  for (const auto& snap : t.snapshots) {
    for (std::size_t i = 0; i < p0.size(); ++i) CHECK(std::abs(snap.probabilities[i] - p0[i]) < 1e-12);
  }
}

TEST_CASE("one short step stays within the generator bound") {
  const AdiabaticFamily f = family_for("x-2", 5, 0.7);
  const StateVector init = random_state(f.basis(), 2);
  double max_e = 0.0;
  for (double s : {0.0, 1.0}) max_e = std::max(max_e, eigenvalues(f.at(s)).cwiseAbs().maxCoeff());
  for (Integrator integ : {Integrator::RK4, Integrator::MidpointExponential}) {
    for (double h : {1e-2, 1e-3, 1e-4}) {
      const EvolutionTrace t = evolve(f, init, params(h, h, integ));
      const double moved = (t.final_state.amplitudes() - init.amplitudes()).norm();
      CHECK(moved <= max_e * h * (1 + 1e-6));
    }
  }
}

TEST_CASE("step count and snapshot grid") {
  const AdiabaticFamily f = family_for("x-1", 2, 0.5);
  const StateVector init = ground(f);
  EvolutionParams p = params(1.0, 0.3, Integrator::MidpointExponential);
  p.record_grid = 11;
  const EvolutionTrace t = evolve(f, init, p);
  CHECK(t.steps == 4);  // 3 full steps and a partial one of 0.1
  REQUIRE(t.snapshots.size() == 11);
  CHECK(t.snapshots.front().t == 0.0);
  CHECK(t.snapshots.back().t == 1.0);
  for (std::size_t i = 1; i < t.snapshots.size(); ++i) {
    CHECK(t.snapshots[i].t >= t.snapshots[i - 1].t);
  }

  p.step = 0.25;
  CHECK(evolve(f, init, p).steps == 4);
}

TEST_CASE("midpoint exponential is unitary") {
  const AdiabaticFamily f = family_for("x*y-2", 3, 0.7);
  const EvolutionTrace t = evolve(f, ground(f), params(20.0, 0.05, Integrator::MidpointExponential));
  CHECK(t.max_norm_error <= 1e-12);
  for (const auto& snap : t.snapshots) {
    double sum = 0.0;
    for (double q : snap.probabilities) sum += q;
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
}

TEST_CASE("global phase does not change probabilities") {
  const AdiabaticFamily f = family_for("x-2", 6, 0.7);
  const StateVector init = random_state(f.basis(), 3);
  const StateVector rotated(f.basis(), std::polar(1.0, 1.234) * init.amplitudes());
  for (Integrator integ : {Integrator::RK4, Integrator::MidpointExponential}) {
    const auto a = evolve(f, init, params(5.0, 0.01, integ)).final_state;
    const auto b = evolve(f, rotated, params(5.0, 0.01, integ)).final_state;
    const ComplexVector expected = std::polar(1.0, 1.234) * a.amplitudes();
    CHECK((b.amplitudes() - expected).norm() < 1e-12);
  }
}

TEST_CASE("integrators agree at small step") {
  const AdiabaticFamily f = family_for("x-1", 6, 0.5);
  const StateVector init = ground(f);
  const auto a = evolve(f, init, params(10.0, 1e-3, Integrator::RK4)).final_state.probabilities();
  const auto b =
      evolve(f, init, params(10.0, 1e-3, Integrator::MidpointExponential)).final_state.probabilities();
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-6);
}

TEST_CASE("evolution input errors") {
  const AdiabaticFamily f = family_for("x-1", 3, 0.5);
  const StateVector init = ground(f);
  CHECK_THROWS_AS(evolve(f, init, params(1.0, 2.0, Integrator::RK4)), ConfigError);
  CHECK_THROWS_AS(evolve(f, init, params(0.0, 0.1, Integrator::RK4)), ConfigError);
  CHECK_THROWS_AS(evolve(f, init, params(1.0, -0.1, Integrator::RK4)), ConfigError);
  CHECK_THROWS_AS(evolve(f, basis_state(FockBasis(1, 4), 0), params(1.0, 0.1, Integrator::RK4)),
                  BasisMismatch);
  const StateVector unnormalized(f.basis(), 2.0 * init.amplitudes());
  CHECK_THROWS_AS(evolve(f, unnormalized, params(1.0, 0.1, Integrator::RK4)), ConfigError);
}

TEST_CASE("RK4 drift beyond the limit is an error with advice") {
  // max |E| is 400 at s = 1, far outside the RK4 stability region for h = 0.1.
  const AdiabaticFamily f = family_for("x-20", 8, 0.7);
  try {
    evolve(f, ground(f), params(10.0, 0.1, Integrator::RK4));
    FAIL("expected EvolutionError");
  } catch (const EvolutionError& e) {
    CHECK(std::string(e.what()).find("reduce the step size") != std::string::npos);
  }
}

TEST_CASE("trace CSV") {
  const AdiabaticFamily f = family_for("x-1", 2, 0.5);
  EvolutionParams p = params(1.0, 0.1, Integrator::MidpointExponential);
  p.record_grid = 3;
  std::ostringstream out;
  write_csv(evolve(f, ground(f), p), out);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,norm_error,p_top1,p_top2,top1_index");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("Richardson on synthetic sequences") {
  const std::vector<double> h{0.4, 0.2, 0.1, 0.05};

  SUBCASE("converged samples") {
    const std::vector<double> f(4, 0.625);
    const Extrapolation e = richardson(h, f);
    CHECK(e.value == 0.625);
    CHECK(e.error_estimate == 0.0);
    CHECK_FALSE(e.order.has_value());
  }
  SUBCASE("pure power law is recovered exactly") {
    std::vector<double> f;
    for (double x : h) f.push_back(0.75 + 3.0 * x * x * x);
    const Extrapolation e = richardson(h, f);
    CHECK(*e.order == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(e.value == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(e.error_estimate < 1e-12);
  }
  SUBCASE("three samples report the size of the correction") {
    const std::vector<double> h3{0.2, 0.1, 0.05};
    std::vector<double> f;
    for (double x : h3) f.push_back(1.0 + x * x);
    const Extrapolation e = richardson(h3, f);
    CHECK(*e.order == doctest::Approx(2.0));
    CHECK(e.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.error_estimate == doctest::Approx(0.05 * 0.05).epsilon(1e-9));
  }
  SUBCASE("non-monotone differences") {
    const std::vector<double> f{1.0, 1.1, 1.0, 1.3};
    CHECK_THROWS_AS(richardson(h, f), NotAsymptoticError);
  }
  SUBCASE("bad step lists") {
    const std::vector<double> two{0.2, 0.1};
    CHECK_THROWS_AS(richardson(two, two), ConfigError);
    const std::vector<double> uneven{0.4, 0.2, 0.15};
    CHECK_THROWS_AS(richardson(uneven, uneven), ConfigError);
    const std::vector<double> rising{0.1, 0.2, 0.4};
    CHECK_THROWS_AS(richardson(rising, rising), ConfigError);
  }
}

TEST_CASE("zero-step extrapolation on an evolution") {
  const AdiabaticFamily f = family_for("x-1", 1, 0.5);
  const StateVector init = ground(f);
  const std::vector<double> steps{0.1, 0.05, 0.025};
  const std::vector<std::size_t> observable{1};
  const Extrapolation rk4 = extrapolate_to_zero_step(f, init, 10.0, steps, observable, Integrator::RK4);
  const Extrapolation mid =
      extrapolate_to_zero_step(f, init, 10.0, steps, observable, Integrator::MidpointExponential);
  CHECK(std::abs(rk4.value - mid.value) < rk4.error_estimate + mid.error_estimate + 1e-12);
  const std::vector<std::size_t> bad{5};
  CHECK_THROWS_AS(extrapolate_to_zero_step(f, init, 10.0, steps, bad, Integrator::RK4), ArityError);
}
