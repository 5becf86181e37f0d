#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "qadsim/diophantine/parser.hpp"
#include "qadsim/diophantine/search.hpp"
#include "qadsim/error.hpp"
#include "qadsim/hamiltonian/spectrum.hpp"

using namespace qadsim;

namespace {

AdiabaticFamily family_for(const char* eq, std::int64_t cutoff, double alpha) {
  const Polynomial p = parse(eq);
  const FockBasis basis(p.num_vars(), cutoff);
  const std::vector<cplx> alphas(p.num_vars(), alpha);
  return AdiabaticFamily::build(p, basis, alphas);
}

std::vector<double> as_vector(const RealVector& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("problem Hamiltonian diagonals") {
  CHECK(as_vector(build_problem_hamiltonian(parse("x-1"), FockBasis(1, 3)).diagonal_values()) ==
        std::vector<double>{1, 0, 1, 4});
  CHECK(as_vector(build_problem_hamiltonian(parse("2*x-3"), FockBasis(1, 3)).diagonal_values()) ==
        std::vector<double>{9, 1, 1, 9});
  CHECK_THROWS_AS(build_problem_hamiltonian(parse("x-1"), FockBasis(2, 3)), ArityError);
}

TEST_CASE("problem Hamiltonian is non-negative and its ground level is the box minimum") {
  for (const char* eq : {"x+y-5", "2*x-3", "x*y-7", "x^2-y^2-3", "x^2+y^2+1"}) {
    CAPTURE(eq);
    const Polynomial p = parse(eq);
    const FockBasis basis(p.num_vars(), 6);
    const auto levels = problem_levels(p, basis);
    CHECK(*std::min_element(levels.begin(), levels.end()) >= 0);
    const BoxMinimum m = min_over_box(p, 6);
    CHECK(static_cast<wide_int>(*std::min_element(levels.begin(), levels.end())) == m.min_square);
    CHECK(std::count(levels.begin(), levels.end(), levels[basis.index(m.argmin)]) ==
          static_cast<std::ptrdiff_t>(m.multiplicity));
  }
}

TEST_CASE("initial Hamiltonian with zero displacement is the number operator sum") {
  const FockBasis b1(1, 3);
  const std::vector<cplx> zero1{0.0};
  const auto h1 = build_initial_hamiltonian(b1, zero1);
  REQUIRE(h1.hamiltonian.is_diagonal());
  CHECK(as_vector(h1.hamiltonian.diagonal_values()) == std::vector<double>{0, 1, 2, 3});

  const FockBasis b2(2, 2);
  const std::vector<cplx> zero2{0.0, 0.0};
  const auto h2 = build_initial_hamiltonian(b2, zero2);
  const Eigenpair g = ground_state(h2.hamiltonian);
  CHECK(g.energy == 0.0);
  CHECK(g.vector.amplitudes()[0] == cplx(1.0));
  for (std::size_t i = 0; i < b2.dimension(); ++i) {
    const auto n = b2.occupations(i);
    CHECK(h2.hamiltonian.diagonal_values()[static_cast<Eigen::Index>(i)] ==
          static_cast<double>(n[0] + n[1]));
  }
}

TEST_CASE("initial Hamiltonian ground state is the coherent state") {
  const FockBasis b(1, 16);
  const std::vector<cplx> alphas{0.5};
  const auto hi = build_initial_hamiltonian(b, alphas);
  const Eigenpair g = ground_state(hi.hamiltonian);
  CHECK(g.energy < 1e-8);
  const double overlap = std::abs(g.vector.amplitudes().dot(hi.coherent.amplitudes()));
  CHECK(overlap > 1 - 1e-6);
}

TEST_CASE("interpolation endpoints are exact") {
  const AdiabaticFamily f = family_for("x+y-5", 3, 0.7);
  CHECK(f.at(0.0).to_dense() == f.initial().to_dense());
  CHECK(f.at(1.0).to_dense() == f.problem().to_dense());
  CHECK(interpolate(f, 1.0).to_dense() == f.problem().to_dense());
  CHECK_THROWS_AS(f.at(1.5), ConfigError);
  CHECK_THROWS_AS(f.at(-0.1), ConfigError);
}

TEST_CASE("interpolation is Hermitian and apply matches the dense matrix") {
  const AdiabaticFamily f = family_for("x*y-2", 4, 0.6);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> g;
  const auto d = static_cast<Eigen::Index>(f.basis().dimension());
  for (int trial = 0; trial < 20; ++trial) {
    const double s = u(rng);
    const DenseMatrix h = f.dense_at(s);
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
    ComplexVector x(d), y(d);
    for (auto& v : x) v = {g(rng), g(rng)};
    f.apply(s, {x.data(), static_cast<std::size_t>(d)}, {y.data(), static_cast<std::size_t>(d)});
    CHECK((y - h * x).norm() < 1e-12);
  }
}

TEST_CASE("smooth-step schedule") {
  CHECK(schedule_weight(Schedule::SmoothStep, 0.0) == 0.0);
  CHECK(schedule_weight(Schedule::SmoothStep, 1.0) == 1.0);
  CHECK(schedule_weight(Schedule::SmoothStep, 0.5) == 0.5);
  CHECK(schedule_weight(Schedule::SmoothStep, 0.25) == doctest::Approx(0.15625));
  CHECK(schedule_weight(Schedule::Linear, 0.25) == 0.25);
  CHECK(schedule_from_string("smoothstep") == Schedule::SmoothStep);
  CHECK_THROWS_AS(schedule_from_string("cubic"), ConfigError);
}

TEST_CASE("spectrum endpoints") {
  SUBCASE("s = 1 is the sorted list of D^2") {
    const AdiabaticFamily f = family_for("x+y-3", 3, 0.7);
    const RealVector e = eigenvalues(f.at(1.0));
    std::vector<double> expected(f.levels().begin(), f.levels().end());
    std::sort(expected.begin(), expected.end());
    CHECK(as_vector(e) == expected);
  }
  SUBCASE("s = 0, alpha = 0") {
    const AdiabaticFamily f = family_for("x-1", 3, 0.0);
    SpectralOptions opts;
    opts.grid_size = 2;
    opts.levels = 4;
    const SpectralProfile p = spectral_profile(f, opts);
    CHECK(p.energies[0] == std::vector<double>{0, 1, 2, 3});
  }
}

TEST_CASE("spectral profile: parallel matches serial and CSV layout") {
  const AdiabaticFamily f = family_for("x+y-4", 4, 0.7);
  SpectralOptions opts;
  opts.grid_size = 21;
  opts.levels = 3;
  const SpectralProfile par = spectral_profile(f, opts);
  opts.parallel = false;
  const SpectralProfile ser = spectral_profile(f, opts);
  CHECK(par.energies == ser.energies);
  CHECK(par.min_gap == ser.min_gap);
  CHECK(par.endpoint_excluded);
  CHECK(par.ground_degeneracy == 5);
  CHECK(par.gap.back() == doctest::Approx(0.0).epsilon(1e-9));

  std::ostringstream csv;
  write_csv(par, csv);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "s,E_0,E_1,E_2,gap");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 21);

  opts.grid_size = 1;
  CHECK_THROWS_AS(spectral_profile(f, opts), ConfigError);
  opts.grid_size = 5;
  opts.levels = 100;
  CHECK_THROWS_AS(spectral_profile(f, opts), ConfigError);
}

// Minimum gap over a 101-point grid (s = 1 dropped for degenerate H_P),
// from an independent numpy/scipy dense eigensolve.
TEST_CASE("minimum gap regression anchors") {
  struct Anchor {
    const char* equation;
    double alpha;
    double min_gap;
    double at_s;
  };
  const double a = 1.0 / std::sqrt(2.0);
  const Anchor anchors[] = {
      {"x-1", 0.5, 4.6892442727e-01, 0.57},
      {"x-1", a, 6.1989550762e-01, 0.64},
      {"2*x-3", a, 2.2355021755e-02, 0.99},
      {"x-20", a, 5.2854062146e-01, 0.02},
      {"x+y-5", a, 2.0168133475e-04, 0.99},
      {"x*y-6", a, 1.0957667653e-04, 0.99},
  };
  for (const auto& an : anchors) {
    CAPTURE(an.equation);
    const AdiabaticFamily f = family_for(an.equation, 8, an.alpha);
    const SpectralProfile p = spectral_profile(f);
    CHECK(p.min_gap == doctest::Approx(an.min_gap).epsilon(1e-7));
    CHECK(p.min_gap_s == doctest::Approx(an.at_s));
    CHECK_FALSE(p.crossing_suspected);
  }
}

TEST_CASE("crossing flag") {
  // alpha = 0 keeps H(s) diagonal, so levels cross.
  const AdiabaticFamily f = family_for("x-2", 3, 0.0);
  SpectralOptions opts;
  opts.grid_size = 101;
  opts.levels = 2;
  const SpectralProfile p = spectral_profile(f, opts);
  CHECK(p.crossing_suspected);
}
