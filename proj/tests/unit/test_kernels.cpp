#include <doctest.h>

#include <random>

#include "qadsim/diophantine/parser.hpp"
#include "qadsim/error.hpp"
#include "qadsim/kernels/kernels.hpp"

using namespace qadsim;
namespace k = qadsim::kernels;

TEST_CASE("dense matvec: parallel matches serial") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (std::size_t n : {1u, 7u, 64u, 200u}) {
    std::vector<k::cplx> m(n * n), x(n), ys(n), yp(n);
    for (auto& v : m) v = {g(rng), g(rng)};
    for (auto& v : x) v = {g(rng), g(rng)};
    k::serial::dense_matvec({m.data(), n, n}, x, ys);
    k::parallel::dense_matvec({m.data(), n, n}, x, yp);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ys[i] - yp[i]) < 1e-12);
  }
}

TEST_CASE("dense matvec checks shapes") {
  std::vector<k::cplx> m(6), x(3), y(3);
  CHECK_THROWS(k::serial::dense_matvec({m.data(), 2, 3}, x, y));
  CHECK_THROWS(k::parallel::dense_matvec({m.data(), 2, 3}, x, y));
}

TEST_CASE("box kernels: parallel matches serial") {
  const char* equations[] = {"x+y-5",       "2*x-3",     "x^2+y^2-25",   "x*y-6",
                             "3*x-2*y-1",   "x^2-2",     "x-20",         "x+y+z-4",
                             "x^3-y^2-4",   "(x-y)^2",   "x*y*z-8",      "x^2+1"};
  for (const char* eq : equations) {
    CAPTURE(eq);
    const Polynomial p = parse(eq);
    for (std::int64_t bound : {0, 3, 8}) {
      CHECK(k::serial::first_zero(p, bound) == k::parallel::first_zero(p, bound));
      const BoxMinimum s = k::serial::box_minimum(p, bound);
      const BoxMinimum q = k::parallel::box_minimum(p, bound);
      CHECK(s.min_square == q.min_square);
      CHECK(s.argmin == q.argmin);
      CHECK(s.multiplicity == q.multiplicity);
      CHECK(k::serial::squared_values(p, bound) == k::parallel::squared_values(p, bound));
    }
  }
}

TEST_CASE("thread count does not change results") {
  const Polynomial p = parse("x^2 + y^2 + z^2 - 27");
  const int original = k::max_threads();
  const BoxMinimum reference = k::serial::box_minimum(p, 12);
  for (int t : {1, 2, 3, 8}) {
    k::set_threads(t);
    const BoxMinimum q = k::parallel::box_minimum(p, 12);
    CHECK(q.argmin == reference.argmin);
    CHECK(q.multiplicity == reference.multiplicity);
    CHECK(k::parallel::first_zero(p, 12) == k::serial::first_zero(p, 12));
  }
  k::set_threads(original);
}

TEST_CASE("squared_values layout and overflow") {
  const auto v = k::parallel::squared_values(parse("x-1"), 3);
  CHECK(v == std::vector<std::int64_t>{1, 0, 1, 4});
  const auto w = k::parallel::squared_values(parse("x - y"), 1);
  CHECK(w == std::vector<std::int64_t>{0, 1, 1, 0});
  CHECK_THROWS_AS(k::parallel::squared_values(parse("x - 3037000500"), 0), OverflowError);
  CHECK_THROWS_AS(k::serial::squared_values(parse("x - 3037000500"), 0), OverflowError);
}
