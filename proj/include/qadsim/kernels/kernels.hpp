#ifndef QADSIM_KERNELS_KERNELS_HPP
#define QADSIM_KERNELS_KERNELS_HPP

// Data-parallel inner loops. Every kernel has a straightforward serial
// reference in `serial` and an OpenMP version in `parallel` with identical
// results: reductions use the graded-lex tie-break and each output element
// is summed in a fixed order, so the parallel results do not depend on the
// thread count.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qadsim/diophantine/polynomial.hpp"
#include "qadsim/diophantine/search.hpp"

namespace qadsim::kernels {

using cplx = std::complex<double>;

/// y = M x for a row-major n x n matrix.
struct DenseView {
  const cplx* data;
  std::size_t rows;
  std::size_t cols;
};

namespace serial {

void dense_matvec(DenseView m, std::span<const cplx> x, std::span<cplx> y);
std::optional<Point> first_zero(const Polynomial& p, std::int64_t bound);
BoxMinimum box_minimum(const Polynomial& p, std::int64_t bound);
/// D(n)^2 at every point of the box [0,cutoff]^k in row-major order
/// (first variable slowest). Throws OverflowError if a square exceeds int64.
std::vector<std::int64_t> squared_values(const Polynomial& p, std::int64_t cutoff);

}  // namespace serial

namespace parallel {

void dense_matvec(DenseView m, std::span<const cplx> x, std::span<cplx> y);
std::optional<Point> first_zero(const Polynomial& p, std::int64_t bound);
BoxMinimum box_minimum(const Polynomial& p, std::int64_t bound);
std::vector<std::int64_t> squared_values(const Polynomial& p, std::int64_t cutoff);

}  // namespace parallel

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();
void set_threads(int n);

}  // namespace qadsim::kernels

#endif  // QADSIM_KERNELS_KERNELS_HPP
