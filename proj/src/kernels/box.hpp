#ifndef QADSIM_KERNELS_BOX_HPP
#define QADSIM_KERNELS_BOX_HPP

// Helpers shared by the serial and parallel kernels.

#include <cstdint>
#include <limits>

#include "qadsim/diophantine/polynomial.hpp"
#include "qadsim/error.hpp"

namespace qadsim::kernels::detail {

inline void check_matvec(std::size_t rows, std::size_t cols, std::size_t x, std::size_t y) {
  if (cols != x || rows != y) throw BasisMismatch("matvec shape mismatch");
}

inline std::uint64_t box_points(std::size_t k, std::int64_t bound) {
  if (bound < 0) throw ConfigError("bound must be non-negative");
  wide_uint n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= static_cast<wide_uint>(bound) + 1;
    if (n > std::numeric_limits<std::uint64_t>::max()) {
      throw WorkCapError("box size exceeds 64-bit range");
    }
  }
  return static_cast<std::uint64_t>(n);
}

/// Row-major decode, first coordinate slowest.
inline void decode(std::uint64_t index, std::int64_t bound, Point& out) {
  const auto base = static_cast<std::uint64_t>(bound) + 1;
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<std::int64_t>(index % base);
    index /= base;
  }
}

inline wide_int abs_wide(wide_int v) {
  if (v == std::numeric_limits<wide_int>::min()) {
    throw OverflowError("evaluation overflow: |D| exceeds signed 128-bit range");
  }
  return v < 0 ? -v : v;
}

inline wide_int square_wide(wide_int v) {
  wide_int out;
  if (__builtin_mul_overflow(v, v, &out)) {
    throw OverflowError("D^2 exceeds signed 128-bit range");
  }
  return out;
}

inline std::int64_t square_to_int64(wide_int v) {
  constexpr wide_int limit = 3037000499;  // floor(sqrt(INT64_MAX))
  if (v > limit || v < -limit) {
    throw OverflowError("D(n)^2 = (" + to_string(v) +
                        ")^2 does not fit signed 64-bit");
  }
  return static_cast<std::int64_t>(v * v);
}

}  // namespace qadsim::kernels::detail

#endif  // QADSIM_KERNELS_BOX_HPP
