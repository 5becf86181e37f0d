#include <functional>

#include "box.hpp"
#include "qadsim/kernels/kernels.hpp"

namespace qadsim::kernels::serial {

void dense_matvec(DenseView m, std::span<const cplx> x, std::span<cplx> y) {
  detail::check_matvec(m.rows, m.cols, x.size(), y.size());
  for (std::size_t r = 0; r < m.rows; ++r) {
    cplx acc = 0.0;
    const cplx* row = m.data + r * m.cols;
    for (std::size_t c = 0; c < m.cols; ++c) acc += row[c] * x[c];
    y[r] = acc;
  }
}

std::optional<Point> first_zero(const Polynomial& p, std::int64_t bound) {
  const std::size_t k = p.num_vars();
  detail::box_points(k, bound);
  Point point(k, 0);
  std::optional<Point> found;

  // Points of total degree `remaining` over coordinates [i, k), ascending lex.
  std::function<bool(std::size_t, std::int64_t)> visit =
      [&](std::size_t i, std::int64_t remaining) -> bool {
    if (i + 1 == k) {
      if (remaining > bound) return false;
      point[i] = remaining;
      if (p.evaluate(point) == 0) {
        found = point;
        return true;
      }
      return false;
    }
    const auto rest = static_cast<std::int64_t>(k - i - 1) * bound;
    for (std::int64_t v = std::max<std::int64_t>(0, remaining - rest);
         v <= std::min(bound, remaining); ++v) {
      point[i] = v;
      if (visit(i + 1, remaining - v)) return true;
    }
    return false;
  };

  const auto max_degree = static_cast<std::int64_t>(k) * bound;
  for (std::int64_t d = 0; d <= max_degree; ++d) {
    if (visit(0, d)) return found;
  }
  return std::nullopt;
}

BoxMinimum box_minimum(const Polynomial& p, std::int64_t bound) {
  const std::size_t k = p.num_vars();
  const std::uint64_t n = detail::box_points(k, bound);
  GradedLexLess less;
  BoxMinimum best;
  wide_int best_abs = -1;
  Point point(k);
  for (std::uint64_t i = 0; i < n; ++i) {
    detail::decode(i, bound, point);
    const wide_int a = detail::abs_wide(p.evaluate(point));
    if (best_abs < 0 || a < best_abs) {
      best_abs = a;
      best.argmin = point;
      best.multiplicity = 1;
    } else if (a == best_abs) {
      ++best.multiplicity;
      if (less(point, best.argmin)) best.argmin = point;
    }
  }
  best.min_square = detail::square_wide(best_abs);
  return best;
}

std::vector<std::int64_t> squared_values(const Polynomial& p, std::int64_t cutoff) {
  const std::size_t k = p.num_vars();
  const std::uint64_t n = detail::box_points(k, cutoff);
  std::vector<std::int64_t> out(n);
  Point point(k);
  for (std::uint64_t i = 0; i < n; ++i) {
    detail::decode(i, cutoff, point);
    out[i] = detail::square_to_int64(p.evaluate(point));
  }
  return out;
}

}  // namespace qadsim::kernels::serial
