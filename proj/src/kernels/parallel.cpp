#include <exception>
#include <mutex>

#ifdef QADSIM_HAVE_OPENMP
#include <omp.h>
#endif

#include "box.hpp"
#include "qadsim/kernels/kernels.hpp"

namespace qadsim::kernels {

int max_threads() {
#ifdef QADSIM_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef QADSIM_HAVE_OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

namespace parallel {

namespace {

// Flat copy of a polynomial for the hot loop: coefficients and a
// num_terms x k exponent table.
class FlatPolynomial {
 public:
  explicit FlatPolynomial(const Polynomial& p) : k_(p.num_vars()) {
    for (const auto& [e, c] : p.terms()) {
      coeffs_.push_back(c);
      exps_.insert(exps_.end(), e.begin(), e.end());
    }
  }

  wide_int operator()(const Point& x) const {
    wide_int total = 0;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
      wide_int term = coeffs_[t];
      const std::uint32_t* e = exps_.data() + t * k_;
      for (std::size_t i = 0; i < k_ && term != 0; ++i) {
        const wide_int xi = x[i];
        if (xi == 1) continue;
        for (std::uint32_t j = 0; j < e[i] && term != 0; ++j) {
          if (__builtin_mul_overflow(term, xi, &term)) overflow();
        }
      }
      if (__builtin_add_overflow(total, term, &total)) overflow();
    }
    return total;
  }

 private:
  [[noreturn]] static void overflow() {
    throw OverflowError("evaluation overflow: exceeds signed 128-bit range");
  }

  std::size_t k_;
  std::vector<std::int64_t> coeffs_;
  std::vector<std::uint32_t> exps_;
};

// Collects the first exception thrown inside a parallel region.
class ErrorSlot {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

}  // namespace

void dense_matvec(DenseView m, std::span<const cplx> x, std::span<cplx> y) {
  detail::check_matvec(m.rows, m.cols, x.size(), y.size());
  const auto rows = static_cast<std::int64_t>(m.rows);
  // One row per iteration; each row is summed left to right, so the result is
  // bitwise identical to the serial kernel.
#pragma omp parallel for schedule(static) if (m.rows * m.cols >= 4096)
  for (std::int64_t r = 0; r < rows; ++r) {
    cplx acc = 0.0;
    const cplx* row = m.data + static_cast<std::size_t>(r) * m.cols;
    for (std::size_t c = 0; c < m.cols; ++c) acc += row[c] * x[c];
    y[static_cast<std::size_t>(r)] = acc;
  }
}

std::optional<Point> first_zero(const Polynomial& p, std::int64_t bound) {
  const std::size_t k = p.num_vars();
  const auto n = static_cast<std::int64_t>(detail::box_points(k, bound));
  const FlatPolynomial eval(p);
  GradedLexLess less;
  std::optional<Point> best;
  ErrorSlot errors;

#pragma omp parallel
  {
    std::optional<Point> local;
    Point point(k);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      errors.run([&] {
        detail::decode(static_cast<std::uint64_t>(i), bound, point);
        if (eval(point) == 0 && (!local || less(point, *local))) local = point;
      });
    }
#pragma omp critical(qadsim_first_zero)
    {
      if (local && (!best || less(*local, *best))) best = std::move(local);
    }
  }
  errors.rethrow();
  return best;
}

BoxMinimum box_minimum(const Polynomial& p, std::int64_t bound) {
  const std::size_t k = p.num_vars();
  const auto n = static_cast<std::int64_t>(detail::box_points(k, bound));
  const FlatPolynomial eval(p);
  GradedLexLess less;
  wide_int best_abs = -1;
  BoxMinimum best;
  ErrorSlot errors;

#pragma omp parallel
  {
    wide_int local_abs = -1;
    Point local_arg;
    std::uint64_t local_count = 0;
    Point point(k);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      errors.run([&] {
        detail::decode(static_cast<std::uint64_t>(i), bound, point);
        const wide_int a = detail::abs_wide(eval(point));
        if (local_abs < 0 || a < local_abs) {
          local_abs = a;
          local_arg = point;
          local_count = 1;
        } else if (a == local_abs) {
          ++local_count;
          if (less(point, local_arg)) local_arg = point;
        }
      });
    }
#pragma omp critical(qadsim_box_minimum)
    {
      if (local_abs >= 0) {
        if (best_abs < 0 || local_abs < best_abs) {
          best_abs = local_abs;
          best.argmin = local_arg;
          best.multiplicity = local_count;
        } else if (local_abs == best_abs) {
          best.multiplicity += local_count;
          if (less(local_arg, best.argmin)) best.argmin = local_arg;
        }
      }
    }
  }
  errors.rethrow();
  best.min_square = detail::square_wide(best_abs);
  return best;
}

std::vector<std::int64_t> squared_values(const Polynomial& p, std::int64_t cutoff) {
  const std::size_t k = p.num_vars();
  const auto n = static_cast<std::int64_t>(detail::box_points(k, cutoff));
  const FlatPolynomial eval(p);
  std::vector<std::int64_t> out(static_cast<std::size_t>(n));
  ErrorSlot errors;

#pragma omp parallel
  {
    Point point(k);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      errors.run([&] {
        detail::decode(static_cast<std::uint64_t>(i), cutoff, point);
        out[static_cast<std::size_t>(i)] = detail::square_to_int64(eval(point));
      });
    }
  }
  errors.rethrow();
  return out;
}

}  // namespace parallel
}  // namespace qadsim::kernels
