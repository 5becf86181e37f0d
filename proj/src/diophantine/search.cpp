#include "qadsim/diophantine/search.hpp"

#include <string>

#include "qadsim/error.hpp"
#include "qadsim/kernels/kernels.hpp"
#include "../kernels/box.hpp"

namespace qadsim {

std::uint64_t box_size(std::size_t num_vars, std::int64_t bound,
                       const SearchLimits& limits) {
  const std::uint64_t n = kernels::detail::box_points(num_vars, bound);
  if (n > limits.work_cap) {
    throw WorkCapError("box [0," + std::to_string(bound) + "]^" +
                       std::to_string(num_vars) + " has " + std::to_string(n) +
                       " points, above the work cap of " +
                       std::to_string(limits.work_cap));
  }
  return n;
}

std::optional<Point> brute_force_search(const Polynomial& p, std::int64_t bound,
                                        const SearchLimits& limits) {
  box_size(p.num_vars(), bound, limits);
  return kernels::parallel::first_zero(p, bound);
}

BoxMinimum min_over_box(const Polynomial& p, std::int64_t bound,
                        const SearchLimits& limits) {
  box_size(p.num_vars(), bound, limits);
  return kernels::parallel::box_minimum(p, bound);
}

}  // namespace qadsim
