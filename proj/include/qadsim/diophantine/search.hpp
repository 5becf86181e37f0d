#ifndef QADSIM_DIOPHANTINE_SEARCH_HPP
#define QADSIM_DIOPHANTINE_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "qadsim/diophantine/polynomial.hpp"

namespace qadsim {

struct SearchLimits {
  std::uint64_t work_cap = 100'000'000;  // evaluations, i.e. (bound+1)^k
};

struct BoxMinimum {
  wide_int min_square = 0;  // min of D(n)^2 over the box
  Point argmin;             // graded-lex smallest minimizer
  std::uint64_t multiplicity = 0;
};

/// Graded-lex smallest zero of p in [0,bound]^k, if any.
std::optional<Point> brute_force_search(const Polynomial& p, std::int64_t bound,
                                        const SearchLimits& limits = {});

BoxMinimum min_over_box(const Polynomial& p, std::int64_t bound,
                        const SearchLimits& limits = {});

/// Throws WorkCapError unless (bound+1)^k <= limits.work_cap.
std::uint64_t box_size(std::size_t num_vars, std::int64_t bound,
                       const SearchLimits& limits = {});

}  // namespace qadsim

#endif  // QADSIM_DIOPHANTINE_SEARCH_HPP
