#ifndef QADSIM_FOCK_BASIS_HPP
#define QADSIM_FOCK_BASIS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qadsim {

/// Box-truncated k-mode Fock basis: every mode holds 0..cutoff quanta, so the
/// dimension is (cutoff+1)^k. Basis index i enumerates occupation tuples in
/// row-major order with mode 0 varying slowest.
class FockBasis {
 public:
  FockBasis(std::size_t num_modes, std::int64_t cutoff);

  std::size_t num_modes() const noexcept { return num_modes_; }
  std::int64_t cutoff() const noexcept { return cutoff_; }
  std::size_t dimension() const noexcept { return dimension_; }

  std::vector<std::int64_t> occupations(std::size_t index) const;
  std::int64_t occupation(std::size_t index, std::size_t mode) const;
  std::size_t index(std::span<const std::int64_t> occupations) const;

  /// Index of the state with `mode` changed by `delta`, if it stays in range.
  bool shifted(std::size_t index, std::size_t mode, int delta,
               std::size_t& out) const;

  friend bool operator==(const FockBasis&, const FockBasis&) = default;

 private:
  std::size_t num_modes_;
  std::int64_t cutoff_;
  std::size_t dimension_;
  std::vector<std::size_t> strides_;
};

}  // namespace qadsim

#endif  // QADSIM_FOCK_BASIS_HPP
