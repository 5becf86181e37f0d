#include "qadsim/fock/basis.hpp"

#include <limits>
#include <string>

#include "qadsim/error.hpp"

namespace qadsim {

FockBasis::FockBasis(std::size_t num_modes, std::int64_t cutoff)
    : num_modes_(num_modes), cutoff_(cutoff), dimension_(1), strides_(num_modes) {
  if (num_modes == 0) throw ConfigError("Fock basis needs at least one mode");
  if (cutoff < 0) throw ConfigError("cutoff must be non-negative");
  const auto per_mode = static_cast<std::size_t>(cutoff) + 1;
  for (std::size_t m = num_modes; m-- > 0;) {
    strides_[m] = dimension_;
    if (dimension_ > std::numeric_limits<std::size_t>::max() / per_mode) {
      throw ConfigError("Fock basis dimension overflows");
    }
    dimension_ *= per_mode;
  }
}

std::vector<std::int64_t> FockBasis::occupations(std::size_t index) const {
  std::vector<std::int64_t> out(num_modes_);
  for (std::size_t m = 0; m < num_modes_; ++m) out[m] = occupation(index, m);
  return out;
}

std::int64_t FockBasis::occupation(std::size_t index, std::size_t mode) const {
  const auto per_mode = static_cast<std::size_t>(cutoff_) + 1;
  return static_cast<std::int64_t>((index / strides_[mode]) % per_mode);
}

std::size_t FockBasis::index(std::span<const std::int64_t> occupations) const {
  if (occupations.size() != num_modes_) {
    throw ArityError("occupation tuple has " + std::to_string(occupations.size()) +
                     " entries, basis has " + std::to_string(num_modes_) + " modes");
  }
  std::size_t i = 0;
  for (std::size_t m = 0; m < num_modes_; ++m) {
    if (occupations[m] < 0 || occupations[m] > cutoff_) {
      throw ArityError("occupation out of range for cutoff " +
                       std::to_string(cutoff_));
    }
    i += static_cast<std::size_t>(occupations[m]) * strides_[m];
  }
  return i;
}

bool FockBasis::shifted(std::size_t index, std::size_t mode, int delta,
                        std::size_t& out) const {
  const std::int64_t n = occupation(index, mode) + delta;
  if (n < 0 || n > cutoff_) return false;
  out = delta >= 0 ? index + static_cast<std::size_t>(delta) * strides_[mode]
                   : index - static_cast<std::size_t>(-delta) * strides_[mode];
  return true;
}

}  // namespace qadsim
