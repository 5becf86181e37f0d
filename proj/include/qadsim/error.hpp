#ifndef QADSIM_ERROR_HPP
#define QADSIM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qadsim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed equation text. `position()` is the 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class WorkCapError : public Error {
 public:
  using Error::Error;
};

class BasisMismatch : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class EvolutionError : public Error {
 public:
  using Error::Error;
};

class NotAsymptoticError : public Error {
 public:
  using Error::Error;
};

class EigensolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace qadsim

#endif  // QADSIM_ERROR_HPP
