#ifndef QADSIM_DIOPHANTINE_POLYNOMIAL_HPP
#define QADSIM_DIOPHANTINE_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qadsim {

__extension__ typedef __int128 wide_int;
__extension__ typedef unsigned __int128 wide_uint;

std::string to_string(wide_int value);

using Exponents = std::vector<std::uint32_t>;
using Point = std::vector<std::int64_t>;

/// Graded-lexicographic order: total degree first, then lexicographic.
/// Used both for monomials and for integer points.
struct GradedLexLess {
  bool operator()(std::span<const std::uint32_t> a,
                  std::span<const std::uint32_t> b) const;
  bool operator()(std::span<const std::int64_t> a,
                  std::span<const std::int64_t> b) const;
  bool operator()(const Exponents& a, const Exponents& b) const {
    return (*this)(std::span<const std::uint32_t>(a),
                   std::span<const std::uint32_t>(b));
  }
  bool operator()(const Point& a, const Point& b) const {
    return (*this)(std::span<const std::int64_t>(a),
                   std::span<const std::int64_t>(b));
  }
};

enum class Semantics { NonNegative, Positive };

std::string to_string(Semantics semantics);
Semantics semantics_from_string(const std::string& text);

/// Multivariate polynomial with exact 64-bit integer coefficients.
///
/// Terms are kept in canonical form: no zero coefficients, every exponent
/// tuple has length num_vars(), iteration in ascending graded-lex order.
/// All arithmetic is overflow-checked and throws OverflowError instead of
/// wrapping. Binary operations require identical variable lists.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, std::int64_t, GradedLexLess>;

  explicit Polynomial(std::vector<std::string> variables);

  static Polynomial constant(std::vector<std::string> variables,
                             std::int64_t value);
  static Polynomial variable(std::vector<std::string> variables,
                             std::size_t index);

  std::size_t num_vars() const noexcept { return variables_.size(); }
  const std::vector<std::string>& variables() const noexcept {
    return variables_;
  }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::uint64_t degree() const;

  /// Adds c * x^exponents into the polynomial, dropping cancelled terms.
  void add_term(const Exponents& exponents, std::int64_t coefficient);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    return lhs += rhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    return lhs -= rhs;
  }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial pow(std::uint64_t exponent) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Exact value at a point of non-negative integers, computed with 128-bit
  /// intermediates.
  wide_int evaluate(std::span<const std::int64_t> point) const;

  /// Canonical text, highest graded-lex term first, e.g. "x^3 + 3*x^2 - 7".
  std::string to_string() const;

 private:
  void require_same_variables(const Polynomial& other) const;

  std::vector<std::string> variables_;
  TermMap terms_;
};

/// Positive mode replaces every x_i by x_i + 1; NonNegative is the identity.
Polynomial substitute_shift(const Polynomial& p, Semantics semantics);

}  // namespace qadsim

#endif  // QADSIM_DIOPHANTINE_POLYNOMIAL_HPP
