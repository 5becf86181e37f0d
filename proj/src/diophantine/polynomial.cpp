#include "qadsim/diophantine/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "qadsim/error.hpp"

namespace qadsim {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("coefficient overflow: sum exceeds signed 64-bit range");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError(
        "coefficient overflow: product exceeds signed 64-bit range");
  }
  return out;
}

std::uint32_t checked_exponent_add(std::uint32_t a, std::uint32_t b) {
  std::uint32_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("exponent overflow");
  }
  return out;
}

wide_int wide_mul(wide_int a, wide_int b) {
  wide_int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("evaluation overflow: exceeds signed 128-bit range");
  }
  return out;
}

wide_int wide_add(wide_int a, wide_int b) {
  wide_int out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("evaluation overflow: exceeds signed 128-bit range");
  }
  return out;
}

template <class T>
bool graded_lex_less(std::span<const T> a, std::span<const T> b) {
  // Sums of non-negative entries; a 128-bit accumulator cannot overflow for
  // the tuple lengths used here.
  wide_int da = 0;
  wide_int db = 0;
  for (auto v : a) da += v;
  for (auto v : b) db += v;
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::string to_string(wide_int value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work with the negative magnitude so that the minimum value is handled.
  std::string digits;
  wide_int v = value;
  while (v != 0) {
    int d = static_cast<int>(v % 10);
    digits.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

bool GradedLexLess::operator()(std::span<const std::uint32_t> a,
                               std::span<const std::uint32_t> b) const {
  return graded_lex_less(a, b);
}

bool GradedLexLess::operator()(std::span<const std::int64_t> a,
                               std::span<const std::int64_t> b) const {
  return graded_lex_less(a, b);
}

std::string to_string(Semantics semantics) {
  return semantics == Semantics::Positive ? "positive" : "nonneg";
}

Semantics semantics_from_string(const std::string& text) {
  if (text == "nonneg" || text == "nonnegative") return Semantics::NonNegative;
  if (text == "positive") return Semantics::Positive;
  throw ConfigError("unknown semantics '" + text +
                    "' (expected nonneg or positive)");
}

Polynomial::Polynomial(std::vector<std::string> variables)
    : variables_(std::move(variables)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables,
                                std::int64_t value) {
  Polynomial p(std::move(variables));
  p.add_term(Exponents(p.num_vars(), 0), value);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables,
                                std::size_t index) {
  Polynomial p(std::move(variables));
  if (index >= p.num_vars()) {
    throw ArityError("variable index out of range");
  }
  Exponents e(p.num_vars(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t best = 0;
  for (const auto& [e, c] : terms_) {
    best = std::max<std::uint64_t>(
        best, std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
  }
  return best;
}

void Polynomial::add_term(const Exponents& exponents, std::int64_t coefficient) {
  if (exponents.size() != num_vars()) {
    throw ArityError("exponent tuple has length " +
                     std::to_string(exponents.size()) + ", expected " +
                     std::to_string(num_vars()));
  }
  if (coefficient == 0) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, coefficient);
    return;
  }
  it->second = checked_add(it->second, coefficient);
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::require_same_variables(const Polynomial& other) const {
  if (variables_ != other.variables_) {
    throw ArityError("polynomials are over different variable lists");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(variables_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, checked_mul(c, -1));
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_variables(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_variables(other);
  for (const auto& [e, c] : other.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.require_same_variables(rhs);
  Polynomial out(lhs.variables_);
  Exponents e(lhs.num_vars());
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = checked_exponent_add(ea[i], eb[i]);
      }
      out.add_term(e, checked_mul(ca, cb));
    }
  }
  return out;
}

Polynomial Polynomial::pow(std::uint64_t exponent) const {
  Polynomial result = constant(variables_, 1);
  Polynomial base = *this;
  // Monomials raise exactly without repeated squaring of huge exponents.
  if (terms_.size() == 1) {
    const auto& [e, c] = *terms_.begin();
    Exponents raised(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      wide_uint v = static_cast<wide_uint>(e[i]) * exponent;
      if (v > UINT32_MAX) throw OverflowError("exponent overflow");
      raised[i] = static_cast<std::uint32_t>(v);
    }
    std::int64_t coeff = 1;
    for (std::uint64_t k = 0; k < exponent; ++k) {
      if (c == 1) break;
      if (c == -1) {
        coeff = (exponent % 2 == 0) ? 1 : -1;
        break;
      }
      coeff = checked_mul(coeff, c);
    }
    Polynomial out(variables_);
    out.add_term(raised, coeff);
    return out;
  }
  if (is_zero()) {
    return exponent == 0 ? constant(variables_, 1) : Polynomial(variables_);
  }
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

wide_int Polynomial::evaluate(std::span<const std::int64_t> point) const {
  if (point.size() != num_vars()) {
    throw ArityError("point has " + std::to_string(point.size()) +
                     " coordinates, polynomial has " +
                     std::to_string(num_vars()) + " variables");
  }
  for (auto v : point) {
    if (v < 0) throw ArityError("evaluation point must be non-negative");
  }
  wide_int total = 0;
  for (const auto& [e, c] : terms_) {
    wide_int term = c;
    for (std::size_t i = 0; i < e.size() && term != 0; ++i) {
      const wide_int x = point[i];
      for (std::uint32_t k = 0; k < e[i]; ++k) {
        if (x == 1) break;
        term = wide_mul(term, x);
        if (term == 0) break;
      }
    }
    total = wide_add(total, term);
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    // |INT64_MIN| does not fit int64; print through 128 bits.
    const wide_int magnitude = negative ? -static_cast<wide_int>(c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    bool constant_term =
        std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
    bool wrote = false;
    if (magnitude != 1 || constant_term) {
      out << qadsim::to_string(magnitude);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << '*';
      out << variables_[i];
      if (e[i] > 1) out << '^' << e[i];
      wrote = true;
    }
  }
  return out.str();
}

Polynomial substitute_shift(const Polynomial& p, Semantics semantics) {
  if (semantics == Semantics::NonNegative) return p;
  const auto& vars = p.variables();
  std::vector<Polynomial> shifted;
  shifted.reserve(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    shifted.push_back(Polynomial::variable(vars, i) +
                      Polynomial::constant(vars, 1));
  }
  Polynomial out(vars);
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term = term * shifted[i].pow(e[i]);
    }
    out += term;
  }
  return out;
}

}  // namespace qadsim
