#include <doctest.h>

#include <random>

#include "qadsim/diophantine/parser.hpp"
#include "qadsim/diophantine/search.hpp"
#include "qadsim/error.hpp"

using namespace qadsim;

namespace {

std::int64_t coeff(const Polynomial& p, const Exponents& e) {
  auto it = p.terms().find(e);
  return it == p.terms().end() ? 0 : it->second;
}

Polynomial random_polynomial(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> nterms(0, 5), exp(0, 3), c(-20, 20);
  Polynomial p(vars);
  for (int t = nterms(rng); t > 0; --t) {
    Exponents e(vars.size());
    for (auto& v : e) v = static_cast<std::uint32_t>(exp(rng));
    p.add_term(e, c(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("parse reads terms directly") {
  const Polynomial p = parse("x + y - 5");
  CHECK(p.num_vars() == 2);
  CHECK(p.variables() == std::vector<std::string>{"x", "y"});
  CHECK(coeff(p, {1, 0}) == 1);
  CHECK(coeff(p, {0, 1}) == 1);
  CHECK(coeff(p, {0, 0}) == -5);
  CHECK(p.terms().size() == 3);

  const Polynomial q = parse("2*x - 3");
  CHECK(q.num_vars() == 1);
  CHECK(coeff(q, {1}) == 2);
  CHECK(coeff(q, {0}) == -3);
}

TEST_CASE("parse expands powers of sums") {
  const Polynomial p = parse("(x+1)^3 - 8");
  CHECK(p.to_string() == "x^3 + 3*x^2 + 3*x - 7");
  CHECK(p.degree() == 3);
}

TEST_CASE("equations normalize to LHS - RHS") {
  CHECK(parse("x^2 + y^2 = 25") == parse("x^2 + y^2 - 25"));
  CHECK(parse("x = y") == parse("x - y"));
  CHECK(parse("-x + 2") == parse("2 - x"));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse("x^y"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("5"), ParseError);
  CHECK_THROWS_AS(parse("x +"), ParseError);
  CHECK_THROWS_AS(parse("(x + 1"), ParseError);
  CHECK_THROWS_AS(parse("x = 1 = 2"), ParseError);
  CHECK_THROWS_AS(parse("2x"), ParseError);
  CHECK_THROWS_AS(parse("a+b+c+d+e+f+g+h+i"), ParseError);
  CHECK_THROWS_AS(parse("x - 99999999999999999999"), OverflowError);
  CHECK_THROWS_AS(parse("x^99999999999"), ParseError);

  try {
    parse("x + $");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("parse with fixed variable list") {
  ParseOptions opts;
  opts.variables = std::vector<std::string>{"y", "x"};
  const Polynomial p = parse("x - 1", opts);
  CHECK(p.variables() == std::vector<std::string>{"y", "x"});
  CHECK(coeff(p, {0, 1}) == 1);
  CHECK_THROWS_AS(parse("z", opts), ParseError);
}

TEST_CASE("coefficient overflow is detected") {
  CHECK_THROWS_AS(parse("(3037000500*x)^2"), OverflowError);
  CHECK_THROWS_AS(parse("9223372036854775807*x + 9223372036854775807*x"), OverflowError);
  CHECK_NOTHROW(parse("3037000499^2*x"));
}

TEST_CASE("substitute_shift") {
  CHECK(substitute_shift(parse("x - 1"), Semantics::Positive) == parse("x"));
  CHECK(substitute_shift(parse("x - 1"), Semantics::NonNegative) == parse("x - 1"));
  CHECK(substitute_shift(parse("x^2 - 4"), Semantics::Positive) == parse("x^2 + 2*x - 3"));
}

TEST_CASE("evaluate") {
  const std::vector<std::int64_t> a{2, 3};
  CHECK(parse("x+y-5").evaluate(a) == 0);
  const std::vector<std::int64_t> b{1};
  CHECK(parse("2*x-3").evaluate(b) == -1);
  const std::vector<std::int64_t> c{2, 3, 4};
  CHECK(parse("(x+1)^3+(y+1)^3-(z+1)^3").evaluate(c) == -34);

  const std::vector<std::int64_t> neg{-1};
  CHECK_THROWS_AS(parse("x").evaluate(neg), ArityError);
  const std::vector<std::int64_t> wrong{1, 2};
  CHECK_THROWS_AS(parse("x").evaluate(wrong), ArityError);

  // Exact beyond 64 bits.
  const std::vector<std::int64_t> big{3037000500};
  CHECK(parse("x^2").evaluate(big) == static_cast<wide_int>(3037000500) * 3037000500);
}

TEST_CASE("brute_force_search") {
  CHECK(brute_force_search(parse("x+y-5"), 10) == Point{0, 5});
  CHECK_FALSE(brute_force_search(parse("2*x-3"), 100).has_value());
  CHECK(brute_force_search(parse("(x+1)^2+(y+1)^2-(z+1)^2"), 6) == Point{2, 3, 4});
  CHECK_THROWS_AS(brute_force_search(parse("x+y+z+w"), 1000), WorkCapError);
  CHECK_THROWS_AS(brute_force_search(parse("x"), -1), ConfigError);
}

TEST_CASE("min_over_box") {
  auto m = min_over_box(parse("x-1"), 3);
  CHECK(m.min_square == 0);
  CHECK(m.argmin == Point{1});
  CHECK(m.multiplicity == 1);

  m = min_over_box(parse("2*x-3"), 3);
  CHECK(m.min_square == 1);
  CHECK(m.argmin == Point{1});
  CHECK(m.multiplicity == 2);

  m = min_over_box(parse("x+y-5"), 7);
  CHECK(m.min_square == 0);
  CHECK(m.argmin == Point{0, 5});
  CHECK(m.multiplicity == 6);
}

TEST_CASE("graded-lex order") {
  GradedLexLess less;
  CHECK(less(Point{0, 5}, Point{1, 4}));
  CHECK(less(Point{5, 0}, Point{0, 6}));
  CHECK_FALSE(less(Point{1, 1}, Point{1, 1}));
  CHECK(less(Point{0, 2}, Point{1, 1}));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> vars{"x", "y"};
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = random_polynomial(rng, vars);
    const Polynomial b = random_polynomial(rng, vars);
    const Polynomial c = random_polynomial(rng, vars);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a.pow(2) == a * a);
  }
}

TEST_CASE("print and parse round-trip") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int trial = 0; trial < 300; ++trial) {
    const Polynomial p = random_polynomial(rng, vars);
    if (p.is_zero()) continue;
    ParseOptions opts;
    opts.variables = vars;
    CHECK(parse(p.to_string(), opts) == p);
  }
}

TEST_CASE("evaluate is a ring homomorphism") {
  std::mt19937_64 rng(13);
  const std::vector<std::string> vars{"x", "y"};
  std::uniform_int_distribution<std::int64_t> pt(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = random_polynomial(rng, vars);
    const Polynomial b = random_polynomial(rng, vars);
    const Point x{pt(rng), pt(rng)};
    CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
  }
}

TEST_CASE("shift agrees with evaluation at n + 1") {
  std::mt19937_64 rng(17);
  const std::vector<std::string> vars{"x", "y"};
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial p = random_polynomial(rng, vars);
    const Polynomial q = substitute_shift(p, Semantics::Positive);
    for (std::int64_t i = 0; i < 4; ++i) {
      for (std::int64_t j = 0; j < 4; ++j) {
        CHECK(q.evaluate(Point{i, j}) == p.evaluate(Point{i + 1, j + 1}));
      }
    }
  }
}

TEST_CASE("found witnesses are zeros") {
  for (const char* eq : {"x^2+y^2-25", "x*y-6", "3*x-2*y-1", "x^3-y^2-4"}) {
    const Polynomial p = parse(eq);
    const auto w = brute_force_search(p, 20);
    REQUIRE(w.has_value());
    CHECK(p.evaluate(*w) == 0);
  }
}
