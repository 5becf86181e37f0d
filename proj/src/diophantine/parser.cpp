#include "qadsim/diophantine/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "qadsim/error.hpp"

namespace qadsim {

namespace {

enum class TokenKind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Equals, End };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t position;
};

std::string describe(const Token& t) {
  if (t.kind == TokenKind::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      tokens.push_back({TokenKind::Number, src.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isalnum(static_cast<unsigned char>(src[i]))) ++i;
      tokens.push_back({TokenKind::Ident, src.substr(start, i - start), start});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '=': kind = TokenKind::Equals; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    tokens.push_back({kind, src.substr(start, 1), start});
    ++i;
  }
  tokens.push_back({TokenKind::End, {}, src.size()});
  return tokens;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<std::string> variables)
      : tokens_(std::move(tokens)), variables_(std::move(variables)) {}

  Polynomial equation() {
    Polynomial lhs = expr();
    if (peek().kind == TokenKind::Equals) {
      advance();
      Polynomial rhs = expr();
      lhs -= rhs;
    }
    if (peek().kind != TokenKind::End) {
      throw ParseError("unexpected " + describe(peek()), peek().position);
    }
    return lhs;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  Polynomial expr() {
    bool negate = false;
    if (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      negate = advance().kind == TokenKind::Minus;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      const bool minus = advance().kind == TokenKind::Minus;
      Polynomial rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek().kind == TokenKind::Star) {
      advance();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (peek().kind == TokenKind::Caret) {
      advance();
      const Token& t = peek();
      if (t.kind != TokenKind::Number) {
        throw ParseError(
            "exponent must be a non-negative integer literal, got " + describe(t),
            t.position);
      }
      advance();
      std::uint64_t e = 0;
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), e);
      if (ec != std::errc() || e > UINT32_MAX) {
        throw ParseError("exponent literal too large", t.position);
      }
      b = b.pow(e);
    }
    return b;
  }

  Polynomial base() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Number: {
        advance();
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc()) {
          throw OverflowError("integer literal " + std::string(t.text) +
                              " exceeds signed 64-bit range at position " +
                              std::to_string(t.position));
        }
        return Polynomial::constant(variables_, v);
      }
      case TokenKind::Ident: {
        advance();
        auto it = std::find(variables_.begin(), variables_.end(), t.text);
        if (it == variables_.end()) {
          throw ParseError("unknown variable '" + std::string(t.text) + "'",
                           t.position);
        }
        return Polynomial::variable(variables_,
                                    static_cast<std::size_t>(it - variables_.begin()));
      }
      case TokenKind::LParen: {
        advance();
        Polynomial inner = expr();
        if (peek().kind != TokenKind::RParen) {
          throw ParseError("expected ')', got " + describe(peek()), peek().position);
        }
        advance();
        return inner;
      }
      default:
        throw ParseError("expected number, variable or '(', got " + describe(t),
                         t.position);
    }
  }

  std::vector<Token> tokens_;
  std::vector<std::string> variables_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view source, const ParseOptions& options) {
  auto tokens = tokenize(source);

  std::size_t equals = 0;
  for (const auto& t : tokens) {
    if (t.kind == TokenKind::Equals && ++equals > 1) {
      throw ParseError("more than one '='", t.position);
    }
  }

  std::vector<std::string> variables;
  if (options.variables) {
    variables = *options.variables;
  } else {
    std::set<std::string> names;
    for (const auto& t : tokens) {
      if (t.kind == TokenKind::Ident) names.emplace(t.text);
    }
    variables.assign(names.begin(), names.end());
  }
  if (variables.empty()) {
    throw ParseError("equation has no variables", 0);
  }
  if (variables.size() > options.max_variables) {
    throw ParseError("equation has " + std::to_string(variables.size()) +
                         " variables; the limit is " +
                         std::to_string(options.max_variables),
                     0);
  }

  return Parser(std::move(tokens), std::move(variables)).equation();
}

}  // namespace qadsim
