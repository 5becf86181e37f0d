#ifndef QADSIM_DIOPHANTINE_PARSER_HPP
#define QADSIM_DIOPHANTINE_PARSER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qadsim/diophantine/polynomial.hpp"

namespace qadsim {

struct ParseOptions {
  std::size_t max_variables = 8;
  // When set, the polynomial is built over exactly these variables (in this
  // order) and any other identifier is an error. Otherwise the variables are
  // the identifiers found in the text, sorted alphabetically.
  std::optional<std::vector<std::string>> variables;
};

/// Parses an equation or expression into its fully expanded canonical form.
///
/// Grammar:
///   equation := expr ('=' expr)?
///   expr     := ('+'|'-')? term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' nat)?
///   base     := nat | ident | '(' expr ')'
///
/// "LHS = RHS" is normalized to LHS - RHS.
Polynomial parse(std::string_view source, const ParseOptions& options = {});

}  // namespace qadsim

#endif  // QADSIM_DIOPHANTINE_PARSER_HPP
