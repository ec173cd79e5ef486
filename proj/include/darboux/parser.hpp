#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "darboux/polynomial.hpp"

namespace darboux {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// Expression grammar (whitespace insignificant, no implicit multiplication):
//   expr   := '-'? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := identifier | number | '(' expr ')'
//   number := nat ('/' nat)?
// Every identifier must appear in `variables`, which also fixes the roster.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

}  // namespace darboux
