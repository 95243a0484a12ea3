#pragma once

// Expression front end. Grammar:
//
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := ['-'] atom ['^' nat]
//   atom     := rational | var | '(' expr ')'
//   rational := int ['/' nat]
//   var      := 'x' nat            (x1 .. xN, 1-based in the surface syntax)
//
// Exponentiation expands eagerly, so parsing always yields canonical form.
// Implicit multiplication and division of expressions are rejected.

#include <string>

#include "dcsos/polynomial.hpp"

namespace dcsos {

Polynomial parse(const std::string& text, int nvars);

// Highest variable index mentioned in the text (0 if none); lets callers
// size the variable universe before parsing.
int max_variable_index(const std::string& text);

enum class FormatStyle { plain, latex };

// Canonical rendering, terms in ascending grlex order. parse(format(p))
// reproduces p exactly.
std::string format(const Polynomial& p, FormatStyle style = FormatStyle::plain);

std::string format(const Monomial& m, int nvars, FormatStyle style = FormatStyle::plain);

}  // namespace dcsos
