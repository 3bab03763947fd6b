#pragma once

// Text and JSON forms of polynomials.
//
// Text lists univariate terms by descending exponent with explicit signs:
// "t - 1 + t^(-1)", "t^(1/2) - t^(-1/2)". JSON uses
//   {"variable":"t","den":2,"terms":[{"num":2,"coeff":"1"},...]}
// for univariate and
//   {"variables":["a","z"],"den":2,"terms":[{"numA":4,"numB":0,"coeff":"-1"},...]}
// for bivariate polynomials, terms in descending exponent order and
// coefficients as decimal strings.

#include <string>
#include <string_view>

#include "torus/bipoly.hpp"
#include "torus/laurent.hpp"
#include "torus/radical.hpp"

namespace torus {

enum class Style { text, json };

/// Term order for bivariate text output.
enum class TermOrder {
  /// Ascending in the first variable, then in the second (HOMFLY tables).
  first_ascending,
  /// Descending in the first variable, ascending in the second
  /// ("q - qp + p").
  first_descending,
  /// Ascending in the first variable, descending in the second
  /// ("r^2 x^2 - r^2 - r^3 x").
  second_descending,
  /// Descending in the first variable, then in the second.
  descending,
};

std::string render(const LaurentPoly& p, Style style = Style::text);
std::string render(const BiPoly& p, Style style = Style::text, TermOrder order = TermOrder::first_ascending);
/// Text: "r^(1/2) sqrt(x - 2)"; JSON: {"prefactor":{...},"radicands":[...]}.
std::string render(const RadicalExpr& e, Style style = Style::text, TermOrder order = TermOrder::descending);

/// Inverse of the JSON forms above. Throws ParseError.
LaurentPoly laurent_from_json(std::string_view json);
BiPoly bipoly_from_json(std::string_view json);

}  // namespace torus
