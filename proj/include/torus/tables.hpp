#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "torus/bipoly.hpp"
#include "torus/laurent.hpp"
#include "torus/render.hpp"

namespace torus {

struct TableRow {
  std::string label;  // e.g. "A_1^(3,2)(t)"
  std::variant<LaurentPoly, BiPoly> value;
  TermOrder order = TermOrder::first_ascending;

  /// "label = polynomial".
  std::string text() const;
};

/// Families: knot (m = 0..max), link (m = 1/2 .. max-1/2), unified
/// (s = 1..max), homfly (m = 0..max), qnum and qpnum (n = 1..max),
/// alexander-qp and alexander-rx (n = 0..max), chebyshev-first and
/// chebyshev-second (n = 0..max).
/// Throws std::invalid_argument for an unknown family or negative max.
std::vector<TableRow> make_table(std::string_view family, int max);

const std::vector<std::string>& table_families();

}  // namespace torus
