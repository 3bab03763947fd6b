#include "torus/tables.hpp"

#include <stdexcept>
#include <string>

#include "torus/chebyshev.hpp"
#include "torus/invariants.hpp"
#include "torus/qseries.hpp"

namespace torus {
namespace {

std::string sup(int s) { return "^(" + std::to_string(s) + ",2)"; }

}  // namespace

std::string TableRow::text() const {
  return label + " = " +
         std::visit(
             [this](const auto& p) {
               if constexpr (std::is_same_v<std::decay_t<decltype(p)>, BiPoly>) {
                 return render(p, Style::text, order);
               } else {
                 return render(p, Style::text);
               }
             },
             value);
}

const std::vector<std::string>& table_families() {
  static const std::vector<std::string> families{"knot",         "link",         "unified",         "homfly",
                                                 "qnum",         "qpnum",        "alexander-qp",    "alexander-rx",
                                                 "chebyshev-first", "chebyshev-second"};
  return families;
}

std::vector<TableRow> make_table(std::string_view family, int max) {
  if (max < 0) throw std::invalid_argument("table size must be nonnegative");
  std::vector<TableRow> rows;
  if (family == "knot") {
    for (int m = 0; m <= max; ++m) {
      const int s = 2 * m + 1;
      rows.push_back({"A_" + std::to_string(m) + sup(s) + "(t)", alexander_closed(TorusIndex(s))});
    }
  } else if (family == "link") {
    for (int k = 1; k <= max; ++k) {
      const int s = 2 * k;
      rows.push_back({"A_(" + std::to_string(s - 1) + "/2)" + sup(s) + "(t)", alexander_closed(TorusIndex(s))});
    }
  } else if (family == "unified") {
    if (max >= 1) {
      const auto seq = alexander_unified_rec(max);
      for (int s = 1; s <= max; ++s) rows.push_back({"~A_" + std::to_string(s - 1) + sup(s) + "(t)", seq[s - 1]});
    }
  } else if (family == "homfly") {
    const auto seq = homfly_rec(static_cast<std::size_t>(std::max(max, 1)));
    for (int m = 0; m <= max; ++m) rows.push_back({"H_" + std::to_string(m) + sup(2 * m + 1) + "(a,z)", seq[m]});
  } else if (family == "qnum") {
    for (int n = 1; n <= max; ++n) rows.push_back({"[" + std::to_string(n) + "]_q", qnum_closed(n)});
  } else if (family == "qpnum") {
    for (int n = 1; n <= max; ++n) {
      rows.push_back({"[" + std::to_string(n) + "]_(q,p)", qpnum_closed(n), TermOrder::first_descending});
    }
  } else if (family == "alexander-qp") {
    for (int n = 0; n <= max; ++n) {
      rows.push_back({"A_" + std::to_string(n) + "^2(q,p)", alexander_qp(n), TermOrder::first_descending});
    }
  } else if (family == "alexander-rx") {
    for (int n = 0; n <= max; ++n) rows.push_back({"A_" + std::to_string(n) + "^2(r,x)", alexander_rx(n), TermOrder::second_descending});
  } else if (family == "chebyshev-first") {
    for (int n = 0; n <= max; ++n) rows.push_back({"T_" + std::to_string(n) + "(x)", cheb_first(n)});
  } else if (family == "chebyshev-second") {
    for (int n = 0; n <= max; ++n) rows.push_back({"V_" + std::to_string(n) + "(x)", cheb_second(n)});
  } else {
    throw std::invalid_argument("unknown table family '" + std::string(family) + "'");
  }
  return rows;
}

}  // namespace torus
