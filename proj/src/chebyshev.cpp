#include "torus/chebyshev.hpp"

#include <utility>
#include <vector>

#include "torus/qseries.hpp"

namespace torus {
namespace {

std::vector<LaurentPoly> three_term(LaurentPoly seed0, std::size_t n_max) {
  const auto x = LaurentPoly::indeterminate("x");
  std::vector<LaurentPoly> out{std::move(seed0), x};
  while (out.size() <= n_max) out.push_back(x * out.back() - out[out.size() - 2]);
  out.resize(n_max + 1);
  return out;
}

}  // namespace

std::vector<LaurentPoly> cheb_first_table(std::size_t n_max) {
  return three_term(LaurentPoly::constant(2, "x"), n_max);
}

std::vector<LaurentPoly> cheb_second_table(std::size_t n_max) {
  return three_term(LaurentPoly::constant(1, "x"), n_max);
}

LaurentPoly cheb_first(std::size_t n) { return cheb_first_table(n).back(); }

LaurentPoly cheb_second(std::size_t n) { return cheb_second_table(n).back(); }

BiPoly cheb_second_qp(std::size_t n) { return qpnum_closed(n + 1); }

BiPoly cheb_second_rx(std::size_t n) {
  const auto r_power = BiPoly::monomial(1, HalfExp::whole(static_cast<int>(n)), HalfExp{0}, rx_vars());
  BiPoly in_x(rx_vars());
  const LaurentPoly v = cheb_second(n);
  for (const auto& [num, c] : v.terms()) {
    in_x += BiPoly::monomial(c, HalfExp{0}, HalfExp{num}, rx_vars());
  }
  return r_power * in_x;
}

}  // namespace torus
