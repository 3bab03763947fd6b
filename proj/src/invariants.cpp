#include "torus/invariants.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "torus/chebyshev.hpp"
#include "torus/qseries.hpp"

namespace torus {
namespace {

// x_{k+1} = c1 x_k + c2 x_{k-1}; returns x_0..x_count-1.
template <class Poly>
std::vector<Poly> linear_recurrence(Poly seed0, Poly seed1, const Poly& c1, const Poly& c2, std::size_t count) {
  std::vector<Poly> out;
  out.reserve(count);
  if (count >= 1) out.push_back(std::move(seed0));
  if (count >= 2) out.push_back(std::move(seed1));
  while (out.size() < count) {
    const std::size_t k = out.size();
    out.push_back(c1 * out[k - 1] + c2 * out[k - 2]);
  }
  return out;
}

void require_positive(long long value, const char* what) {
  if (value < 1) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

}  // namespace

TorusIndex::TorusIndex(int s) : s_(s) {
  if (s < 1) throw std::invalid_argument("torus index s must be at least 1");
}

LaurentPoly alexander_closed(TorusIndex idx) {
  std::vector<LaurentTerm> terms;
  const int top = idx.degree().num;
  for (int i = 0; i < idx.s(); ++i) terms.emplace_back(HalfExp{top - 2 * i}, i % 2 == 0 ? 1 : -1);
  return LaurentPoly::from_terms(terms, "t");
}

std::vector<LaurentPoly> alexander_unified_rec(int s_max) {
  require_positive(s_max, "s_max");
  const auto b1 = LaurentPoly::from_terms({{HalfExp{1}, 1}, {HalfExp{-1}, -1}}, "t");
  const auto b2 = LaurentPoly::constant(1, "t");
  return linear_recurrence(LaurentPoly::constant(1, "t"), b1, b1, b2, static_cast<std::size_t>(s_max));
}

std::vector<LaurentPoly> alexander_knot_rec(int m_max) {
  require_positive(m_max, "m_max");
  const auto c1 = LaurentPoly::from_terms({{HalfExp::whole(1), 1}, {HalfExp::whole(-1), 1}}, "t");
  const auto c2 = LaurentPoly::constant(-1, "t");
  const auto a1 = LaurentPoly::from_terms({{HalfExp::whole(1), 1}, {HalfExp{0}, -1}, {HalfExp::whole(-1), 1}}, "t");
  return linear_recurrence(LaurentPoly::constant(1, "t"), a1, c1, c2, static_cast<std::size_t>(m_max) + 1);
}

LaurentPoly alexander_from_qnum(std::size_t m) {
  return (qnum_closed(m + 1) - qnum_closed(m)).renamed("t");
}

BiPoly alexander_qp(std::size_t n) {
  const BiPoly qp = BiPoly::var_a(qp_vars()) * BiPoly::var_b(qp_vars());
  return qpnum_closed(n + 1) - qp * qpnum_closed(n);
}

std::vector<BiPoly> alexander_qp_rec(std::size_t n_max) {
  const BiPoly q = BiPoly::var_a(qp_vars());
  const BiPoly p = BiPoly::var_b(qp_vars());
  return linear_recurrence(BiPoly::constant(1, qp_vars()), q - q * p + p, q + p, -(q * p), n_max + 1);
}

BiPoly alexander_rx(std::size_t n) {
  BiPoly out = cheb_second_rx(n);
  if (n == 0) return out;
  // r^n * r * V_{n-1}(x) = r^2 * V_{n-1}(r,x)
  const BiPoly r2 = BiPoly::monomial(1, HalfExp::whole(2), HalfExp{0}, rx_vars());
  return out - r2 * cheb_second_rx(n - 1);
}

std::vector<BiPoly> alexander_rx_rec(std::size_t n_max) {
  const BiPoly r = BiPoly::var_a(rx_vars());
  const BiPoly x = BiPoly::var_b(rx_vars());
  return linear_recurrence(BiPoly::constant(1, rx_vars()), r * x - r * r, r * x, -(r * r), n_max + 1);
}

std::vector<BiPoly> homfly_rec(std::size_t m_max) {
  require_positive(static_cast<long long>(m_max), "m_max");
  const auto vars = az_vars();
  auto mono = [&](int c, int a, int z) { return BiPoly::monomial(c, HalfExp::whole(a), HalfExp::whole(z), vars); };
  const BiPoly h1 = mono(2, 2, 0) + mono(1, 2, 2) - mono(1, 4, 0);
  const BiPoly c1 = mono(1, 2, 2) + mono(2, 2, 0);
  const BiPoly c2 = mono(-1, 4, 0);
  return linear_recurrence(BiPoly::constant(1, vars), h1, c1, c2, m_max + 1);
}

BiPoly homfly_from_alexander(std::size_t n) {
  const auto vars = az_vars();
  const BiPoly r_image = BiPoly::monomial(1, HalfExp::whole(2), HalfExp{0}, vars);
  const BiPoly x_image = BiPoly::monomial(1, HalfExp{0}, HalfExp::whole(2), vars) + BiPoly::constant(2, vars);
  return bi_substitute(alexander_rx(n), r_image, x_image);
}

}  // namespace torus
