#include "torus/qseries.hpp"

#include <utility>
#include <vector>

namespace torus {

LaurentPoly qnum_closed(std::size_t n) {
  std::vector<LaurentTerm> terms;
  const int top = static_cast<int>(n) - 1;
  for (int i = 0; i < static_cast<int>(n); ++i) terms.emplace_back(HalfExp::whole(top - 2 * i), 1);
  return LaurentPoly::from_terms(terms, "q");
}

std::vector<LaurentPoly> qnum_rec_table(std::size_t n_max) {
  std::vector<LaurentPoly> out{LaurentPoly("q"), LaurentPoly::constant(1, "q")};
  const auto step = LaurentPoly::from_terms({{HalfExp::whole(1), 1}, {HalfExp::whole(-1), 1}}, "q");
  while (out.size() <= n_max) out.push_back(step * out.back() - out[out.size() - 2]);
  out.resize(n_max + 1, LaurentPoly("q"));
  return out;
}

LaurentPoly qnum_rec(std::size_t n) { return qnum_rec_table(n).back(); }

BiPoly qpnum_closed(std::size_t n) {
  std::vector<BiTerm> terms;
  const int top = static_cast<int>(n) - 1;
  for (int i = 0; i < static_cast<int>(n); ++i) {
    terms.push_back({HalfExp::whole(top - i), HalfExp::whole(i), 1});
  }
  return BiPoly::from_terms(terms, qp_vars());
}

std::vector<BiPoly> qpnum_rec_table(std::size_t n_max) {
  std::vector<BiPoly> out{BiPoly(qp_vars()), BiPoly::constant(1, qp_vars())};
  const BiPoly sum = BiPoly::var_a(qp_vars()) + BiPoly::var_b(qp_vars());
  const BiPoly product = BiPoly::var_a(qp_vars()) * BiPoly::var_b(qp_vars());
  while (out.size() <= n_max) out.push_back(sum * out.back() - product * out[out.size() - 2]);
  out.resize(n_max + 1, BiPoly(qp_vars()));
  return out;
}

BiPoly qpnum_rec(std::size_t n) { return qpnum_rec_table(n).back(); }

}  // namespace torus
