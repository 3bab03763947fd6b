#include "torus/laurent.hpp"

#include <stdexcept>
#include <vector>

#include "precise_eval.hpp"
#include "torus/errors.hpp"

namespace torus {

LaurentPoly LaurentPoly::from_terms(std::span<const LaurentTerm> terms, std::string variable) {
  LaurentPoly p(std::move(variable));
  for (const auto& [e, c] : terms) p.add_term(e.num, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::initializer_list<LaurentTerm> terms, std::string variable) {
  return from_terms(std::span<const LaurentTerm>(terms.begin(), terms.size()), std::move(variable));
}

LaurentPoly LaurentPoly::constant(const Integer& c, std::string variable) {
  return monomial(c, HalfExp{0}, std::move(variable));
}

LaurentPoly LaurentPoly::monomial(const Integer& c, HalfExp e, std::string variable) {
  LaurentPoly p(std::move(variable));
  p.add_term(e.num, c);
  return p;
}

LaurentPoly LaurentPoly::indeterminate(std::string variable) {
  return monomial(1, HalfExp::whole(1), std::move(variable));
}

LaurentPoly LaurentPoly::renamed(std::string variable) const {
  LaurentPoly p = *this;
  p.variable_ = std::move(variable);
  return p;
}

HalfExp LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of the zero polynomial");
  return HalfExp{terms_.rbegin()->first};
}

HalfExp LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of the zero polynomial");
  return HalfExp{terms_.begin()->first};
}

const Integer& LaurentPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading_coeff of the zero polynomial");
  return terms_.rbegin()->second;
}

Integer LaurentPoly::coeff(HalfExp e) const {
  auto it = terms_.find(e.num);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool LaurentPoly::is_ordinary() const {
  for (const auto& [num, c] : terms_) {
    if (num < 0 || num % 2 != 0) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly p(variable_);
  for (const auto& [num, c] : terms_) p.terms_.emplace(-num, c);
  return p;
}

void LaurentPoly::add_term(int num, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(num, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [num, c] : rhs.terms_) add_term(num, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [num, c] : rhs.terms_) add_term(num, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out(a.variable_);
  Integer prod;
  for (const auto& [na, ca] : a.terms_) {
    for (const auto& [nb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(na + nb, prod);
    }
  }
  return out;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [num, c] : a.terms_) c = -c;
  return a;
}

LaurentPoly pow(const LaurentPoly& base, unsigned exponent) {
  LaurentPoly result = LaurentPoly::constant(1, base.variable());
  LaurentPoly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

LaurentPoly scale(const LaurentPoly& p, const Integer& c) {
  LaurentPoly out(p.variable());
  if (c == 0) return out;
  std::vector<LaurentTerm> terms;
  terms.reserve(p.size());
  for (const auto& [num, coeff] : p.terms()) terms.emplace_back(HalfExp{num}, coeff * c);
  return LaurentPoly::from_terms(terms, p.variable());
}

LaurentPoly shift(const LaurentPoly& p, HalfExp e) {
  return p * LaurentPoly::monomial(1, e, p.variable());
}

LaurentPoly compose(const LaurentPoly& outer, const LaurentPoly& inner) {
  if (!outer.is_ordinary()) {
    throw NonIntegralOuter("compose: outer polynomial must have nonnegative integer exponents");
  }
  LaurentPoly result(inner.variable());
  if (outer.is_zero()) return result;
  // Horner over the dense degree range.
  for (int k = outer.max_exp().num / 2; k >= 0; --k) {
    result *= inner;
    result += LaurentPoly::constant(outer.coeff(HalfExp::whole(k)), inner.variable());
  }
  return result;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact by the zero polynomial");
  LaurentPoly quotient(a.variable());
  if (a.is_zero()) return quotient;
  const int lowest = a.min_exp().num - b.min_exp().num;
  const int b_top = b.max_exp().num;
  const Integer& b_lead = b.leading_coeff();
  LaurentPoly rest = a;
  while (!rest.is_zero()) {
    const int e = rest.max_exp().num - b_top;
    if (e < lowest) return std::nullopt;
    const Integer& top = rest.leading_coeff();
    if (!mpz_divisible_p(top.get_mpz_t(), b_lead.get_mpz_t())) return std::nullopt;
    Integer c = top / b_lead;
    const auto step = LaurentPoly::monomial(c, HalfExp{e}, a.variable());
    rest -= step * b;
    quotient += step;
  }
  return quotient;
}

std::optional<LaurentPoly> try_sqrt_perfect(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("sqrt_perfect of the zero polynomial");
  const int lo = p.min_exp().num;
  const int hi = p.max_exp().num;
  if (lo % 2 != 0 || hi % 2 != 0) return std::nullopt;
  const Integer& lead = p.leading_coeff();
  if (lead < 0 || !mpz_perfect_square_p(lead.get_mpz_t())) return std::nullopt;

  // p = u^lo * P(u) with u = t^(1/2); take the square root of P from the top.
  const int d = (hi - lo) / 2;
  std::vector<Integer> root(static_cast<std::size_t>(d) + 1);
  mpz_sqrt(root[d].get_mpz_t(), lead.get_mpz_t());
  const Integer twice_lead = 2 * root[d];
  Integer acc;
  for (int j = d - 1; j >= 0; --j) {
    acc = p.coeff(HalfExp{lo + d + j});
    for (int i = j + 1; i <= d - 1; ++i) acc -= root[i] * root[d + j - i];
    if (!mpz_divisible_p(acc.get_mpz_t(), twice_lead.get_mpz_t())) return std::nullopt;
    mpz_divexact(root[j].get_mpz_t(), acc.get_mpz_t(), twice_lead.get_mpz_t());
  }

  std::vector<LaurentTerm> terms;
  for (int k = 0; k <= d; ++k) {
    if (root[k] != 0) terms.emplace_back(HalfExp{k + lo / 2}, root[k]);
  }
  auto candidate = LaurentPoly::from_terms(terms, p.variable());
  if (candidate * candidate != p) return std::nullopt;
  return candidate;
}

LaurentPoly sqrt_perfect(const LaurentPoly& p) {
  if (auto r = try_sqrt_perfect(p)) return *std::move(r);
  throw NotAPerfectSquare("polynomial is not a perfect square over the integers");
}

std::complex<double> eval_complex(const LaurentPoly& p, std::complex<double> z) {
  std::vector<detail::MonomialRef> refs;
  refs.reserve(p.size());
  for (const auto& [num, c] : p.terms()) refs.push_back({&c, {num, 0}});
  const std::complex<double> bases[] = {z};
  return detail::precise_eval(refs, bases);
}

}  // namespace torus
