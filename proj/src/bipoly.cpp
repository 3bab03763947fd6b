#include "torus/bipoly.hpp"

#include <stdexcept>
#include <vector>

#include "precise_eval.hpp"
#include "torus/errors.hpp"

namespace torus {

BiPoly BiPoly::from_terms(std::span<const BiTerm> terms, VariablePair vars) {
  BiPoly p(std::move(vars));
  for (const auto& t : terms) p.add_term({t.a.num, t.b.num}, t.coeff);
  return p;
}

BiPoly BiPoly::from_terms(std::initializer_list<BiTerm> terms, VariablePair vars) {
  return from_terms(std::span<const BiTerm>(terms.begin(), terms.size()), std::move(vars));
}

BiPoly BiPoly::constant(const Integer& c, VariablePair vars) {
  return monomial(c, HalfExp{0}, HalfExp{0}, std::move(vars));
}

BiPoly BiPoly::monomial(const Integer& c, HalfExp a, HalfExp b, VariablePair vars) {
  BiPoly p(std::move(vars));
  p.add_term({a.num, b.num}, c);
  return p;
}

BiPoly BiPoly::var_a(VariablePair vars) {
  return monomial(1, HalfExp::whole(1), HalfExp{0}, std::move(vars));
}

BiPoly BiPoly::var_b(VariablePair vars) {
  return monomial(1, HalfExp{0}, HalfExp::whole(1), std::move(vars));
}

BiPoly BiPoly::from_univariate(const LaurentPoly& p, std::string second) {
  BiPoly out(VariablePair{p.variable(), std::move(second)});
  for (const auto& [num, c] : p.terms()) out.terms_.emplace(Key{num, 0}, c);
  return out;
}

BiPoly BiPoly::renamed(VariablePair vars) const {
  BiPoly p = *this;
  p.vars_ = std::move(vars);
  return p;
}

Integer BiPoly::coeff(HalfExp a, HalfExp b) const {
  auto it = terms_.find({a.num, b.num});
  return it == terms_.end() ? Integer(0) : it->second;
}

BiPoly::Key BiPoly::leading_key() const {
  if (terms_.empty()) throw std::domain_error("leading_key of the zero polynomial");
  return terms_.rbegin()->first;
}

const Integer& BiPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading_coeff of the zero polynomial");
  return terms_.rbegin()->second;
}

bool BiPoly::is_ordinary() const {
  for (const auto& [key, c] : terms_) {
    if (key.first < 0 || key.second < 0 || key.first % 2 != 0 || key.second % 2 != 0) return false;
  }
  return true;
}

std::optional<LaurentPoly> BiPoly::as_univariate() const {
  std::vector<LaurentTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) {
    if (key.second != 0) return std::nullopt;
    out.emplace_back(HalfExp{key.first}, c);
  }
  return LaurentPoly::from_terms(out, vars_.a);
}

void BiPoly::add_term(Key key, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out(a.vars_);
  Integer prod;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term({ka.first + kb.first, ka.second + kb.second}, prod);
    }
  }
  return out;
}

BiPoly operator-(BiPoly a) {
  for (auto& [key, c] : a.terms_) c = -c;
  return a;
}

BiPoly pow(const BiPoly& base, unsigned exponent) {
  BiPoly result = BiPoly::constant(1, base.variables());
  BiPoly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

BiPoly scale(const BiPoly& p, const Integer& c) {
  return p * BiPoly::constant(c, p.variables());
}

namespace {

// Groups f by its first exponent, evaluates each group in the second image by
// Horner, then weights by cached powers of the first image.
template <class Target>
Target substitute_impl(const BiPoly& f, const Target& image_a, const Target& image_b) {
  if (!f.is_ordinary()) {
    throw NonIntegralOuter("substitution requires nonnegative integer exponents in both variables");
  }
  const Target one = pow(image_a, 0);
  Target result = scale(one, 0);
  if (f.is_zero()) return result;

  std::map<int, std::map<int, Integer>> by_a;
  for (const auto& [key, c] : f.terms()) by_a[key.first / 2][key.second / 2] = c;

  std::vector<Target> a_powers{one};
  for (const auto& [deg_a, inner] : by_a) {
    Target horner = scale(one, 0);
    for (int k = inner.rbegin()->first; k >= 0; --k) {
      horner *= image_b;
      auto it = inner.find(k);
      if (it != inner.end()) horner += scale(one, it->second);
    }
    while (static_cast<int>(a_powers.size()) <= deg_a) a_powers.push_back(a_powers.back() * image_a);
    result += a_powers[deg_a] * horner;
  }
  return result;
}

}  // namespace

BiPoly bi_substitute(const BiPoly& f, const BiPoly& image_a, const BiPoly& image_b) {
  return substitute_impl(f, image_a, image_b);
}

LaurentPoly bi_to_univariate(const BiPoly& f, const LaurentPoly& image_a, const LaurentPoly& image_b) {
  return substitute_impl(f, image_a, image_b);
}

std::optional<BiPoly> try_bi_sqrt_exact(const BiPoly& f) {
  if (f.is_zero()) throw std::domain_error("square root of the zero polynomial");
  const auto& vars = f.variables();

  std::map<int, LaurentPoly> by_a;
  for (const auto& [key, c] : f.terms()) {
    auto [it, inserted] = by_a.try_emplace(key.first, LaurentPoly(vars.b));
    it->second += LaurentPoly::monomial(c, HalfExp{key.second}, vars.b);
  }
  const int lo = by_a.begin()->first;
  const int hi = by_a.rbegin()->first;
  if (lo % 2 != 0 || hi % 2 != 0) return std::nullopt;

  auto coefficient = [&](int num) {
    auto it = by_a.find(num);
    return it == by_a.end() ? LaurentPoly(vars.b) : it->second;
  };

  const int d = (hi - lo) / 2;
  std::vector<LaurentPoly> root(static_cast<std::size_t>(d) + 1, LaurentPoly(vars.b));
  auto top = try_sqrt_perfect(by_a.rbegin()->second);
  if (!top) return std::nullopt;
  root[d] = *std::move(top);
  const LaurentPoly twice_top = scale(root[d], 2);
  for (int j = d - 1; j >= 0; --j) {
    LaurentPoly acc = coefficient(lo + d + j);
    for (int i = j + 1; i <= d - 1; ++i) acc -= root[i] * root[d + j - i];
    auto q = divide_exact(acc, twice_top);
    if (!q) return std::nullopt;
    root[j] = *std::move(q);
  }

  BiPoly candidate(vars);
  for (int k = 0; k <= d; ++k) {
    for (const auto& [num_b, c] : root[k].terms()) {
      candidate += BiPoly::monomial(c, HalfExp{k + lo / 2}, HalfExp{num_b}, vars);
    }
  }
  if (candidate * candidate != f) return std::nullopt;
  return candidate;
}

std::complex<double> eval_complex(const BiPoly& f, std::complex<double> za, std::complex<double> zb) {
  std::vector<detail::MonomialRef> refs;
  refs.reserve(f.size());
  for (const auto& [key, c] : f.terms()) refs.push_back({&c, {key.first, key.second}});
  const std::complex<double> bases[] = {za, zb};
  return detail::precise_eval(refs, bases);
}

}  // namespace torus
