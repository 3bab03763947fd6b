#include "torus/radical.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace torus {
namespace {

// Largest s with s^2 | n, found by trial division; a cofactor whose prime
// factors all exceed the trial bound is only recognised when it is itself a
// square.
Integer square_part(Integer n) {
  constexpr unsigned long kTrialBound = 10000;
  Integer s = 1;
  for (unsigned long p = 2; p <= kTrialBound; ++p) {
    if (Integer(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p * p)) {
      n /= p * p;
      s *= p;
    }
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
  }
  if (n > 1 && mpz_perfect_square_p(n.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    s *= r;
  }
  return s;
}

int floor_half(int n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }

struct Split {
  BiPoly factor;                   // pulled out from under the root
  std::optional<BiPoly> residual;  // left under it
};

Split split_square(const BiPoly& f) {
  const auto& vars = f.variables();
  if (f.is_zero()) return {BiPoly(vars), std::nullopt};

  int min_a = f.terms().begin()->first.first;
  int min_b = f.terms().begin()->first.second;
  Integer content = 0;
  for (const auto& [key, c] : f.terms()) {
    min_a = std::min(min_a, key.first);
    min_b = std::min(min_b, key.second);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  }
  const HalfExp root_a{floor_half(min_a)};
  const HalfExp root_b{floor_half(min_b)};
  const Integer s = square_part(content);

  BiPoly rest(vars);
  const Integer s2 = s * s;
  for (const auto& [key, c] : f.terms()) {
    rest += BiPoly::monomial(c / s2, HalfExp{key.first - 2 * root_a.num}, HalfExp{key.second - 2 * root_b.num},
                             vars);
  }
  BiPoly factor = BiPoly::monomial(s, root_a, root_b, vars);
  if (auto r = try_bi_sqrt_exact(rest)) return {factor * *r, std::nullopt};
  return {std::move(factor), std::move(rest)};
}

}  // namespace

RadicalExpr::RadicalExpr(BiPoly prefactor, std::vector<BiPoly> radicands) : prefactor_(std::move(prefactor)) {
  std::vector<BiPoly> pending;
  for (const auto& r : radicands) {
    auto [factor, residual] = split_square(r);
    prefactor_ *= factor;
    if (residual) pending.push_back(*std::move(residual));
  }
  if (prefactor_.is_zero()) return;
  // sqrt(R) * sqrt(R) = R
  for (auto& r : pending) {
    auto twin = std::find(radicands_.begin(), radicands_.end(), r);
    if (twin != radicands_.end()) {
      prefactor_ *= r;
      radicands_.erase(twin);
    } else {
      radicands_.push_back(std::move(r));
    }
  }
}

BiPoly RadicalExpr::squared() const {
  BiPoly out = prefactor_ * prefactor_;
  for (const auto& r : radicands_) out *= r;
  return out;
}

std::complex<double> RadicalExpr::eval(std::complex<double> za, std::complex<double> zb) const {
  std::complex<double> value = eval_complex(prefactor_, za, zb);
  for (const auto& r : radicands_) value *= std::sqrt(eval_complex(r, za, zb));
  return value;
}

RadicalExpr bi_sqrt_perfect(const BiPoly& f) {
  if (f.is_zero()) throw std::domain_error("bi_sqrt_perfect of the zero polynomial");
  return RadicalExpr(BiPoly::constant(1, f.variables()), {f});
}

}  // namespace torus
