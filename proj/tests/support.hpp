#pragma once

// Random generators and brute-force oracles shared by the unit tests. The
// oracles work on dense coefficient tables and never call the library's
// arithmetic.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "torus/bipoly.hpp"
#include "torus/laurent.hpp"

namespace torus::testing {

inline constexpr int kPropertyCases = 1000;

class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

  /// Up to `max_terms` terms, exponent numerators in [-lo_hi, lo_hi],
  /// coefficients in [-c, c].
  LaurentPoly laurent(int max_terms = 12, int lo_hi = 20, int c = 9) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> exp(-lo_hi, lo_hi);
    std::uniform_int_distribution<int> coeff(-c, c);
    std::vector<LaurentTerm> terms;
    for (int i = count(rng_); i > 0; --i) terms.emplace_back(HalfExp{exp(rng_)}, coeff(rng_));
    return LaurentPoly::from_terms(terms, "t");
  }

  /// Ordinary polynomial (nonnegative integer exponents) of degree <= max_deg.
  LaurentPoly ordinary(int max_terms = 6, int max_deg = 6, int c = 9) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_deg);
    std::uniform_int_distribution<int> coeff(-c, c);
    std::vector<LaurentTerm> terms;
    for (int i = count(rng_); i > 0; --i) terms.emplace_back(HalfExp::whole(exp(rng_)), coeff(rng_));
    return LaurentPoly::from_terms(terms, "x");
  }

  BiPoly bivariate(int max_terms = 10, int lo_hi = 8, int c = 9, VariablePair vars = {"q", "p"}) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> exp(-lo_hi, lo_hi);
    std::uniform_int_distribution<int> coeff(-c, c);
    std::vector<BiTerm> terms;
    for (int i = count(rng_); i > 0; --i) terms.push_back({HalfExp{exp(rng_)}, HalfExp{exp(rng_)}, coeff(rng_)});
    return BiPoly::from_terms(terms, vars);
  }

  BiPoly bivariate_ordinary(int max_terms = 6, int max_deg = 4, int c = 9, VariablePair vars = {"r", "x"}) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_deg);
    std::uniform_int_distribution<int> coeff(-c, c);
    std::vector<BiTerm> terms;
    for (int i = count(rng_); i > 0; --i) {
      terms.push_back({HalfExp::whole(exp(rng_)), HalfExp::whole(exp(rng_)), coeff(rng_)});
    }
    return BiPoly::from_terms(terms, vars);
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

namespace oracle {

using Dense = std::map<int, long>;                  // numerator -> coefficient
using Dense2 = std::map<std::pair<int, int>, long>;  // (numA, numB) -> coefficient

inline Dense convolve(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Dense2 convolve(const Dense2& a, const Dense2& b) {
  Dense2 out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// (u^a + u^b)^k expanded by the binomial theorem, in numerator units.
inline Dense binomial_power(int a, int b, int k) {
  Dense out;
  for (int j = 0; j <= k; ++j) out[(k - j) * a + j * b] += binomial(k, j);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline LaurentPoly to_poly(const Dense& d, const std::string& var = "t") {
  std::vector<LaurentTerm> terms;
  for (const auto& [num, c] : d) terms.emplace_back(HalfExp{num}, c);
  return LaurentPoly::from_terms(terms, var);
}

inline BiPoly to_poly(const Dense2& d, VariablePair vars) {
  std::vector<BiTerm> terms;
  for (const auto& [key, c] : d) terms.push_back({HalfExp{key.first}, HalfExp{key.second}, c});
  return BiPoly::from_terms(terms, std::move(vars));
}

}  // namespace oracle
}  // namespace torus::testing
