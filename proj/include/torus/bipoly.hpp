#pragma once

// Sparse bivariate polynomials with half-integer exponents in each variable.
// Variables are positional; names are carried only for display, so (q,p),
// (r,x) and (a,z) objects all share this type.

#include <complex>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "torus/laurent.hpp"

namespace torus {

struct BiTerm {
  HalfExp a;
  HalfExp b;
  Integer coeff;
};

struct VariablePair {
  std::string a = "x";
  std::string b = "y";

  friend bool operator==(const VariablePair&, const VariablePair&) = default;
};

class BiPoly {
 public:
  /// (numerator in a, numerator in b); ordered lexicographically.
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, Integer>;

  BiPoly() = default;
  explicit BiPoly(VariablePair vars) : vars_(std::move(vars)) {}

  static BiPoly from_terms(std::span<const BiTerm> terms, VariablePair vars);
  static BiPoly from_terms(std::initializer_list<BiTerm> terms, VariablePair vars);
  static BiPoly constant(const Integer& c, VariablePair vars);
  static BiPoly monomial(const Integer& c, HalfExp a, HalfExp b, VariablePair vars);
  static BiPoly var_a(VariablePair vars);
  static BiPoly var_b(VariablePair vars);
  /// Places a univariate polynomial in the first slot.
  static BiPoly from_univariate(const LaurentPoly& p, std::string second = "y");

  const VariablePair& variables() const { return vars_; }
  BiPoly renamed(VariablePair vars) const;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coeff(HalfExp a, HalfExp b) const;
  /// Lexicographically highest term (a first, then b); nonzero only.
  Key leading_key() const;
  const Integer& leading_coeff() const;
  /// True when every exponent in both variables is a nonnegative integer.
  bool is_ordinary() const;
  /// The polynomial in the first variable when the second never appears.
  std::optional<LaurentPoly> as_univariate() const;

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const BiPoly& rhs);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(BiPoly a);

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(Key key, const Integer& c);

  VariablePair vars_;
  TermMap terms_;
};

BiPoly pow(const BiPoly& base, unsigned exponent);
BiPoly scale(const BiPoly& p, const Integer& c);

/// Replaces the first variable by `image_a` and the second by `image_b`.
/// The result lives in the variables of `image_a`. Throws NonIntegralOuter
/// unless `f` has only nonnegative integer exponents.
BiPoly bi_substitute(const BiPoly& f, const BiPoly& image_a, const BiPoly& image_b);

/// Same, with univariate images; the result carries the variable of `image_a`.
LaurentPoly bi_to_univariate(const BiPoly& f, const LaurentPoly& image_a, const LaurentPoly& image_b);

/// Exact polynomial square root with positive leading coefficient, if any.
/// Recurses on the first variable, using univariate roots and exact
/// division for the coefficient polynomials in the second.
std::optional<BiPoly> try_bi_sqrt_exact(const BiPoly& f);

std::complex<double> eval_complex(const BiPoly& f, std::complex<double> za, std::complex<double> zb);

}  // namespace torus
