#pragma once

// Sparse univariate Laurent polynomials over the integers whose exponents
// live on the half-integer lattice (t^(1/2) steps).

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

namespace torus {

using Integer = mpz_class;

/// An exponent stored as its numerator over the fixed denominator 2.
struct HalfExp {
  int num = 0;

  static constexpr HalfExp whole(int k) { return HalfExp{2 * k}; }
  static constexpr HalfExp half(int n) { return HalfExp{n}; }

  constexpr bool is_integer() const { return num % 2 == 0; }
  constexpr double value() const { return num / 2.0; }

  friend constexpr HalfExp operator+(HalfExp a, HalfExp b) { return {a.num + b.num}; }
  friend constexpr HalfExp operator-(HalfExp a) { return {-a.num}; }
  friend constexpr bool operator==(HalfExp, HalfExp) = default;
  friend constexpr auto operator<=>(HalfExp, HalfExp) = default;
};

using LaurentTerm = std::pair<HalfExp, Integer>;

class LaurentPoly {
 public:
  /// Numerator of the exponent -> nonzero coefficient, ascending.
  using TermMap = std::map<int, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::string variable) : variable_(std::move(variable)) {}

  /// Duplicate exponents are summed and zero coefficients dropped.
  static LaurentPoly from_terms(std::span<const LaurentTerm> terms, std::string variable = "t");
  static LaurentPoly from_terms(std::initializer_list<LaurentTerm> terms, std::string variable = "t");
  static LaurentPoly constant(const Integer& c, std::string variable = "t");
  static LaurentPoly monomial(const Integer& c, HalfExp e, std::string variable = "t");
  /// The polynomial consisting of the bare variable.
  static LaurentPoly indeterminate(std::string variable = "t");

  const std::string& variable() const { return variable_; }
  LaurentPoly renamed(std::string variable) const;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // The following require a nonzero polynomial.
  HalfExp max_exp() const;
  HalfExp min_exp() const;
  const Integer& leading_coeff() const;

  Integer coeff(HalfExp e) const;
  /// True when every exponent is a nonnegative integer.
  bool is_ordinary() const;
  /// Substitutes t -> t^-1.
  LaurentPoly reflected() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);

  /// Term-set equality; the variable name is display metadata only.
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(int num, const Integer& c);

  std::string variable_ = "t";
  TermMap terms_;
};

LaurentPoly pow(const LaurentPoly& base, unsigned exponent);

/// Multiplies every coefficient by `c`.
LaurentPoly scale(const LaurentPoly& p, const Integer& c);

/// Shifts every exponent by `e` (multiplication by a unit monomial).
LaurentPoly shift(const LaurentPoly& p, HalfExp e);

/// outer(inner). Throws NonIntegralOuter unless `outer` is an ordinary
/// polynomial. The result carries the variable of `inner`.
LaurentPoly compose(const LaurentPoly& outer, const LaurentPoly& inner);

/// Exact quotient a / b, or nullopt when b does not divide a.
/// Throws std::domain_error when b is zero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// The square root with positive leading coefficient, or nullopt.
std::optional<LaurentPoly> try_sqrt_perfect(const LaurentPoly& p);

/// As try_sqrt_perfect, throwing NotAPerfectSquare on failure.
LaurentPoly sqrt_perfect(const LaurentPoly& p);

/// Sum of coeff * z^exp. Half exponents use the principal square root of z.
/// Evaluation is carried out at a working precision wide enough that the
/// returned value is correctly rounded up to a few ulps even when the
/// monomial expansion cancels heavily. Throws ZeroBase for z = 0 with
/// negative exponents present.
std::complex<double> eval_complex(const LaurentPoly& p, std::complex<double> z);

}  // namespace torus
