#include "precise_eval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "torus/errors.hpp"

namespace torus::detail {
namespace {

class Real {
 public:
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real& operator=(const Real& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Complex(mpfr_prec_t prec, std::complex<double> z) : re(prec), im(prec) {
    mpfr_set_d(re.get(), z.real(), MPFR_RNDN);
    mpfr_set_d(im.get(), z.imag(), MPFR_RNDN);
  }

  void set_one() {
    mpfr_set_ui(re.get(), 1, MPFR_RNDN);
    mpfr_set_zero(im.get(), 1);
  }
};

void mul_into(Complex& acc, const Complex& b) {
  const auto prec = acc.re.prec();
  Real ac(prec), bd(prec), ad(prec), bc(prec);
  mpfr_mul(ac.get(), acc.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(bd.get(), acc.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(ad.get(), acc.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(bc.get(), acc.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(acc.re.get(), ac.get(), bd.get(), MPFR_RNDN);
  mpfr_add(acc.im.get(), ad.get(), bc.get(), MPFR_RNDN);
}

Complex inverse(const Complex& z) {
  const auto prec = z.re.prec();
  Real norm(prec), tmp(prec);
  mpfr_sqr(norm.get(), z.re.get(), MPFR_RNDN);
  mpfr_sqr(tmp.get(), z.im.get(), MPFR_RNDN);
  mpfr_add(norm.get(), norm.get(), tmp.get(), MPFR_RNDN);
  Complex out(prec);
  mpfr_div(out.re.get(), z.re.get(), norm.get(), MPFR_RNDN);
  mpfr_div(out.im.get(), z.im.get(), norm.get(), MPFR_RNDN);
  mpfr_neg(out.im.get(), out.im.get(), MPFR_RNDN);
  return out;
}

// Principal branch, matching std::sqrt on the sign of a zero imaginary part.
Complex principal_sqrt(const Complex& z) {
  const auto prec = z.re.prec();
  Complex out(prec);
  if (mpfr_zero_p(z.re.get()) && mpfr_zero_p(z.im.get())) return out;
  Real modulus(prec), big(prec);
  mpfr_hypot(modulus.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  if (mpfr_sgn(z.re.get()) >= 0) {
    mpfr_add(big.get(), modulus.get(), z.re.get(), MPFR_RNDN);
  } else {
    mpfr_sub(big.get(), modulus.get(), z.re.get(), MPFR_RNDN);
  }
  mpfr_div_ui(big.get(), big.get(), 2, MPFR_RNDN);
  mpfr_sqrt(big.get(), big.get(), MPFR_RNDN);
  // small = |im| / (2 big)
  Real small(prec);
  mpfr_abs(small.get(), z.im.get(), MPFR_RNDN);
  mpfr_div(small.get(), small.get(), big.get(), MPFR_RNDN);
  mpfr_div_ui(small.get(), small.get(), 2, MPFR_RNDN);
  const bool negative_im = mpfr_signbit(z.im.get()) != 0;
  if (mpfr_sgn(z.re.get()) >= 0) {
    out.re = big;
    out.im = small;
    if (negative_im) mpfr_neg(out.im.get(), out.im.get(), MPFR_RNDN);
  } else {
    out.re = small;
    out.im = big;
    if (negative_im) mpfr_neg(out.im.get(), out.im.get(), MPFR_RNDN);
  }
  return out;
}

Complex power(const Complex& base, long exponent) {
  Complex result(base.re.prec());
  result.set_one();
  if (exponent == 0) return result;
  Complex b = exponent < 0 ? inverse(base) : base;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  while (true) {
    if (e & 1UL) mul_into(result, b);
    e >>= 1;
    if (e == 0) break;
    Complex sq = b;
    mul_into(sq, b);
    b = sq;
  }
  return result;
}

// Bits needed to keep the largest term representable with 128 guard bits
// below it.
mpfr_prec_t working_precision(std::span<const MonomialRef> terms,
                              std::span<const std::complex<double>> bases) {
  double worst = 0.0;
  for (const auto& t : terms) {
    double lg = static_cast<double>(mpz_sizeinbase(t.coeff->get_mpz_t(), 2));
    for (std::size_t i = 0; i < bases.size(); ++i) {
      lg += 0.5 * t.nums[i] * std::log2(std::abs(bases[i]));
    }
    worst = std::max(worst, lg);
  }
  worst += std::log2(static_cast<double>(terms.size()) + 1.0);
  return static_cast<mpfr_prec_t>(128 + std::ceil(worst));
}

}  // namespace

std::complex<double> precise_eval(std::span<const MonomialRef> terms,
                                  std::span<const std::complex<double>> bases) {
  std::vector<MonomialRef> live;
  live.reserve(terms.size());
  for (const auto& t : terms) {
    bool vanishes = false;
    for (std::size_t i = 0; i < bases.size(); ++i) {
      if (bases[i] != std::complex<double>(0.0, 0.0)) continue;
      if (t.nums[i] < 0) throw ZeroBase("evaluation at zero of a term with negative exponent");
      if (t.nums[i] > 0) vanishes = true;
    }
    if (!vanishes) live.push_back(t);
  }
  if (live.empty()) return {0.0, 0.0};

  const mpfr_prec_t prec = working_precision(live, bases);

  // Per base: work in z itself when all numerators are even, otherwise in
  // its principal square root.
  std::vector<Complex> roots;
  std::vector<bool> halved;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const bool all_even = std::all_of(live.begin(), live.end(),
                                      [i](const MonomialRef& t) { return t.nums[i] % 2 == 0; });
    Complex z(prec, bases[i]);
    roots.push_back(all_even ? z : principal_sqrt(z));
    halved.push_back(all_even);
  }

  Complex sum(prec);
  Real coeff(prec);
  for (const auto& t : live) {
    Complex term(prec);
    term.set_one();
    for (std::size_t i = 0; i < bases.size(); ++i) {
      const long e = halved[i] ? t.nums[i] / 2 : t.nums[i];
      if (e != 0) mul_into(term, power(roots[i], e));
    }
    mpfr_set_z(coeff.get(), t.coeff->get_mpz_t(), MPFR_RNDN);
    mpfr_mul(term.re.get(), term.re.get(), coeff.get(), MPFR_RNDN);
    mpfr_mul(term.im.get(), term.im.get(), coeff.get(), MPFR_RNDN);
    mpfr_add(sum.re.get(), sum.re.get(), term.re.get(), MPFR_RNDN);
    mpfr_add(sum.im.get(), sum.im.get(), term.im.get(), MPFR_RNDN);
  }
  return {mpfr_get_d(sum.re.get(), MPFR_RNDN), mpfr_get_d(sum.im.get(), MPFR_RNDN)};
}

}  // namespace torus::detail
