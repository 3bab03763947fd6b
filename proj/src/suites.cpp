#include "torus/suites.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "torus/chebyshev.hpp"
#include "torus/invariants.hpp"
#include "torus/qseries.hpp"
#include "torus/skein.hpp"

namespace torus {
namespace {

using Check = std::function<bool(std::size_t)>;

SuiteResult run_checks(std::string name, std::size_t max_n, const Check& check) {
  SuiteResult result;
  result.name = std::move(name);
  for (std::size_t n = 1; n <= max_n; ++n) {
    ++result.checked;
    if (check(n)) {
      ++result.passed;
    } else {
      result.failures.push_back("n = " + std::to_string(n));
    }
  }
  return result;
}

LaurentPoly q_plus_inverse(const std::string& var) {
  return LaurentPoly::from_terms({{HalfExp::whole(1), 1}, {HalfExp::whole(-1), 1}}, var);
}

LaurentPoly inverse_of(const std::string& var) { return LaurentPoly::monomial(1, HalfExp::whole(-1), var); }

SuiteResult unified_skein(std::size_t max_n) {
  const auto seq = alexander_unified_rec(static_cast<int>(max_n) + 2);
  std::vector<BiPoly> lifted;
  for (const auto& p : seq) lifted.push_back(BiPoly::from_univariate(p));
  const auto rec = classical_recurrence();
  const auto skein = derive_skein(rec.c1, rec.c2);
  const auto report = verify_skein(lifted, skein.b1, skein.b2);
  return run_checks("unified-skein", max_n, [&](std::size_t n) { return report.triples[n - 1].holds; });
}

SuiteResult knot_recurrence(std::size_t max_n) {
  const auto rec = alexander_knot_rec(static_cast<int>(max_n));
  return run_checks("knot-recurrence", max_n, [&](std::size_t m) {
    const auto closed = alexander_closed(TorusIndex::knot(static_cast<int>(m)));
    return rec[m] == closed && alexander_from_qnum(m) == closed;
  });
}

SuiteResult qnum_oracle(std::size_t max_n) {
  const auto q = qnum_rec_table(max_n);
  const auto qp = qpnum_rec_table(max_n);
  return run_checks("qnum-oracle", max_n, [&](std::size_t n) {
    return q[n] == qnum_closed(n) && qp[n] == qpnum_closed(n);
  });
}

SuiteResult chebyshev_identity(std::size_t max_n) {
  const auto x = q_plus_inverse("q");
  const auto first = cheb_first_table(max_n);
  const auto second = cheb_second_table(max_n);
  return run_checks("chebyshev-identity", max_n, [&](std::size_t n) {
    const auto below = n >= 2 ? second[n - 2] : LaurentPoly("x");
    return first[n] == second[n] - below && compose(second[n], x) == qnum_closed(n + 1);
  });
}

SuiteResult alexander_chebyshev(std::size_t max_n) {
  const auto x = q_plus_inverse("t");
  const auto second = cheb_second_table(max_n);
  return run_checks("alexander-chebyshev", max_n, [&](std::size_t n) {
    const auto difference = second[n] - second[n - 1];
    return compose(difference, x) == alexander_closed(TorusIndex::knot(static_cast<int>(n)));
  });
}

SuiteResult qp_specialization(std::size_t max_n) {
  const auto t = LaurentPoly::indeterminate("t");
  const auto t_inv = inverse_of("t");
  const auto rec = alexander_qp_rec(max_n);
  const auto rx_rec = alexander_rx_rec(max_n);
  const auto second = cheb_second_table(max_n);
  const auto x = q_plus_inverse("t");
  return run_checks("qp-specialization", max_n, [&](std::size_t n) {
    const bool alexander = bi_to_univariate(alexander_qp(n), t, t_inv) == alexander_from_qnum(n);
    const bool chebyshev = bi_to_univariate(cheb_second_qp(n), t, t_inv) == compose(second[n], x);
    const bool numbers = bi_to_univariate(qpnum_closed(n), t, t_inv) == qnum_closed(n);
    return alexander && chebyshev && numbers && rec[n] == alexander_qp(n) && rx_rec[n] == alexander_rx(n);
  });
}

SuiteResult homfly_bridge(std::size_t max_n) {
  const auto rec = homfly_rec(max_n);
  return run_checks("homfly-bridge", max_n, [&](std::size_t n) { return homfly_from_alexander(n) == rec[n]; });
}

SuiteResult trig(std::size_t max_n) {
  constexpr double kThetas[] = {0.3, 0.7, 1.1, 2.0};
  constexpr double kRadii[] = {0.5, 1.0, 2.0};
  const auto firsts = cheb_first_table(max_n);
  const auto seconds = cheb_second_table(max_n);
  return run_checks("trig", max_n, [&](std::size_t n) {
    const double nd = static_cast<double>(n);
    const auto qnum = qnum_closed(n);
    const auto qpnum = qpnum_closed(n);
    const auto& first = firsts[n];
    const auto& second = seconds[n];
    for (double theta : kThetas) {
      const double x = 2.0 * std::cos(theta);
      const double ratio = std::sin(nd * theta) / std::sin(theta);
      if (std::abs(eval_complex(qnum, std::polar(1.0, theta)) - ratio) > kTrigTolerance) return false;
      if (std::abs(eval_complex(first, x) - 2.0 * std::cos(nd * theta)) > kTrigTolerance) return false;
      const double second_expected = std::sin((nd + 1.0) * theta) / std::sin(theta);
      if (std::abs(eval_complex(second, x) - second_expected) > kTrigTolerance) return false;
      for (double r : kRadii) {
        const double expected = std::pow(r, nd - 1.0) * ratio;
        const auto got = eval_complex(qpnum, std::polar(r, theta), std::polar(r, -theta));
        if (std::abs(got - expected) > kTrigTolerance * std::max(1.0, std::pow(r, nd - 1.0))) return false;
      }
    }
    return true;
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"unified-skein",       "knot-recurrence",   "qnum-oracle",
                                              "chebyshev-identity",  "alexander-chebyshev", "qp-specialization",
                                              "homfly-bridge",       "trig"};
  return names;
}

SuiteResult run_suite(std::string_view name, std::size_t max_n) {
  if (max_n < 1) throw std::invalid_argument("max-n must be at least 1");
  if (name == "unified-skein") return unified_skein(max_n);
  if (name == "knot-recurrence") return knot_recurrence(max_n);
  if (name == "qnum-oracle") return qnum_oracle(max_n);
  if (name == "chebyshev-identity") return chebyshev_identity(max_n);
  if (name == "alexander-chebyshev") return alexander_chebyshev(max_n);
  if (name == "qp-specialization") return qp_specialization(max_n);
  if (name == "homfly-bridge") return homfly_bridge(max_n);
  if (name == "trig") return trig(max_n);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace torus
