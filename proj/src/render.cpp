#include "torus/render.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

#include "json_io.hpp"
#include "torus/errors.hpp"

namespace torus {
namespace {

// "t", "t^2", "t^(-1)", "t^(1/2)", "t^(-3/2)"; empty for exponent 0.
std::string power_text(const std::string& var, int num) {
  if (num == 0) return {};
  if (num == 2) return var;
  if (num % 2 == 0) {
    const int k = num / 2;
    return k > 0 ? var + "^" + std::to_string(k) : var + "^(" + std::to_string(k) + ")";
  }
  return var + "^(" + std::to_string(num) + "/2)";
}

std::string monomial_text(const Integer& abs_coeff, const std::string& factors) {
  if (factors.empty()) return abs_coeff.get_str();
  if (abs_coeff == 1) return factors;
  return abs_coeff.get_str() + factors;
}

std::string join_signed(const std::vector<std::pair<int, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [sign, body] = terms[i];
    if (i == 0) {
      out += sign < 0 ? "-" + body : body;
    } else {
      out += sign < 0 ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::string bivariate_factors(const VariablePair& vars, int num_a, int num_b) {
  std::string a = power_text(vars.a, num_a);
  std::string b = power_text(vars.b, num_b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  // "qp" but "a^2 z^2"
  return a.find('^') != std::string::npos ? a + " " + b : a + b;
}

std::string laurent_text(const LaurentPoly& p) {
  std::vector<std::pair<int, std::string>> terms;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [num, c] = *it;
    terms.emplace_back(sgn(c), monomial_text(abs(c), power_text(p.variable(), num)));
  }
  return join_signed(terms);
}

std::string bipoly_text(const BiPoly& p, TermOrder order) {
  std::vector<std::pair<BiPoly::Key, const Integer*>> sorted;
  for (const auto& [key, c] : p.terms()) sorted.emplace_back(key, &c);
  switch (order) {
    case TermOrder::first_ascending:
      break;
    case TermOrder::descending:
      std::reverse(sorted.begin(), sorted.end());
      break;
    case TermOrder::first_descending:
      std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        return std::tie(y.first.first, x.first.second) < std::tie(x.first.first, y.first.second);
      });
      break;
    case TermOrder::second_descending:
      std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        return std::tie(x.first.first, y.first.second) < std::tie(y.first.first, x.first.second);
      });
      break;
  }
  std::vector<std::pair<int, std::string>> terms;
  for (const auto& [key, c] : sorted) {
    terms.emplace_back(sgn(*c), monomial_text(abs(*c), bivariate_factors(p.variables(), key.first, key.second)));
  }
  return join_signed(terms);
}

std::string radical_text(const RadicalExpr& e, TermOrder order) {
  if (e.is_polynomial()) return bipoly_text(e.prefactor(), order);
  std::string out;
  const BiPoly& pre = e.prefactor();
  const BiPoly one = BiPoly::constant(1, pre.variables());
  if (pre == -one) {
    out = "-";
  } else if (pre != one) {
    const std::string body = bipoly_text(pre, order);
    out = pre.size() == 1 ? body + " " : "(" + body + ") ";
  }
  for (std::size_t i = 0; i < e.radicands().size(); ++i) {
    if (i != 0) out += " ";
    out += "sqrt(" + bipoly_text(e.radicands()[i], order) + ")";
  }
  return out;
}

Integer parse_coeff(const detail::Json& j) {
  if (!j.is_string()) throw ParseError("coefficient must be a decimal string");
  Integer c;
  const auto s = j.get<std::string>();
  if (s.empty() || c.set_str(s, 10) != 0) throw ParseError("bad coefficient '" + s + "'");
  return c;
}

int parse_num(const detail::Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string("term field '") + key + "' must be an integer");
  }
  return j.at(key).get<int>();
}

void check_den(const detail::Json& j) {
  if (!j.is_object()) throw ParseError("polynomial must be a JSON object");
  if (!j.contains("den") || !j.at("den").is_number_integer() || j.at("den").get<int>() != 2) {
    throw ParseError("den must be 2");
  }
  if (!j.contains("terms") || !j.at("terms").is_array()) throw ParseError("terms must be an array");
}

detail::Json parse_text(std::string_view text) {
  try {
    return detail::Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

namespace detail {

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back(Json{{"num", it->first}, {"coeff", it->second.get_str()}});
  }
  return Json{{"variable", p.variable()}, {"den", 2}, {"terms", std::move(terms)}};
}

Json to_json(const BiPoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back(Json{{"numA", it->first.first}, {"numB", it->first.second}, {"coeff", it->second.get_str()}});
  }
  return Json{{"variables", Json::array({p.variables().a, p.variables().b})}, {"den", 2}, {"terms", std::move(terms)}};
}

Json to_json(const RadicalExpr& e) {
  Json radicands = Json::array();
  for (const auto& r : e.radicands()) radicands.push_back(to_json(r));
  return Json{{"prefactor", to_json(e.prefactor())}, {"radicands", std::move(radicands)}};
}

LaurentPoly laurent_from_json(const Json& j) {
  check_den(j);
  if (!j.contains("variable") || !j.at("variable").is_string()) throw ParseError("variable must be a string");
  std::vector<LaurentTerm> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object()) throw ParseError("term must be an object");
    terms.emplace_back(HalfExp{parse_num(t, "num")}, parse_coeff(t.contains("coeff") ? t.at("coeff") : Json()));
  }
  return LaurentPoly::from_terms(terms, j.at("variable").get<std::string>());
}

BiPoly bipoly_from_json(const Json& j) {
  check_den(j);
  const auto& v = j.contains("variables") ? j.at("variables") : Json();
  if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string()) {
    throw ParseError("variables must be an array of two strings");
  }
  std::vector<BiTerm> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object()) throw ParseError("term must be an object");
    terms.push_back({HalfExp{parse_num(t, "numA")}, HalfExp{parse_num(t, "numB")},
                     parse_coeff(t.contains("coeff") ? t.at("coeff") : Json())});
  }
  return BiPoly::from_terms(terms, VariablePair{v[0].get<std::string>(), v[1].get<std::string>()});
}

}  // namespace detail

std::string render(const LaurentPoly& p, Style style) {
  return style == Style::text ? laurent_text(p) : detail::to_json(p).dump();
}

std::string render(const BiPoly& p, Style style, TermOrder order) {
  return style == Style::text ? bipoly_text(p, order) : detail::to_json(p).dump();
}

std::string render(const RadicalExpr& e, Style style, TermOrder order) {
  return style == Style::text ? radical_text(e, order) : detail::to_json(e).dump();
}

LaurentPoly laurent_from_json(std::string_view json) { return detail::laurent_from_json(parse_text(json)); }

BiPoly bipoly_from_json(std::string_view json) { return detail::bipoly_from_json(parse_text(json)); }

}  // namespace torus
