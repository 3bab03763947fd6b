#include "torus/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "json_io.hpp"
#include "torus/chebyshev.hpp"
#include "torus/errors.hpp"
#include "torus/invariants.hpp"
#include "torus/qseries.hpp"
#include "torus/render.hpp"
#include "torus/skein.hpp"
#include "torus/suites.hpp"
#include "torus/tables.hpp"

namespace torus::cli {
namespace {

using detail::Json;

const std::map<std::string, std::string>& usages() {
  static const std::map<std::string, std::string> u{
      {"alexander", "usage: torusknot alexander --s <int>"},
      {"homfly", "usage: torusknot homfly --m <int>"},
      {"qnum", "usage: torusknot qnum --n <int>"},
      {"qpnum", "usage: torusknot qpnum --n <int>"},
      {"chebyshev", "usage: torusknot chebyshev --kind first|second --n <int>"},
      {"skein-derive", "usage: torusknot skein-derive --family classical|rx|az"},
      {"verify", "usage: torusknot verify <suite> --max-n <int>"},
      {"table", "usage: torusknot table <family> --max <int>"},
  };
  return u;
}

constexpr const char* kGeneralUsage =
    "usage: torusknot [--format text|json] "
    "<alexander|homfly|qnum|qpnum|chebyshev|skein-derive|verify|table> [options]";

struct Emitter {
  std::ostream& out;
  bool json;

  void emit(const LaurentPoly& p) const { out << render(p, json ? Style::json : Style::text) << '\n'; }
  void emit(const BiPoly& p, TermOrder order = TermOrder::first_ascending) const {
    out << render(p, json ? Style::json : Style::text, order) << '\n';
  }
};

RecurrenceCoeffs family_recurrence(const std::string& family) {
  if (family == "classical") return classical_recurrence();
  if (family == "rx") return rx_recurrence();
  return homfly_recurrence();
}

void emit_skein(std::ostream& out, bool json, const std::string& family) {
  const auto rec = family_recurrence(family);
  const auto skein = derive_skein(rec.c1, rec.c2);
  if (json) {
    Json j{{"family", family},
           {"c1", detail::to_json(rec.c1)},
           {"c2", detail::to_json(rec.c2)},
           {"b1", detail::to_json(skein.b1)},
           {"b2", detail::to_json(skein.b2)}};
    out << j.dump() << '\n';
    return;
  }
  constexpr auto kText = Style::text;
  constexpr auto kOrder = TermOrder::descending;
  out << "c1 = " << render(rec.c1, kText, kOrder) << '\n'
      << "c2 = " << render(rec.c2, kText, kOrder) << '\n'
      << "b1 = " << render(skein.b1, kText, kOrder) << '\n'
      << "b2 = " << render(skein.b2, kText, kOrder) << '\n';
}

int emit_suite(std::ostream& out, bool json, const std::string& suite, int max_n) {
  const auto result = run_suite(suite, static_cast<std::size_t>(max_n));
  if (json) {
    out << Json{{"suite", result.name},
                {"checked", result.checked},
                {"passed", result.passed},
                {"failures", result.failures}}
               .dump()
        << '\n';
  } else {
    out << result.passed << '/' << result.checked << " identities hold\n";
    for (const auto& f : result.failures) out << "failed: " << f << '\n';
  }
  return result.ok() ? 0 : 1;
}

void emit_table(std::ostream& out, bool json, const std::string& family, int max) {
  const auto rows = make_table(family, max);
  if (!json) {
    for (const auto& row : rows) out << row.text() << '\n';
    return;
  }
  Json list = Json::array();
  for (const auto& row : rows) {
    Json poly = std::visit([](const auto& p) { return detail::to_json(p); }, row.value);
    list.push_back(Json{{"label", row.label}, {"polynomial", std::move(poly)}});
  }
  out << Json{{"family", family}, {"rows", std::move(list)}}.dump() << '\n';
}

std::string usage_for(const CLI::App& app) {
  for (const auto* sub : app.get_subcommands()) {
    auto it = usages().find(sub->get_name());
    if (it != usages().end()) return it->second;
  }
  return kGeneralUsage;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial invariants of (s,2) torus knots and links", "torusknot"};
  app.fallthrough();
  app.require_subcommand(1, 1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  int s = 0, m = 0, n = 0, max_n = 50, table_max = 3;
  std::string kind, family, suite, table_family;

  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial of T(s,2) / L(s,2)");
  alexander->add_option("--s", s, "Crossing number")->required()->check(CLI::Range(1, std::numeric_limits<int>::max()));

  auto* homfly = app.add_subcommand("homfly", "HOMFLY polynomial of T(2m+1,2)");
  homfly->add_option("--m", m, "Knot degree")->required()->check(CLI::Range(0, std::numeric_limits<int>::max()));

  auto* qnum = app.add_subcommand("qnum", "q-number [n]_q");
  qnum->add_option("--n", n)->required()->check(CLI::Range(0, std::numeric_limits<int>::max()));

  auto* qpnum = app.add_subcommand("qpnum", "q,p-number [n]_{q,p}");
  qpnum->add_option("--n", n)->required()->check(CLI::Range(0, std::numeric_limits<int>::max()));

  auto* chebyshev = app.add_subcommand("chebyshev", "Chebyshev polynomial T_n or V_n");
  chebyshev->add_option("--kind", kind)->required()->check(CLI::IsMember({"first", "second"}));
  chebyshev->add_option("--n", n)->required()->check(CLI::Range(0, std::numeric_limits<int>::max()));

  auto* skein = app.add_subcommand("skein-derive", "Skein coefficients from recurrence coefficients");
  skein->add_option("--family", family)->required()->check(CLI::IsMember({"classical", "rx", "az"}));

  auto* verify = app.add_subcommand("verify", "Run an identity suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", max_n)->check(CLI::Range(1, std::numeric_limits<int>::max()));

  auto* table = app.add_subcommand("table", "Print a table of polynomials");
  table->add_option("family", table_family)->required()->check(CLI::IsMember(table_families()));
  table->add_option("--max", table_max)->check(CLI::Range(0, std::numeric_limits<int>::max()));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << usage_for(app) << '\n';
    return 2;
  }

  const bool json = format == "json";
  const Emitter emit{out, json};
  try {
    if (alexander->parsed()) {
      emit.emit(alexander_closed(TorusIndex(s)));
    } else if (homfly->parsed()) {
      emit.emit(homfly_rec(static_cast<std::size_t>(std::max(m, 1)))[m]);
    } else if (qnum->parsed()) {
      emit.emit(qnum_closed(n));
    } else if (qpnum->parsed()) {
      emit.emit(qpnum_closed(n), TermOrder::first_descending);
    } else if (chebyshev->parsed()) {
      emit.emit(kind == "first" ? cheb_first(n) : cheb_second(n));
    } else if (skein->parsed()) {
      emit_skein(out, json, family);
    } else if (verify->parsed()) {
      return emit_suite(out, json, suite, max_n);
    } else if (table->parsed()) {
      emit_table(out, json, table_family, table_max);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n' << usage_for(app) << '\n';
    return 2;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace torus::cli
