#include "qvitali/cli.hpp"

#include <sstream>

#include <CLI11.hpp>

#include "qvitali/errors.hpp"
#include "qvitali/qexpr.hpp"
#include "qvitali/qmeasure.hpp"
#include "qvitali/verify.hpp"
#include "qvitali/vitali.hpp"

namespace qvitali::cli {

namespace {

CommandOutput usage_error(const std::string& message) {
  return {kExitUsage, "", "error: " + message + "\n"};
}

CommandOutput ok(std::string out) { return {kExitOk, std::move(out), ""}; }

std::string decimal(double v, const RunConfig& c) { return format_decimal(v, c.precision); }

// q rendered as a decimal in tables ("0.75"), exact rational otherwise lost.
std::string q_cell(const Rational& q, const RunConfig& c) { return decimal(q.to_double(), c); }

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 3) throw PreconditionViolation("q grid must be start:stop:step, got '" + text + "'");
  const Rational start = Rational::parse(parts[0]);
  const Rational stop = Rational::parse(parts[1]);
  const Rational step = Rational::parse(parts[2]);
  if (step.sign() <= 0) throw PreconditionViolation("q grid step must be positive");
  if (stop < start) throw PreconditionViolation("q grid stop is below start");
  std::vector<Rational> out;
  for (Rational q = start; q <= stop; q += step) {
    if (out.size() >= 100000) throw PreconditionViolation("q grid has too many points");
    out.push_back(q);
  }
  return out;
}

} // namespace

CommandOutput cmd_eval(const std::string& expr, const RunConfig& config) {
  ExprPtr tree;
  try {
    tree = parse(tokenize(expr));
  } catch (const SyntaxError& e) {
    return {kExitUsage, "", "parse error: " + std::string(e.what()) + " (column " + std::to_string(e.column()) + ")\n"};
  }
  try {
    const QParam q(config.q);
    const bool exact = is_rational_closed(*tree);
    const std::string result = exact ? evaluate_exact(*tree, q).str() : decimal(evaluate_float(*tree, q), config);
    if (config.format == OutputFormat::Plain) return ok(result + "\n");
    Table t{{"expr", "q", "result", "mode"}, {}, {}};
    t.rows.push_back({Table::text(to_string(*tree)), Table::text(config.q.str()),
                      exact ? Table::text(result) : Table::number(result), Table::text(exact ? "exact" : "float")});
    return ok(render(t, config.format));
  } catch (const Error& e) {
    return {kExitUsage, "", "eval error: " + std::string(e.what()) + "\n"};
  }
}

CommandOutput cmd_measure(const std::string& set_text, const RunConfig& config) {
  const QParam q(config.q);
  const IntervalSet s = parse_interval_set(set_text);
  require_valid(s, q);
  const std::string m = format_measure(measure_set(s, q), config.precision);
  if (config.format == OutputFormat::Plain) return ok(m + "\n");
  Table t{{"set", "q", "measure"}, {}, {}};
  t.rows.push_back({Table::text(s.str()), Table::text(config.q.str()), Table::number(m)});
  return ok(render(t, config.format));
}

CommandOutput cmd_translate(const std::string& set_text, const std::string& v_text, const RunConfig& config) {
  const QParam q(config.q);
  const IntervalSet s = parse_interval_set(set_text);
  const Rational v = Rational::parse(v_text);
  const IntervalSet moved = translate_set(s, v, q);
  Table t{{"set", "v", "translated", "measure", "translated_measure"}, {}, {}};
  t.rows.push_back({Table::text(s.str()), Table::text(v.str()), Table::text(moved.str()),
                    Table::number(format_measure(measure_set(s, q), config.precision)),
                    Table::number(format_measure(measure_set(moved, q), config.precision))});
  return ok(render(t, config.format));
}

CommandOutput cmd_scale(const std::string& set_text, const std::string& alpha_text, const RunConfig& config) {
  const QParam q(config.q);
  const IntervalSet s = parse_interval_set(set_text);
  const Rational alpha = Rational::parse(alpha_text);
  const ScaledSet scaled = scale_set(s, alpha, q);
  const MeasureValue lhs = measure_set(scaled.set, q);
  const MeasureValue base = measure_set(s, scaled.q_prime);
  const MeasureValue rhs = base.is_infinite() ? base : MeasureValue::finite(alpha.to_double() * base.value());
  Table t{{"set", "alpha", "scaled", "q_prime", "mu_q(alpha*A)", "alpha*mu_q'(A)"}, {}, {}};
  t.rows.push_back({Table::text(s.str()), Table::text(alpha.str()), Table::text(scaled.set.str()),
                    Table::text(scaled.q_prime.q().str()), Table::number(format_measure(lhs, config.precision)),
                    Table::number(format_measure(rhs, config.precision))});
  return ok(render(t, config.format));
}

CommandOutput cmd_bounds(const std::string& q_grid, const RunConfig& config) {
  const std::vector<Rational> grid = parse_grid(q_grid);
  for (const auto& q : grid) {
    if (q < Rational(1, 2) || q > Rational(1)) {
      return usage_error("q grid value " + q.str() + " lies outside [1/2, 1]");
    }
  }
  Table t{{"q", "lower", "upper", "status"}, {}, {}};
  bool has_half = false;
  for (const auto& qv : grid) {
    const BoundsRow row = theorem_bounds(QParam(qv));
    has_half = has_half || qv == Rational(1, 2);
    t.rows.push_back({Table::number(q_cell(qv, config)), Table::number(decimal(row.lower, config)),
                      Table::number(format_measure(row.upper, config.precision)),
                      Table::text(row.upper.is_infinite() ? "divergent" : "finite")});
  }
  if (has_half) {
    t.notes.push_back("q=1/2: computed lower bound 2ln(3/2) = " + decimal(lower_bound_half_limit(), config) +
                      " differs from the published limit 3ln(4/3) = " + decimal(published_half_limit(), config) +
                      " (which is the lower bound at q=2/3)");
  }
  return ok(render(t, config.format));
}

CommandOutput cmd_enumerate(const RunConfig& config) {
  if (config.cases < 1) return usage_error("cases must be ≥ 1");
  Table t{{"index", "r"}, {}, {}};
  const auto rs = enumerate_rationals(config.cases);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    t.rows.push_back({Table::number(std::to_string(i + 1)), Table::text(rs[i].str())});
  }
  return ok(render(t, config.format));
}

CommandOutput cmd_verify(const std::string& suite_name, const RunConfig& config) {
  if (config.cases < 1) return usage_error("cases must be ≥ 1");
  const auto suite = parse_suite(suite_name);
  if (!suite) return usage_error("unknown suite '" + suite_name + "'");
  const auto results = run_suite(*suite, config.cases, config.seed);
  Table t{{"suite", "property", "cases", "failures", "status", "counterexample"}, {}, {}};
  std::size_t failed = 0;
  for (const auto& r : results) {
    failed += r.passed() ? 0 : 1;
    t.rows.push_back({Table::text(r.suite), Table::text(r.name), Table::number(std::to_string(r.cases)),
                      Table::number(std::to_string(r.failures)), Table::text(r.passed() ? "pass" : "FAIL"),
                      Table::text(r.counterexample)});
  }
  t.notes.push_back("seed=" + std::to_string(config.seed) + " cases=" + std::to_string(config.cases) + ": " +
                    std::to_string(results.size() - failed) + " passed, " + std::to_string(failed) + " failed");
  return {failed == 0 ? kExitOk : kExitPropertyFailure, render(t, config.format), ""};
}

CommandOutput run(const std::vector<std::string>& args) {
  CLI::App app{"q-deformed algebra, nonextensive measure, and generalized Vitali checks", "qvitali"};
  app.require_subcommand(1);

  std::string q_text = "1", format_text = "plain", set_text, v_text, alpha_text, grid_text, expr, suite = "all";
  RunConfig config;

  auto add_q = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--q", q_text, "deformation parameter, exact rational q <= 1 (e.g. 1/2, 0.75)");
    if (required) opt->required();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "output format: plain, csv or json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    sub->add_option("--precision", config.precision, "fractional digits for decimals")->check(CLI::Range(0, 30));
  };

  auto* eval = app.add_subcommand("eval", "evaluate a q-expression (o+ o- o* o/, qexp, qlog, dn)");
  eval->add_option("expr", expr, "expression, e.g. \"1/2 o+ 1/3\"")->required();
  add_q(eval, true);
  add_output(eval);

  auto* measure = app.add_subcommand("measure", "mu_q of a finite union of intervals");
  measure->add_option("--set", set_text, "intervals, e.g. \"[0,1],[3/2,2]\"")->required();
  add_q(measure, true);
  add_output(measure);

  auto* translate = app.add_subcommand("translate", "q-translate a set by v and compare measures");
  translate->add_option("--set", set_text, "intervals")->required();
  translate->add_option("--v", v_text, "translation, exact rational")->required();
  add_q(translate, true);
  add_output(translate);

  auto* scale = app.add_subcommand("scale", "scale a set by alpha and check mu_q(alpha A) = alpha mu_q'(A)");
  scale->add_option("--set", set_text, "intervals")->required();
  scale->add_option("--alpha", alpha_text, "positive exact rational")->required();
  add_q(scale, true);
  add_output(scale);

  auto* bounds = app.add_subcommand("bounds", "lower/upper bounds mu_q([0,1]) and mu_q([-2,3]) over a q grid");
  bounds->add_option("--q-grid", grid_text, "start:stop:step within [1/2, 1], e.g. 1/2:1:1/10")->required();
  add_output(bounds);

  auto* enumerate = app.add_subcommand("enumerate-rationals", "first N rationals of [-1,1] in enumeration order");
  enumerate->add_option("--cases", config.cases, "how many to print");
  add_output(enumerate);

  auto* verify = app.add_subcommand("verify", "run the seeded property suites");
  verify->add_option("--suite", suite, "all, algebra, calculus, measure, vitali or parser");
  verify->add_option("--cases", config.cases, "random cases per property");
  verify->add_option("--seed", config.seed, "generator seed");
  add_output(verify);

  std::vector<std::string> storage{"qvitali"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  std::ostringstream out, err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? kExitOk : kExitUsage, out.str(), err.str()};
  }

  try {
    config.q = Rational::parse(q_text);
    config.format = *parse_format(format_text);
    if (*eval) return cmd_eval(expr, config);
    if (*measure) return cmd_measure(set_text, config);
    if (*translate) return cmd_translate(set_text, v_text, config);
    if (*scale) return cmd_scale(set_text, alpha_text, config);
    if (*bounds) return cmd_bounds(grid_text, config);
    if (*enumerate) return cmd_enumerate(config);
    return cmd_verify(suite, config);
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }
}

} // namespace qvitali::cli
