#include "gencx/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gencx/dual.hpp"
#include "gencx/dual_format.hpp"
#include "gencx/expr.hpp"

namespace gencx::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSyntaxHelp = R"(Expression syntax (highest precedence first):
  f(a), (a)        calls and grouping; log(b, x) is the base-b logarithm
  a ^ b            power, right-associative: 2^3^2 = 2^9
  -a               negation, below '^': -x^2 = -(x^2)
  a * b, a / b     left-associative
  a + b, a - b     left-associative
Functions: sin cos tan cot asin acos atan acot sinh cosh tanh coth
           exp log sqrt cbrt abs conj
Constants: pi e
Exit codes: 0 ok, 1 parse error, 2 domain error, 3 usage error,
            4 check tolerance exceeded)";

constexpr std::size_t kMaxTableRows = 10'000'000;

struct UsageError {
  std::string message;
};

struct Options {
  std::string expr;
  double at = 0.0;
  double imag = 0.0;
  double from = 0.0;
  double to = 0.0;
  double step = 0.0;
  double h = 1e-6;
  double tol = 1e-5;
  int digits = default_digits;
  std::string format = "text";
};

/// A parsed expression with at most one free variable.
struct Function1 {
  expr::NodePtr root;
  std::optional<std::string> variable;

  Dual<double> at(Dual<double> x) const {
    expr::DualBindings b;
    if (variable) b.emplace(*variable, x);
    return expr::eval_dual(*root, b);
  }
  double real_at(double x) const {
    expr::RealBindings b;
    if (variable) b.emplace(*variable, x);
    return expr::eval_real(*root, b);
  }
};

Function1 prepare(const std::string& source) {
  Function1 f{expr::parse(source), std::nullopt};
  const auto vars = expr::free_variables(*f.root);
  if (vars.size() > 1) {
    std::string names;
    for (const auto& v : vars) names += (names.empty() ? "" : ", ") + v;
    throw UsageError{"expression must have at most one free variable, found: " + names};
  }
  if (!vars.empty()) f.variable = *vars.begin();
  return f;
}

/// Value rounded to `digits` significant digits, as a JSON number (null for
/// NaN and infinities).
json json_number(double v, int digits) {
  if (!std::isfinite(v)) return nullptr;
  const std::string s = format_scalar(v, digits);
  double rounded = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), rounded);
  return rounded;
}

void require_format(const Options& o, bool allow_csv) {
  if (o.format == "text" || o.format == "json" || (allow_csv && o.format == "csv")) return;
  throw UsageError{"unsupported --format '" + o.format + "' for this command"};
}

int cmd_eval(const Options& o, std::ostream& out) {
  require_format(o, false);
  const Function1 f = prepare(o.expr);
  const Dual<double> r = f.at(Dual<double>(o.at, o.imag));
  if (o.format == "json") {
    json j;
    j["expr"] = o.expr;
    j["at"] = json_number(o.at, o.digits);
    j["imag"] = json_number(o.imag, o.digits);
    j["value"] = json_number(r.real(), o.digits);
    j["epsilon"] = json_number(r.imag(), o.digits);
    out << j.dump() << '\n';
  } else {
    out << format(r, o.digits) << '\n';
  }
  return exit_ok;
}

int cmd_diff(const Options& o, std::ostream& out) {
  require_format(o, false);
  const Function1 f = prepare(o.expr);
  const Dual<double> r = f.at(Dual<double>(o.at, 1.0));
  if (o.format == "json") {
    json j;
    j["expr"] = o.expr;
    j["at"] = json_number(o.at, o.digits);
    j["value"] = json_number(r.real(), o.digits);
    j["derivative"] = json_number(r.imag(), o.digits);
    out << j.dump() << '\n';
  } else {
    out << "value: " << format_scalar(r.real(), o.digits) << '\n'
        << "derivative: " << format_scalar(r.imag(), o.digits) << '\n';
  }
  return exit_ok;
}

struct Row {
  double x;
  double f;
  double df;
};

Row table_row(const Function1& f, double x) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    const Dual<double> r = f.at(Dual<double>(x, 1.0));
    return {x, r.real(), r.imag()};
  } catch (const expr::EvalError& e) {
    if (e.kind() == expr::EvalError::Kind::unbound_variable) throw;
  }
  // The derivative is undefined here; the value may still exist (sqrt at 0).
  try {
    return {x, f.at(Dual<double>(x, 0.0)).real(), nan};
  } catch (const expr::EvalError& e) {
    if (e.kind() == expr::EvalError::Kind::unbound_variable) throw;
  }
  return {x, nan, nan};
}

int cmd_table(const Options& o, std::ostream& out) {
  require_format(o, true);
  if (!(o.step > 0.0) || !std::isfinite(o.step)) throw UsageError{"--step must be positive"};
  if (!(o.from <= o.to) || !std::isfinite(o.from) || !std::isfinite(o.to)) {
    throw UsageError{"--from must not exceed --to"};
  }
  const double span = std::floor((o.to - o.from) / o.step + 1e-9);
  if (span >= static_cast<double>(kMaxTableRows)) throw UsageError{"grid has too many points"};
  const auto count = static_cast<std::size_t>(span) + 1;

  const Function1 f = prepare(o.expr);
  std::vector<Row> rows;
  rows.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    rows.push_back(table_row(f, o.from + static_cast<double>(k) * o.step));
  }

  if (o.format == "json") {
    json arr = json::array();
    for (const Row& r : rows) {
      json j;
      j["expr"] = o.expr;
      j["x"] = json_number(r.x, o.digits);
      j["value"] = json_number(r.f, o.digits);
      j["derivative"] = json_number(r.df, o.digits);
      arr.push_back(std::move(j));
    }
    out << arr.dump() << '\n';
  } else if (o.format == "csv") {
    out << "x,f,df\n";
    for (const Row& r : rows) {
      out << format_scalar(r.x, o.digits) << ',' << format_scalar(r.f, o.digits) << ','
          << format_scalar(r.df, o.digits) << '\n';
    }
  } else {
    const int w = o.digits + 8;
    out << std::setw(w) << "x" << ' ' << std::setw(w) << "f" << ' ' << std::setw(w) << "df" << '\n';
    for (const Row& r : rows) {
      out << std::setw(w) << format_scalar(r.x, o.digits) << ' ' << std::setw(w) << format_scalar(r.f, o.digits)
          << ' ' << std::setw(w) << format_scalar(r.df, o.digits) << '\n';
    }
  }
  return exit_ok;
}

int cmd_check(const Options& o, std::ostream& out) {
  require_format(o, false);
  if (!(o.h > 0.0) || !std::isfinite(o.h)) throw UsageError{"--h must be positive"};
  if (!(o.tol >= 0.0)) throw UsageError{"--tol must be non-negative"};
  const Function1 f = prepare(o.expr);

  const Dual<double> r = f.at(Dual<double>(o.at, 1.0));
  const double fd = (f.real_at(o.at + o.h) - f.real_at(o.at - o.h)) / (2.0 * o.h);
  const double d = r.imag();
  const double abs_diff = std::abs(d - fd);
  const double rel_diff = abs_diff / std::max(1.0, std::abs(d));
  const bool pass = rel_diff <= o.tol;

  if (o.format == "json") {
    json j;
    j["expr"] = o.expr;
    j["at"] = json_number(o.at, o.digits);
    j["value"] = json_number(r.real(), o.digits);
    j["derivative"] = json_number(d, o.digits);
    j["fd_derivative"] = json_number(fd, o.digits);
    j["abs_diff"] = json_number(abs_diff, o.digits);
    j["rel_diff"] = json_number(rel_diff, o.digits);
    j["pass"] = pass;
    out << j.dump() << '\n';
  } else {
    out << "dual derivative: " << format_scalar(d, o.digits) << '\n'
        << "fd derivative: " << format_scalar(fd, o.digits) << '\n'
        << "abs diff: " << format_scalar(abs_diff, o.digits) << '\n'
        << "rel diff: " << format_scalar(rel_diff, o.digits) << '\n'
        << "status: " << (pass ? "ok" : "FAILED") << " (tol " << format_scalar(o.tol, o.digits) << ")\n";
  }
  return pass ? exit_ok : exit_check_failed;
}

void report_parse_error(const expr::ParseError& e, const std::string& source, std::ostream& err) {
  err << "parse error at offset " << e.position() << ": " << e.what() << '\n'
      << "  " << source << '\n'
      << "  " << std::string(e.position(), ' ') << "^\n";
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate expressions over dual numbers and compute exact first derivatives.", "gencx"};
  app.footer(kSyntaxHelp);
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1, 1);

  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--expr", o.expr, "expression in one variable")->required();
    sub->add_option("--digits", o.digits, "significant digits in numeric output")
        ->check(CLI::Range(4, 17))
        ->capture_default_str();
    sub->add_option("--format", o.format, "output format")->capture_default_str();
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate at the dual point at + imag·ε");
  common(eval);
  eval->add_option("--at", o.at, "real part of the argument")->required();
  eval->add_option("--imag", o.imag, "ε part of the argument")->capture_default_str();

  CLI::App* diff = app.add_subcommand("diff", "value and exact first derivative at a point");
  common(diff);
  diff->add_option("--at", o.at, "evaluation point")->required();

  CLI::App* table = app.add_subcommand("table", "tabulate value and derivative over a grid");
  common(table);
  table->add_option("--from", o.from, "first grid point")->required();
  table->add_option("--to", o.to, "last grid point (inclusive)")->required();
  table->add_option("--step", o.step, "grid spacing")->required();

  CLI::App* check = app.add_subcommand("check", "compare the dual derivative with central finite differences");
  common(check);
  check->add_option("--at", o.at, "evaluation point")->required();
  check->add_option("--h", o.h, "finite-difference step")->capture_default_str();
  check->add_option("--tol", o.tol, "relative tolerance")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return exit_usage_error;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*diff) return cmd_diff(o, out);
    if (*table) return cmd_table(o, out);
    return cmd_check(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << '\n';
    return exit_usage_error;
  } catch (const expr::ParseError& e) {
    report_parse_error(e, o.expr, err);
    return exit_parse_error;
  } catch (const expr::EvalError& e) {
    if (e.kind() == expr::EvalError::Kind::unbound_variable) {
      err << "usage error: " << e.what() << '\n';
      return exit_usage_error;
    }
    err << "domain error at offset " << e.position() << ": " << e.what() << '\n';
    return exit_domain_error;
  }
}

}  // namespace gencx::cli
