#include "qroots/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qroots/errors.hpp"
#include "qroots/oracle.hpp"
#include "qroots/parse.hpp"
#include "qroots/solvers.hpp"
#include "qroots/two_sided.hpp"

namespace qroots::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string expression;
  std::string at;
  double tol = kDefaultTol;
  bool as_json = false;
  bool oracle = false;
  std::uint64_t seed = 0;
  int max_degree = 8;
};

// Display form: components at rounding level are shown as 0, and -0 as 0.
Quaternion shown(const Quaternion& q) {
  const double floor = 1e-14 * (1.0 + abs(q));
  auto clean = [&](double c) { return std::fabs(c) <= floor ? 0.0 : c + 0.0; };
  return {clean(q.re), clean(q.i), clean(q.j), clean(q.k)};
}

json quat_json(const Quaternion& q) {
  const Quaternion s = shown(q);
  return json::array({s.re, s.i, s.j, s.k});
}

json roots_json(const RootSet& roots, const StdPoly& f) {
  json out = json::object();
  out["roots"] = json::array();
  for (const auto& z : roots.isolated) {
    out["roots"].push_back({{"q", quat_json(z)}, {"residual", verify_root(f, z)}});
  }
  out["spheres"] = json::array();
  for (const auto& s : roots.spheres) {
    out["spheres"].push_back({{"re", s.real_part}, {"imag_norm", s.imag_norm}});
  }
  return out;
}

class Reporter {
public:
  Reporter(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

  void roots(const RootSet& roots, const StdPoly& f) {
    doc_.update(roots_json(roots, f));
    for (const auto& z : roots.isolated) {
      text_ << "root " << shown(z) << "  residual " << verify_root(f, z) << '\n';
    }
    for (const auto& s : roots.spheres) {
      text_ << "sphere re=" << s.real_part << " imag_norm=" << s.imag_norm << '\n';
    }
    if (roots.empty()) text_ << "no roots\n";
    for (const auto& note : roots.diagnostics) text_ << "note: " << note << '\n';
  }

  json& doc() { return doc_; }
  std::ostream& text() { return text_; }

  int finish(const std::string& status, int code) {
    if (opts_.as_json) {
      json out = json::object();
      for (const auto& [key, value] : doc_.items()) out[key] = value;
      out["status"] = status;
      out_ << out.dump() << '\n';
    } else {
      out_ << text_.str();
      if (status != "ok") out_ << "status: " << status << '\n';
    }
    return code;
  }

private:
  const Options& opts_;
  std::ostream& out_;
  json doc_ = json::object();
  std::ostringstream text_;
};

// Advisory cross-check: oracle roots the solver does not explain, and solver
// roots the sampler did not hit.
void oracle_check(const StdPoly& f, const RootSet& roots, const Options& opts, Reporter& rep) {
  OracleConfig cfg;
  cfg.seed = opts.seed;
  json report = json::object();
  report["missing"] = json::array();
  report["unconfirmed"] = json::array();
  try {
    const RootSet found = numeric_roots(f, cfg);
    for (const auto& z : found.isolated) {
      if (!roots.covers(z, 1e-6)) {
        report["missing"].push_back(quat_json(z));
        rep.text() << "oracle: unexplained root " << shown(z) << '\n';
      }
    }
    for (const auto& s : found.spheres) {
      if (!roots.covers(s.sample(Quaternion::unit_i()), 1e-6)) {
        report["missing"].push_back({{"re", s.real_part}, {"imag_norm", s.imag_norm}});
        rep.text() << "oracle: unexplained sphere re=" << s.real_part
                   << " imag_norm=" << s.imag_norm << '\n';
      }
    }
    for (const auto& z : roots.isolated) {
      if (!found.covers(z, 1e-6)) report["unconfirmed"].push_back(quat_json(z));
    }
  } catch (const NoConvergenceError&) {
    report["error"] = "no_convergence";
    rep.text() << "oracle: no start converged\n";
  }
  if (report["missing"].empty()) rep.text() << "oracle: agrees\n";
  rep.doc()["oracle"] = report;
}

std::string read_expression(const Options& opts, std::istream& in) {
  if (!opts.expression.empty() && opts.expression != "-") return opts.expression;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return text;
}

// Pure imaginary roots for any degree; a zero constant term contributes 0.
RootSet pure_imag_any(const StdPoly& f, double tol) {
  StdPoly g = f.monic();
  bool has_zero = false;
  while (g.degree() >= 1 && max_abs(g[0]) <= tol * g.max_coeff()) {
    g = StdPoly(std::vector<Quaternion>(g.coeffs().begin() + 1, g.coeffs().end()));
    has_zero = true;
  }
  RootSet roots = g.degree() >= 1 ? pure_imaginary_roots(g, tol) : RootSet{};
  if (has_zero) roots.isolated.push_back(Quaternion{0.0});
  canonicalize(roots);
  return roots;
}

int cmd_solve(const Options& opts, const StdPoly& f, Reporter& rep) {
  const RootSet roots = solve(f, opts.tol);
  rep.roots(roots, f);
  if (opts.oracle) oracle_check(f, roots, opts, rep);
  return rep.finish("ok", kExitOk);
}

int cmd_pure_imag(const Options& opts, const StdPoly& f, Reporter& rep) {
  if (f.degree() > opts.max_degree) {
    throw NotSupportedError("degree " + std::to_string(f.degree()) + " exceeds --max-degree " +
                            std::to_string(opts.max_degree));
  }
  if (f.degree() < 1) throw std::invalid_argument("pure-imag needs degree >= 1");
  rep.roots(pure_imag_any(f, opts.tol), f);
  return rep.finish("ok", kExitOk);
}

int cmd_factor(const Options& opts, const StdPoly& f, Reporter& rep) {
  const StdPoly fm = f.monic();
  std::vector<Quaternion> factors;
  RootSet roots;
  if (fm.degree() == 1) {
    factors = {-fm[0]};
    roots.isolated = factors;
  } else if (fm.degree() == 2) {
    roots = solve_quadratic(fm[1], fm[0], opts.tol);
    Quaternion right;
    if (!roots.isolated.empty()) right = roots.isolated.front();
    else if (!roots.spheres.empty()) right = roots.spheres.front().sample(Quaternion::unit_i());
    else throw NotSupportedError("no root found to factor with");
    const StdPoly q = right_div_linear(fm, right).quotient;
    factors = {-q[0], right};
  } else if (fm.degree() == 3) {
    const CubicSolution sol = solve_cubic(fm, opts.tol);
    roots = sol.roots;
    factors.assign(sol.factors.begin(), sol.factors.end());
  } else {
    throw NotSupportedError("factor supports degrees 1 to 3");
  }
  rep.doc()["factors"] = json::array();
  rep.text() << "f = ";
  for (const auto& u : factors) {
    rep.doc()["factors"].push_back(quat_json(u));
    rep.text() << "(z - " << shown(u) << ")";
  }
  rep.text() << '\n';
  const StdPoly expanded = from_linear_factors(factors);
  double expansion_error = 0.0;
  for (int m = 0; m <= std::max(expanded.degree(), fm.degree()); ++m) {
    expansion_error = std::max(expansion_error, max_abs(expanded[m] - fm[m]));
  }
  rep.doc()["expansion_error"] = expansion_error;
  rep.roots(roots, fm);
  return rep.finish("ok", kExitOk);
}

int cmd_eval(const Options& opts, const StdPoly& f, Reporter& rep) {
  const Quaternion z0 = parse_quaternion(opts.at);
  const Quaternion v = f.eval(z0);
  rep.doc()["value"] = quat_json(v);
  rep.text() << shown(v) << '\n';
  return rep.finish("ok", kExitOk);
}

int cmd_verify(const Options& opts, const StdPoly& f, Reporter& rep) {
  const Quaternion z0 = parse_quaternion(opts.at);
  const double residual = verify_root(f, z0);
  const bool is_root = residual <= opts.tol;
  rep.doc()["residual"] = residual;
  rep.doc()["is_root"] = is_root;
  rep.text() << "residual " << residual << (is_root ? "  (root)" : "  (not a root)") << '\n';
  return rep.finish("ok", kExitOk);
}

int cmd_two_sided(const Options& opts, const TwoSidedPoly& f, Reporter& rep) {
  // Expect z^2 + a z b + c.
  std::optional<TwoSidedTerm> square, linear;
  Quaternion c;
  for (const auto& t : f.terms()) {
    if (t.power == 0) {
      c += t.left * t.right;
    } else if (t.power == 1 && !linear) {
      linear = t;
    } else if (t.power == 2 && !square && t.left * t.right == Quaternion{1.0} &&
               is_pure_real(t.left, 0.0)) {
      square = t;
    } else {
      throw NotSupportedError("two-sided expects the shape z^2 + (a) z (b) + (c)");
    }
  }
  if (!square || !linear) {
    throw NotSupportedError("two-sided expects the shape z^2 + (a) z (b) + (c)");
  }
  const auto roots =
      pure_imaginary_roots_two_sided_quadratic(linear->left, linear->right, c, opts.tol);
  rep.doc()["roots"] = json::array();
  for (const auto& r : roots) {
    const double residual = abs(f.eval(r.root)) / f.scale_at(r.root);
    rep.doc()["roots"].push_back({{"q", quat_json(r.root)}, {"norm", r.norm}, {"residual", residual}});
    rep.text() << "root " << shown(r.root) << "  norm " << r.norm << "  residual " << residual << '\n';
  }
  rep.doc()["spheres"] = json::array();
  if (roots.empty()) rep.text() << "no pure imaginary roots\n";
  return rep.finish("ok", kExitOk);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Roots of quaternion standard polynomials", "qroots"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub, bool needs_point) {
    sub->add_option("expression", opts.expression, "polynomial in z (reads stdin if omitted or -)");
    sub->add_option("--tol", opts.tol, "relative tolerance")->check(CLI::PositiveNumber);
    sub->add_flag("--json", opts.as_json, "emit a JSON report");
    if (needs_point) sub->add_option("--at", opts.at, "quaternion point, e.g. 1+2i-j")->required();
  };

  auto* solve_cmd = app.add_subcommand("solve", "all roots (degree <= 2, or cubic with a pure imaginary root)");
  add_common(solve_cmd, false);
  solve_cmd->add_flag("--oracle", opts.oracle, "cross-check against the numeric oracle");
  solve_cmd->add_option("--seed", opts.seed, "oracle seed");

  auto* pim_cmd = app.add_subcommand("pure-imag", "pure imaginary roots of any degree");
  add_common(pim_cmd, false);
  pim_cmd->add_option("--max-degree", opts.max_degree, "largest accepted degree");

  auto* factor_cmd = app.add_subcommand("factor", "factor into linear factors (degree <= 3)");
  add_common(factor_cmd, false);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate in standard form at a point");
  add_common(eval_cmd, true);

  auto* verify_cmd = app.add_subcommand("verify", "relative residual of a claimed root");
  add_common(verify_cmd, true);

  auto* two_cmd = app.add_subcommand("two-sided", "pure imaginary roots of z^2 + (a) z (b) + (c)");
  add_common(two_cmd, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  Reporter rep(opts, out);
  const std::string text = read_expression(opts, in);
  try {
    if (two_cmd->parsed()) return cmd_two_sided(opts, parse_two_sided(text), rep);
    const StdPoly f = parse_std_poly(text);
    if (f.is_zero()) throw ZeroPolynomialError("the zero polynomial has every quaternion as a root");
    if (solve_cmd->parsed()) return cmd_solve(opts, f, rep);
    if (pim_cmd->parsed()) return cmd_pure_imag(opts, f, rep);
    if (factor_cmd->parsed()) return cmd_factor(opts, f, rep);
    if (eval_cmd->parsed()) return cmd_eval(opts, f, rep);
    return cmd_verify(opts, f, rep);
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << '\n';
    rep.doc() = json{{"message", e.what()}, {"position", e.position()}};
    return rep.finish("syntax_error", kExitInvalid);
  } catch (const NotSupportedError& e) {
    err << "not supported: " << e.what() << '\n';
    rep.doc() = json{{"message", e.what()}};
    return rep.finish("not_supported", kExitNotSupported);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    rep.doc() = json{{"message", e.what()}};
    return rep.finish("error", kExitInvalid);
  }
}

} // namespace qroots::cli
