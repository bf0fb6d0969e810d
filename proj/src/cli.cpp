#include "vlogic/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <iterator>
#include <sstream>

#include "vlogic/analysis.hpp"
#include "vlogic/derivative.hpp"
#include "vlogic/eval.hpp"
#include "vlogic/formula.hpp"
#include "vlogic/integral.hpp"

namespace vlogic::cli {

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

using json = nlohmann::ordered_json;

struct GlobalOptions {
  bool json = false;
  double tol = 1e-9;
  double grid_step = 0.25;
  std::uint64_t seed = 1;
  std::size_t max_vars = 20;

  EvalLimits limits() const { return {max_vars}; }
  VerifyOptions verify() const {
    VerifyOptions v;
    v.tol = tol;
    v.grid_step = grid_step;
    v.limits = limits();
    return v;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Result payload plus its human-readable rendering.
struct Outcome {
  json result = json::object();
  std::string text;
  bool failed = false;
};

json formula_json(const Formula& f) {
  return {{"infix", render(f)}, {"polish", render(f, Notation::polish)}};
}

json assignment_json(const Assignment& a) {
  json out = json::object();
  for (const auto& [name, w] : a) out[name] = format_number(w);
  return out;
}

std::string read_formula(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

Assignment parse_assignments(const std::vector<std::string>& items) {
  Assignment a;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw UsageError("assignment '" + item + "' is not of the form name=value");
    const std::string name = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (!is_identifier(name) || name == "true" || name == "false")
      throw UsageError("'" + name + "' is not a variable name");
    double w = 0.0;
    if (value == "true") {
      w = 1.0;
    } else if (value == "false") {
      w = 0.0;
    } else {
      std::size_t used = 0;
      try {
        w = std::stod(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != value.size())
        throw UsageError("value '" + value + "' for '" + name + "' is not a number");
    }
    if (!(w >= 0.0 && w <= 1.0))
      throw UsageError("value " + value + " for '" + name + "' is outside [0,1]");
    a.set(name, w);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Commands

Outcome cmd_parse(const Formula& f) {
  Outcome o;
  o.result = formula_json(f);
  json vars = json::array();
  for (const auto& v : variables(f)) vars.push_back(v);
  o.result["variables"] = vars;
  o.text = "infix:  " + render(f) + "\npolish: " + render(f, Notation::polish) + "\n";
  return o;
}

Outcome cmd_table(const Formula& f, const GlobalOptions& g) {
  const TruthTable table = truth_table(f, g.limits());
  Outcome o;
  json columns = json::array();
  for (const auto& v : table.variables()) columns.push_back(v);
  columns.push_back("value");
  json rows = json::array();
  std::ostringstream text;
  for (const auto& v : table.variables()) text << v << ' ';
  text << "| " << render(f) << '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    json row = json::array();
    for (std::size_t i = 0; i < table.variables().size(); ++i) {
      const int bit = table.input(r, i) ? 1 : 0;
      row.push_back(bit);
      text << std::string(table.variables()[i].size() - 1, ' ') << bit << ' ';
    }
    row.push_back(table.value(r) ? 1 : 0);
    text << "| " << (table.value(r) ? 1 : 0) << '\n';
    rows.push_back(row);
  }
  o.result = {{"columns", columns}, {"rows", rows}};
  o.text = text.str();
  return o;
}

Outcome cmd_eval(const Formula& f, const Assignment& a) {
  const TruthVec u = eval_vector(f, a);
  Outcome o;
  const double w = scalar_project(u);
  o.result = {{"scalar", format_number(w)},
              {"vector", json::array({format_number(u.vector()(0)), format_number(u.vector()(1))})}};
  o.text = format_number(w) + "\n";
  return o;
}

Outcome cmd_diff(const Formula& f, const std::string& var, int order, const std::string& cross,
                 const Assignment& a, bool numeric) {
  Outcome o;
  std::ostringstream text;
  if (!cross.empty()) {
    const DerivativeResult d = cross_diff(f, var, cross);
    o.result = {{"variables", json::array({var, cross})},
                {"order", "cross"},
                {"derivative", formula_json(d.formula)},
                {"simplified", formula_json(d.simplified())}};
    text << "d2/d[" << var << "," << cross << "]: " << render(d.formula) << "\n"
         << "simplified: " << render(d.simplified()) << "\n";
    if (numeric) {
      const double w = cross_diff_numeric(f, var, cross, a).weight();
      o.result["numeric"] = {{"weight", format_number(w)}};
      text << "weight: " << format_number(w) << "\n";
    }
  } else if (order == 2) {
    const DerivativeResult first = diff(f, var);
    const DerivativeResult second = diff(first.formula, var);
    const bool vanishes = equivalent(second.formula, Formula::bottom());
    o.result = {{"variables", json::array({var})},
                {"order", 2},
                {"derivative", formula_json(second.formula)},
                {"simplified", formula_json(second.simplified())},
                {"bottom_equivalent", vanishes}};
    text << "d2/d" << var << "2: " << render(second.formula) << "\n"
         << "simplified: " << render(second.simplified()) << "\n"
         << "equivalent to 0: " << (vanishes ? "true" : "false") << "\n";
    if (numeric) {
      const double phi = diff_numeric(f, var, a).weight();
      const double w = second_diff_numeric(f, var, a).weight();
      o.result["numeric"] = {{"first_weight", format_number(phi)}, {"weight", format_number(w)}};
      text << "first weight: " << format_number(phi) << "\nweight: " << format_number(w) << "\n";
    }
  } else {
    const DerivativeResult d = diff(f, var);
    o.result = {{"variables", json::array({var})},
                {"order", 1},
                {"derivative", formula_json(d.formula)},
                {"simplified", formula_json(d.simplified())}};
    text << "d/d" << var << ": " << render(d.formula) << "\n"
         << "simplified: " << render(d.simplified()) << "\n";
    if (numeric) {
      const double w = diff_numeric(f, var, a).weight();
      o.result["numeric"] = {{"weight", format_number(w)}};
      text << "weight: " << format_number(w) << "\n";
    }
  }
  o.text = text.str();
  return o;
}

Outcome cmd_integrate(const Formula& f, const std::string& tau, const std::string& mode,
                      int version, std::size_t max_results, const GlobalOptions& g) {
  Outcome o;
  std::ostringstream text;
  if (mode == "general") {
    const Formula y = general_integral(f, tau, IntegralVersion::from_number(version));
    const bool ok = verify_integral(y, f, tau, g.verify());
    o.result = {{"mode", "general"},
                {"version", version},
                {"integral", formula_json(y)},
                {"verified", ok}};
    text << render(y) << "\nverified: " << (ok ? "true" : "false") << "\n";
    o.failed = !ok;
  } else {
    SearchOptions options;
    options.max_results = max_results;
    options.verify = g.verify();
    const auto found =
        particular_integral_search(f, tau, default_template_library(), options);
    json list = json::array();
    const auto positions = occurrences(f);
    for (const ParticularIntegral& pi : found) {
      json placements = json::array();
      for (std::size_t i = 0; i < pi.placements.size(); ++i)
        placements.push_back(
            {{"position", i},
             {"variable", positions[i].variable},
             {"template", pi.placements[i].rule->name()},
             {"scope", pi.placements[i].scope == Scope::literal ? "literal" : "variable"}});
      json entry = formula_json(pi.result);
      entry["condition"] = std::string(to_string(pi.condition));
      entry["placements"] = placements;
      entry["verified"] = true;
      list.push_back(entry);
      text << render(pi.result) << "  [" << to_string(pi.condition) << "]\n";
    }
    o.result = {{"mode", "particular"}, {"count", found.size()}, {"integrals", list}};
    if (found.empty()) text << "no particular integral found\n";
  }
  o.text = text.str();
  return o;
}

Outcome report_outcome(const AnalysisReport& report) {
  Outcome o;
  json verdicts = json::array();
  std::ostringstream text;
  for (const Verdict& v : report.verdicts) {
    json entry = {{"claim", v.claim},
                  {"lhs", render(v.lhs)},
                  {"rhs", render(v.rhs)},
                  {"oracle", v.oracle}};
    entry["numeric"] = v.numeric ? json(*v.numeric) : json(nullptr);
    verdicts.push_back(entry);
    text << (v.holds() ? "[ok]   " : "[FAIL] ") << v.claim << "\n";
  }
  o.result = {{"verdicts", verdicts}, {"all_hold", report.all_hold()}};
  o.text = text.str();
  o.failed = !report.all_hold();
  return o;
}

Outcome cmd_sensitivity(const Formula& f, const GlobalOptions& g) {
  SensitivityOptions options;
  options.grid_step = g.grid_step;
  options.seed = g.seed;
  const SensitivityReport report = sensitivity_report(f, options);
  Outcome o;
  json entries = json::array();
  std::ostringstream text;
  for (const SensitivityEntry& e : report.entries) {
    entries.push_back({{"variable", e.variable},
                       {"derivative", formula_json(e.derivative)},
                       {"simplified", formula_json(fold_constants(e.derivative))},
                       {"binary_min", format_number(e.binary_min)},
                       {"binary_max", format_number(e.binary_max)},
                       {"prob_min", format_number(e.prob_min)},
                       {"prob_max", format_number(e.prob_max)},
                       {"classification", std::string(to_string(e.classification))}});
    text << e.variable << ": " << to_string(e.classification) << "  d/d" << e.variable << " = "
         << render(fold_constants(e.derivative)) << "  projection in [" << format_number(e.prob_min)
         << ", " << format_number(e.prob_max) << "]\n";
  }
  o.result = {{"entries", entries}};
  o.result["collapse"] = report.collapse ? json(render(*report.collapse)) : json(nullptr);
  if (report.collapse) text << "collapse: " << render(f) << " ≈ " << render(*report.collapse) << "\n";
  o.text = text.str();
  return o;
}

Outcome cmd_tautology(const Formula& f, const GlobalOptions& g) {
  const TruthTable table = truth_table(f, g.limits());
  Outcome o;
  std::optional<std::size_t> witness;
  for (std::size_t r = 0; r < table.rows() && !witness; ++r)
    if (!table.value(r)) witness = r;
  o.result = {{"tautology", !witness.has_value()}};
  o.result["counterexample"] =
      witness ? assignment_json(table.assignment(*witness)) : json(nullptr);
  if (witness) {
    o.text = "false\ncounterexample:";
    for (const auto& [name, w] : table.assignment(*witness)) o.text += " " + name + "=" + format_number(w);
    o.text += "\n";
  } else {
    o.text = "true\n";
  }
  return o;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Vector-logic calculus: evaluation, Boolean derivatives and integrals",
               "vlogic"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  GlobalOptions g;
  app.add_flag("--json", g.json, "Print the machine-readable document");
  app.add_option("--tol", g.tol, "Numeric tolerance")->check(CLI::PositiveNumber);
  app.add_option("--grid-step", g.grid_step, "Probabilistic grid step")
      ->check(CLI::Range(1e-6, 1.0));
  app.add_option("--seed", g.seed, "Seed for sampled probabilistic ranges");
  app.add_option("--max-vars", g.max_vars, "Variable cap for exhaustive enumeration")
      ->check(CLI::Range(0, 30));

  std::string formula_arg, var, cross, tau = "t", mode = "general";
  std::vector<std::string> assignment_args;
  int order = 1, version = 1;
  std::size_t max_results = 16;

  auto formula_option = [&](CLI::App* cmd) {
    cmd->add_option("formula", formula_arg, "Formula text, or - for stdin")->required();
  };

  auto* parse_cmd = app.add_subcommand("parse", "Parse and echo a formula");
  formula_option(parse_cmd);
  auto* table_cmd = app.add_subcommand("table", "Print the truth table");
  formula_option(table_cmd);
  auto* eval_cmd = app.add_subcommand("eval", "Scalar projection under name=weight pairs");
  formula_option(eval_cmd);
  eval_cmd->add_option("assignment", assignment_args, "name=value pairs");
  auto* diff_cmd = app.add_subcommand("diff", "Boolean derivative");
  formula_option(diff_cmd);
  diff_cmd->add_option("variable", var, "Differentiation variable")->required();
  diff_cmd->add_option("assignment", assignment_args, "name=value pairs for a numeric value");
  diff_cmd->add_option("--order", order, "1 or 2")->check(CLI::IsMember({1, 2}));
  diff_cmd->add_option("--cross", cross, "Second variable of a cross derivative");
  auto* integrate_cmd = app.add_subcommand("integrate", "Boolean integral");
  formula_option(integrate_cmd);
  integrate_cmd->add_option("--tau", tau, "Integration variable")->capture_default_str();
  integrate_cmd->add_option("--mode", mode, "general or particular")
      ->check(CLI::IsMember({"general", "particular"}))
      ->capture_default_str();
  integrate_cmd->add_option("--version", version, "General integral version 1-4")
      ->check(CLI::Range(1, 4));
  integrate_cmd->add_option("--max-results", max_results, "Particular integrals to report");
  auto* hierarchy_cmd = app.add_subcommand("hierarchy", "Verify the HS -> MP -> EM hierarchy");
  auto* sensitivity_cmd = app.add_subcommand("sensitivity", "Per-variable sensitivity report");
  formula_option(sensitivity_cmd);
  auto* tautology_cmd = app.add_subcommand("tautology", "Decide whether a formula is a tautology");
  formula_option(tautology_cmd);

  std::vector<const char*> argv{"vlogic"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();

  json doc;
  doc["command"] = name;
  json input = json::object();
  auto fail = [&](const std::string& kind, const std::string& message,
                  std::optional<std::pair<std::size_t, std::size_t>> where, int code) {
    std::string text = message;
    if (where) text += " at " + std::to_string(where->first) + ":" + std::to_string(where->second);
    doc["status"] = "error";
    json error = {{"kind", kind}, {"message", message}};
    if (where) {
      error["line"] = where->first;
      error["column"] = where->second;
    }
    doc["error"] = error;
    if (g.json) emit(out, doc);
    else err << "error (" << kind << "): " << text << '\n';
    return code;
  };

  try {
    std::optional<Formula> f;
    if (cmd != hierarchy_cmd) {
      const std::string text = read_formula(formula_arg, in);
      input["formula"] = text;
      doc["input"] = input;
      f = parse(text);
    }
    const Assignment assignment = parse_assignments(assignment_args);
    if (!assignment_args.empty()) input["assignment"] = assignment_json(assignment);

    Outcome o;
    if (cmd == parse_cmd) {
      o = cmd_parse(*f);
    } else if (cmd == table_cmd) {
      o = cmd_table(*f, g);
    } else if (cmd == eval_cmd) {
      o = cmd_eval(*f, assignment);
    } else if (cmd == diff_cmd) {
      input["variable"] = var;
      if (!cross.empty()) input["cross"] = cross;
      else input["order"] = order;
      if (!is_identifier(var)) throw UsageError("'" + var + "' is not a variable name");
      if (!cross.empty() && !is_identifier(cross))
        throw UsageError("'" + cross + "' is not a variable name");
      if (!cross.empty() && order != 1) throw UsageError("--cross and --order 2 are exclusive");
      o = cmd_diff(*f, var, order, cross, assignment, !assignment_args.empty());
    } else if (cmd == integrate_cmd) {
      input["tau"] = tau;
      input["mode"] = mode;
      if (mode == "general") input["version"] = version;
      o = cmd_integrate(*f, tau, mode, version, max_results, g);
    } else if (cmd == hierarchy_cmd) {
      o = report_outcome(hierarchy_check({g.grid_step, g.tol}));
    } else if (cmd == sensitivity_cmd) {
      o = cmd_sensitivity(*f, g);
    } else {
      o = cmd_tautology(*f, g);
    }

    doc["input"] = input;
    doc["status"] = "ok";
    doc["result"] = o.result;
    if (g.json) emit(out, doc);
    else out << o.text;
    return o.failed ? kExitFailure : kExitOk;
  } catch (const UsageError& e) {
    doc["input"] = input;
    return fail("usage", e.what(), std::nullopt, kExitUsage);
  } catch (const ParseError& e) {
    doc["input"] = input;
    return fail(std::string(to_string(e.kind())), e.detail(),
                std::pair{e.line(), e.column()}, kExitFailure);
  } catch (const Error& e) {
    doc["input"] = input;
    return fail(std::string(to_string(e.kind())), e.what(), std::nullopt, kExitFailure);
  }
}

}  // namespace vlogic::cli
