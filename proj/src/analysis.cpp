#include "vlogic/analysis.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

#include "vlogic/derivative.hpp"

namespace vlogic {

std::string_view to_string(TautologyId id) {
  switch (id) {
    case TautologyId::EM: return "EM";
    case TautologyId::MP: return "MP";
    case TautologyId::HS: return "HS";
    case TautologyId::ST: return "ST";
  }
  return "?";
}

std::string_view to_string(Sensitivity s) {
  switch (s) {
    case Sensitivity::sensitive: return "sensitive";
    case Sensitivity::insensitive: return "insensitive";
    case Sensitivity::mixed: return "mixed";
  }
  return "?";
}

Formula tautology(TautologyId id) {
  switch (id) {
    case TautologyId::EM: return parse("p | !p");
    case TautologyId::MP: return parse("(p & (p -> q)) -> q");
    case TautologyId::HS: return parse("((p -> q) & (q -> r)) -> (p -> r)");
    case TautologyId::ST: return parse("(p & q) -> p");
  }
  throw Error(ErrorKind::invalid_argument, "unknown tautology");
}

Formula tautology(TautologyId id, std::span<const Formula> args) {
  static const char* const names[] = {"p", "q", "r"};
  std::map<std::string, Formula, std::less<>> bindings;
  for (std::size_t i = 0; i < args.size() && i < 3; ++i) bindings.emplace(names[i], args[i]);
  return substitute(tautology(id), bindings);
}

bool AnalysisReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds(); });
}

double max_numeric_gap(const Formula& lhs, const Formula& rhs, double step) {
  VariableSet vars = variables(lhs);
  for (const auto& v : variables(rhs))
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  double gap = 0.0;
  for_each_grid_point(vars, step, [&](const Assignment& a) {
    gap = std::max(gap, std::abs(eval_scalar(lhs, a) - eval_scalar(rhs, a)));
  });
  return gap;
}

namespace {

Formula v(const char* name) { return Formula::var(name); }

Verdict check(std::string claim, Formula lhs, Formula rhs, const NumericCheck* numeric) {
  const bool oracle = equivalent(lhs, rhs);
  std::optional<bool> num;
  if (numeric) num = max_numeric_gap(lhs, rhs, numeric->grid_step) <= numeric->tol;
  return {std::move(claim), std::move(lhs), std::move(rhs), oracle, num};
}

}  // namespace

AnalysisReport hierarchy_check(const NumericCheck& numeric) {
  using T = TautologyId;
  AnalysisReport report;
  const Formula q = v("q"), r = v("r");

  const Formula step1 = !diff(tautology(T::HS), "p").formula;
  report.verdicts.push_back(
      check("N dHS/dp == MP(q,r)", step1, tautology(T::MP, std::vector{q, r}), &numeric));

  const Formula step2 = !diff(step1, "q").formula;
  report.verdicts.push_back(
      check("N d/dq [step 1] == EM(r)", step2, tautology(T::EM, std::vector{r}), &numeric));

  const Formula step3 = !diff(step2, "r").formula;
  report.verdicts.push_back(check("N d/dr [step 2] == 1", step3, Formula::top(), &numeric));
  return report;
}

AnalysisReport hs_auxiliary_checks(const NumericCheck& numeric) {
  using T = TautologyId;
  AnalysisReport report;
  auto& out = report.verdicts;
  const Formula p = v("p"), q = v("q"), r = v("r");
  const Formula hs = tautology(T::HS);
  const Formula mp = tautology(T::MP);
  const Formula st = tautology(T::ST);

  // Holds at binary points only: at p = 1, q = 0.5 the two sides differ.
  out.push_back(check("dHS/dr == N MP(!p,!q)", diff(hs, "r").formula,
                      !tautology(T::MP, std::vector{!p, !q}), nullptr));

  const Formula pivot = diff(hs, "q").formula;
  const Formula pivot_explicit =
      implies(r, implies(p, r)) ^ implies(!p, implies(!r, !p));
  out.push_back(check("dHS/dq == X{L[r, L(p,r)], L[!p, L(!r,!p)]}", pivot, pivot_explicit,
                      &numeric));
  out.push_back(check("pivot F(1,r) == N EM(r)", substitute(pivot, "p", Formula::top()),
                      !tautology(T::EM, std::vector{r}), &numeric));
  out.push_back(
      check("pivot F(p,1) == 0", substitute(pivot, "r", Formula::top()), Formula::bottom(), &numeric));
  out.push_back(check("pivot F(0,r) == 0", substitute(pivot, "p", Formula::bottom()),
                      Formula::bottom(), &numeric));
  out.push_back(check("pivot F(p,0) == N EM(p)", substitute(pivot, "r", Formula::bottom()),
                      !tautology(T::EM, std::vector{p}), &numeric));

  // E{...} of the two pivot halves is a tautology in the binary domain only.
  out.push_back(check("TD: L[r, L(p,r)] <-> L[!p, L(!r,!p)] == 1",
                      iff(implies(r, implies(p, r)), implies(!p, implies(!r, !p))),
                      Formula::top(), nullptr));
  out.push_back(check("L[r, L(p,r)] == L[C(r,p), r]", implies(r, implies(p, r)),
                      implies(r & p, r), &numeric));

  out.push_back(check("dST/dq == N L(p,p)", diff(st, "q").formula, !implies(p, p), &numeric));
  out.push_back(check("dST/dp == 0", diff(st, "p").formula, Formula::bottom(), &numeric));

  out.push_back(check("dMP/dq == N EM(p)", diff(mp, "q").formula,
                      !tautology(T::EM, std::vector{p}), &numeric));
  out.push_back(check("d2MP/d[p,q] == 0", cross_diff(mp, "p", "q").formula, Formula::bottom(),
                      &numeric));
  return report;
}

SensitivityReport sensitivity_report(const Formula& f, const SensitivityOptions& options) {
  const VariableSet vars = variables(f);
  if (vars.size() > options.max_vars)
    throw Error(ErrorKind::cap_exceeded, std::to_string(vars.size()) +
                                             " variables exceed the sensitivity cap of " +
                                             std::to_string(options.max_vars));
  SensitivityReport report{f, {}, std::nullopt};
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (const std::string& x : vars) {
    VariableSet rest;
    for (const auto& y : vars)
      if (y != x) rest.push_back(y);
    const Formula d = diff(f, x).formula;

    double bmin = 1.0, bmax = 0.0;
    for_each_binary_assignment(rest, [&](const Assignment& a) {
      const double w = eval_binary(d, a) ? 1.0 : 0.0;
      bmin = std::min(bmin, w);
      bmax = std::max(bmax, w);
    });

    double pmin = std::numeric_limits<double>::infinity();
    double pmax = -pmin;
    auto visit = [&](const Assignment& a) {
      const double w = eval_scalar(d, a);
      pmin = std::min(pmin, w);
      pmax = std::max(pmax, w);
    };
    if (rest.size() <= options.grid_vars) {
      for_each_grid_point(rest, options.grid_step, visit);
    } else {
      for (std::size_t k = 0; k < options.samples; ++k) {
        Assignment a;
        for (const auto& y : rest) a.set(y, unit(rng));
        visit(a);
      }
    }

    const Sensitivity cls = bmin == 1.0   ? Sensitivity::sensitive
                            : bmax == 0.0 ? Sensitivity::insensitive
                                          : Sensitivity::mixed;
    report.entries.push_back({x, d, bmin, bmax, pmin, pmax, cls});
  }

  const auto sensitive = std::count_if(report.entries.begin(), report.entries.end(),
                                       [](const auto& e) { return e.classification == Sensitivity::sensitive; });
  const auto insensitive = std::count_if(report.entries.begin(), report.entries.end(),
                                         [](const auto& e) { return e.classification == Sensitivity::insensitive; });
  if (sensitive == 1 && static_cast<std::size_t>(sensitive + insensitive) == vars.size()) {
    const auto it = std::find_if(report.entries.begin(), report.entries.end(),
                                 [](const auto& e) { return e.classification == Sensitivity::sensitive; });
    const Formula x = Formula::var(it->variable);
    report.collapse = equivalent(f, x) ? x : !x;
  }
  return report;
}

BoundScan tautology_bound_scan(TautologyId id, double step) {
  if (!(step > 0.0 && step <= 0.25))
    throw Error(ErrorKind::invalid_argument, "bound scan step must lie in (0, 0.25]");
  const Formula f = tautology(id);
  BoundScan best{std::numeric_limits<double>::infinity(), {}};
  for_each_grid_point(variables(f), step, [&](const Assignment& a) {
    const double w = eval_scalar(f, a);
    if (w < best.minimum) best = {w, a};
  });
  return best;
}

}  // namespace vlogic
