#include "vlogic/integral.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "vlogic/derivative.hpp"

namespace vlogic {

namespace {

void require_fresh(const Formula& f, std::string_view tau) {
  if (!is_identifier(tau) || tau == "true" || tau == "false")
    throw Error(ErrorKind::invalid_argument,
                "'" + std::string(tau) + "' is not a variable name");
  if (contains_variable(f, tau))
    throw Error(ErrorKind::variable_clash,
                "integration variable '" + std::string(tau) + "' already occurs in the formula");
}

bool is_false(const Formula& f, const EvalLimits& limits) { return is_tautology(!f, limits); }

}  // namespace

// ---------------------------------------------------------------------------
// General integrals

IntegralVersion IntegralVersion::from_number(int number) {
  switch (number) {
    case 1: return {false, false};
    case 2: return {true, false};
    case 3: return {true, true};
    case 4: return {false, true};
    default:
      throw Error(ErrorKind::invalid_argument, "integral version must be 1, 2, 3 or 4");
  }
}

int IntegralVersion::number() const noexcept {
  if (!negate_tau) return negate_outer ? 2 : 1;
  return negate_outer ? 3 : 4;
}

Formula general_integral(const Formula& f, std::string_view tau, IntegralVersion version) {
  require_fresh(f, tau);
  const Formula t = Formula::var(std::string(tau));
  // NL(f ⊗ Nτ) = C(f ⊗ τ) and L(f ⊗ Nτ) = NC(f ⊗ τ).
  switch (version.number()) {
    case 1: return implies(f, t);
    case 2: return !implies(f, t);
    case 3: return f & t;
    default: return !(f & t);
  }
}

bool verify_integral(const Formula& candidate, const Formula& f, std::string_view tau,
                     const VerifyOptions& options) {
  if (contains_variable(f, tau)) return false;
  const Formula derivative = diff(candidate, tau).formula;
  if (!equivalent(derivative, f, options.limits)) return false;

  VariableSet others;
  for (const VariableSet& vs : {variables(candidate), variables(f)})
    for (const auto& v : vs)
      if (v != tau && std::find(others.begin(), others.end(), v) == others.end())
        others.push_back(v);
  if (others.size() > options.max_numeric_vars) return true;

  bool ok = true;
  for_each_grid_point(others, options.grid_step, [&](const Assignment& a) {
    if (!ok) return;
    const double lhs = diff_numeric(candidate, tau, a).weight();
    const double rhs = eval_vector(f, a).weight();
    ok = std::abs(lhs - rhs) <= options.tol;
  });
  return ok;
}

// ---------------------------------------------------------------------------
// Templates and positions

SubstitutionTemplate::SubstitutionTemplate(std::string name, Formula pattern)
    : name_(std::move(name)), pattern_(std::move(pattern)) {
  for (const auto& v : variables(pattern_))
    if (v != target_placeholder && v != tau_placeholder)
      throw Error(ErrorKind::template_mismatch,
                  "template '" + name_ + "' mentions '" + v + "'; only v and tau are allowed");
}

Formula SubstitutionTemplate::instantiate(const Formula& target, const Formula& tau) const {
  std::map<std::string, Formula, std::less<>> bindings;
  bindings.emplace(std::string(target_placeholder), target);
  bindings.emplace(std::string(tau_placeholder), tau);
  return substitute(pattern_, bindings);
}

const std::vector<SubstitutionTemplate>& default_template_library() {
  static const std::vector<SubstitutionTemplate> library = [] {
    std::vector<SubstitutionTemplate> lib;
    for (const char* text : {"v & tau", "tau & v", "v | tau", "tau -> v", "v -> tau",
                             "tau <-> (tau & v)", "tau & (tau <-> v)"})
      lib.emplace_back(text, parse(text));
    return lib;
  }();
  return library;
}

namespace {

void collect_occurrences(const Formula& f, bool under_not, std::vector<Occurrence>& out) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return;
    case Formula::Kind::Var:
      out.push_back({out.size(), f.name(), under_not});
      return;
    case Formula::Kind::Not:
      collect_occurrences(f.operand(), true, out);
      return;
    default:
      collect_occurrences(f.lhs(), false, out);
      collect_occurrences(f.rhs(), false, out);
  }
}

class PlacementRewriter {
 public:
  PlacementRewriter(std::span<const Placement> placements, Formula tau)
      : placements_(placements), tau_(std::move(tau)) {}

  Formula rewrite(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::True:
      case Formula::Kind::False:
        return f;
      case Formula::Kind::Var:
        return take(Scope::variable).rule->instantiate(f, tau_);
      case Formula::Kind::Not: {
        if (!f.operand().is_var()) return !rewrite(f.operand());
        const Placement& p = take(Scope::literal);
        if (p.scope == Scope::literal) return p.rule->instantiate(f, tau_);
        return !p.rule->instantiate(f.operand(), tau_);
      }
      default: {
        Formula lhs = rewrite(f.lhs());
        return Formula::binary(f.kind(), std::move(lhs), rewrite(f.rhs()));
      }
    }
  }

  void finish() const {
    if (next_ != placements_.size())
      throw Error(ErrorKind::invalid_argument, "more placements than variable positions");
  }

 private:
  const Placement& take(Scope allowed) {
    if (next_ >= placements_.size())
      throw Error(ErrorKind::invalid_argument, "fewer placements than variable positions");
    const Placement& p = placements_[next_++];
    if (p.rule == nullptr) throw Error(ErrorKind::invalid_argument, "placement without template");
    if (p.scope == Scope::literal && allowed != Scope::literal)
      throw Error(ErrorKind::invalid_argument, "literal scope at a non-negated position");
    return p;
  }

  std::span<const Placement> placements_;
  Formula tau_;
  std::size_t next_ = 0;
};

}  // namespace

std::vector<Occurrence> occurrences(const Formula& f) {
  std::vector<Occurrence> out;
  collect_occurrences(f, false, out);
  return out;
}

Formula apply_placements(const Formula& f, std::string_view tau,
                         std::span<const Placement> placements) {
  PlacementRewriter rewriter(placements, Formula::var(std::string(tau)));
  Formula out = rewriter.rewrite(f);
  rewriter.finish();
  return out;
}

std::string_view to_string(Detachment d) {
  switch (d) {
    case Detachment::c1: return "c1";
    case Detachment::c2: return "c2";
    case Detachment::none: return "none";
  }
  return "none";
}

Detachment check_detachment(const Formula& f, std::string_view tau,
                            std::span<const Placement> placements, const EvalLimits& limits) {
  require_fresh(f, tau);
  const std::vector<Occurrence> positions = occurrences(f);
  if (positions.size() != placements.size())
    throw Error(ErrorKind::invalid_argument, "one placement per variable position is required");
  const Formula candidate = apply_placements(f, tau, placements);

  // Each template must reduce to its own target at pole `keep`, and the whole
  // formula must be false at the other pole.
  auto holds = [&](bool keep) {
    const Formula pole = Formula::constant(keep);
    for (std::size_t i = 0; i < positions.size(); ++i) {
      Formula target = Formula::var(positions[i].variable);
      if (placements[i].scope == Scope::literal) target = !target;
      if (!equivalent(placements[i].rule->instantiate(target, pole), target, limits))
        return false;
    }
    return is_false(substitute(candidate, tau, Formula::constant(!keep)), limits);
  };
  if (holds(true)) return Detachment::c1;
  if (holds(false)) return Detachment::c2;
  return Detachment::none;
}

Detachment check_detachment(const SubstitutionTemplate& b, const SubstitutionTemplate& b_prime,
                            const Formula& f, std::string_view tau, const EvalLimits& limits) {
  const Placement placements[] = {{&b, Scope::variable}, {&b_prime, Scope::variable}};
  return check_detachment(f, tau, placements, limits);
}

std::vector<ParticularIntegral> particular_integral_search(
    const Formula& f, std::string_view tau, std::span<const SubstitutionTemplate> library,
    const SearchOptions& options) {
  require_fresh(f, tau);
  if (library.empty())
    throw Error(ErrorKind::invalid_argument, "template library is empty");

  const std::vector<Occurrence> positions = occurrences(f);
  std::vector<std::vector<Placement>> choices;
  for (const Occurrence& occ : positions) {
    std::vector<Placement> opts;
    for (const SubstitutionTemplate& t : library) {
      opts.push_back({&t, Scope::variable});
      if (occ.negated) opts.push_back({&t, Scope::literal});
    }
    choices.push_back(std::move(opts));
  }

  std::vector<ParticularIntegral> found;
  if (positions.empty()) return found;

  std::vector<std::size_t> digit(positions.size(), 0);
  std::vector<Placement> current(positions.size());
  for (std::size_t index = 0; index < options.max_candidates; ++index) {
    for (std::size_t i = 0; i < positions.size(); ++i) current[i] = choices[i][digit[i]];

    const Detachment cond = check_detachment(f, tau, current, options.verify.limits);
    if (cond != Detachment::none) {
      Formula candidate = apply_placements(f, tau, current);
      if (verify_integral(candidate, f, tau, options.verify)) {
        found.push_back({f, std::string(tau), current, std::move(candidate), cond, index});
        if (found.size() >= options.max_results) break;
      }
    }

    // Odometer step: the last position varies fastest.
    std::size_t k = positions.size();
    bool done = true;
    while (k > 0) {
      --k;
      if (++digit[k] < choices[k].size()) {
        done = false;
        break;
      }
      digit[k] = 0;
    }
    if (done) break;
  }
  return found;
}

}  // namespace vlogic
