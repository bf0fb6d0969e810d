#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vlogic/eval.hpp"
#include "vlogic/formula.hpp"

namespace vlogic {

/// H·L(f ⊗ H'τ) with H, H' ∈ {I, N}.
struct IntegralVersion {
  bool negate_outer = false;  // H = N
  bool negate_tau = false;    // H' = N

  /// 1: f -> τ   2: !(f -> τ)   3: f & τ   4: !(f & τ)
  static IntegralVersion from_number(int number);
  int number() const noexcept;

  friend bool operator==(const IntegralVersion&, const IntegralVersion&) = default;
};

/// Throws variable_clash if τ occurs in f, invalid_argument if τ is not an
/// identifier.
Formula general_integral(const Formula& f, std::string_view tau, IntegralVersion version);

struct VerifyOptions {
  double tol = 1e-9;
  double grid_step = 0.25;
  std::size_t max_numeric_vars = 4;
  EvalLimits limits{};
};

/// diff(candidate, τ) ≡ f by truth table and, when at most
/// `max_numeric_vars` other variables are involved, numerically on the grid.
bool verify_integral(const Formula& candidate, const Formula& f, std::string_view tau,
                     const VerifyOptions& options = {});

/// A pattern over the placeholder variables `v` (the substituted target) and
/// `tau` (the integration variable).
class SubstitutionTemplate {
 public:
  static constexpr std::string_view target_placeholder = "v";
  static constexpr std::string_view tau_placeholder = "tau";

  /// Throws template_mismatch if the pattern mentions other variables.
  SubstitutionTemplate(std::string name, Formula pattern);

  const std::string& name() const noexcept { return name_; }
  const Formula& pattern() const noexcept { return pattern_; }

  Formula instantiate(const Formula& target, const Formula& tau) const;

 private:
  std::string name_;
  Formula pattern_;
};

/// v&tau, tau&v, v|tau, tau->v, v->tau, tau<->(tau&v), tau&(tau<->v).
const std::vector<SubstitutionTemplate>& default_template_library();

/// A labelled variable position, numbered in left-to-right order.
struct Occurrence {
  std::size_t index;
  std::string variable;
  bool negated;  // directly under `!`
};

std::vector<Occurrence> occurrences(const Formula& f);

/// Where a template lands at a negated position: on the variable (!B(p)) or
/// on the whole literal (B(!p)).
enum class Scope { variable, literal };

struct Placement {
  const SubstitutionTemplate* rule = nullptr;  // not owned
  Scope scope = Scope::variable;
};

/// Replaces position i of f by placements[i]. Throws invalid_argument when the
/// number of placements differs from the number of positions or a literal
/// scope is used at a non-negated position.
Formula apply_placements(const Formula& f, std::string_view tau,
                         std::span<const Placement> placements);

enum class Detachment { c1, c2, none };

std::string_view to_string(Detachment d);

/// c1: every template reduces to its target at τ = 1 and the formula over the
/// τ = 0 reductions is false; c2 swaps the roles of the two poles.
Detachment check_detachment(const Formula& f, std::string_view tau,
                            std::span<const Placement> placements,
                            const EvalLimits& limits = {});

/// Two-position form u -> B(u, τ), v -> B'(v, τ) at variable scope.
Detachment check_detachment(const SubstitutionTemplate& b, const SubstitutionTemplate& b_prime,
                            const Formula& f, std::string_view tau,
                            const EvalLimits& limits = {});

struct ParticularIntegral {
  Formula original;
  std::string tau;
  std::vector<Placement> placements;
  Formula result;
  Detachment condition;
  std::size_t enumeration_index;
};

struct SearchOptions {
  std::size_t max_results = 16;
  std::size_t max_candidates = 10000;
  VerifyOptions verify{};
};

/// Enumerates per-position placements in lexicographic order (first position
/// slowest; per position: library order, variable scope before literal
/// scope), keeps those passing the detachment pre-filter and verify_integral.
std::vector<ParticularIntegral> particular_integral_search(
    const Formula& f, std::string_view tau, std::span<const SubstitutionTemplate> library,
    const SearchOptions& options = {});

}  // namespace vlogic
