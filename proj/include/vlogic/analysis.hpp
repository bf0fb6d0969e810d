#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vlogic/eval.hpp"
#include "vlogic/formula.hpp"

namespace vlogic {

enum class TautologyId { EM, MP, HS, ST };

std::string_view to_string(TautologyId id);

/// EM: p | !p     MP: (p & (p -> q)) -> q
/// HS: ((p -> q) & (q -> r)) -> (p -> r)     ST: (p & q) -> p
Formula tautology(TautologyId id);
/// The tautology with its variables p, q, r replaced by `args` in order.
Formula tautology(TautologyId id, std::span<const Formula> args);

/// One checked equivalence. `numeric` is set when the claim also holds in the
/// probabilistic domain and was checked there.
struct Verdict {
  std::string claim;
  Formula lhs;
  Formula rhs;
  bool oracle;
  std::optional<bool> numeric;

  bool holds() const { return oracle && numeric.value_or(true); }
};

struct AnalysisReport {
  std::vector<Verdict> verdicts;
  bool all_hold() const;
};

struct NumericCheck {
  double grid_step = 0.25;
  double tol = 1e-9;
};

/// Chains HS -> MP -> EM -> 1 through negated first derivatives, each step
/// differentiating the previous step's actual output.
AnalysisReport hierarchy_check(const NumericCheck& numeric = {});

/// ∂HS/∂r, the pivot derivative ∂HS/∂q and its boundary cases, the ST
/// derivatives, ∂MP/∂q and the MP cross derivative.
AnalysisReport hs_auxiliary_checks(const NumericCheck& numeric = {});

enum class Sensitivity { sensitive, insensitive, mixed };

std::string_view to_string(Sensitivity s);

struct SensitivityEntry {
  std::string variable;
  Formula derivative;
  /// Extrema of the derivative over binary assignments of the other variables.
  double binary_min;
  double binary_max;
  /// Extrema over probabilistic assignments (grid, or seeded samples when
  /// there are more than `grid_vars` other variables).
  double prob_min;
  double prob_max;
  Sensitivity classification;
};

struct SensitivityReport {
  Formula formula;
  std::vector<SensitivityEntry> entries;
  /// x or !x when exactly one variable's derivative is always true and every
  /// other derivative is always false. Exact at binary points only.
  std::optional<Formula> collapse;
};

struct SensitivityOptions {
  std::size_t max_vars = 12;
  double grid_step = 0.25;
  std::size_t grid_vars = 4;
  std::size_t samples = 2000;
  std::uint64_t seed = 1;
};

/// Throws cap_exceeded above options.max_vars variables.
SensitivityReport sensitivity_report(const Formula& f, const SensitivityOptions& options = {});

struct BoundScan {
  double minimum;
  Assignment argmin;
};

/// Minimum scalar projection of the tautology over the product grid.
/// Throws invalid_argument unless 0 < step <= 0.25.
BoundScan tautology_bound_scan(TautologyId id, double step);

/// max |eval_scalar(lhs) - eval_scalar(rhs)| over the grid of their variables.
double max_numeric_gap(const Formula& lhs, const Formula& rhs, double step);

}  // namespace vlogic
