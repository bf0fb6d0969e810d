#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vlogic/core.hpp"
#include "vlogic/formula.hpp"

namespace vlogic {

/// Variable name -> truth weight in [0,1]. Binary assignments use {0,1}.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<std::string, double>> weights);

  /// Throws ErrorKind::domain for weights outside [0,1].
  Assignment& set(std::string name, double weight);
  Assignment with(std::string name, double weight) const;

  std::optional<double> find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }
  bool is_binary() const;
  std::size_t size() const noexcept { return weights_.size(); }

  auto begin() const { return weights_.begin(); }
  auto end() const { return weights_.end(); }

 private:
  std::map<std::string, double, std::less<>> weights_;
};

struct EvalLimits {
  std::size_t max_vars = 20;
};

/// Exhaustive valuation. Row 0 is the all-true row and variable 0 is the
/// most significant position, so two variables give (1,1) (1,0) (0,1) (0,0).
class TruthTable {
 public:
  TruthTable(VariableSet vars, std::vector<bool> bits);

  const VariableSet& variables() const noexcept { return vars_; }
  std::size_t rows() const noexcept { return bits_.size(); }
  bool value(std::size_t row) const { return bits_.at(row); }
  const std::vector<bool>& bits() const noexcept { return bits_; }

  /// Truth value of variable `var_index` in `row`.
  bool input(std::size_t row, std::size_t var_index) const;
  Assignment assignment(std::size_t row) const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  VariableSet vars_;
  std::vector<bool> bits_;
};

/// Throws missing_variable or non_binary.
bool eval_binary(const Formula& f, const Assignment& a);
/// Structural recursion applying the gate matrices. Throws missing_variable.
TruthVec eval_vector(const Formula& f, const Assignment& a);
double eval_scalar(const Formula& f, const Assignment& a);

/// Throws cap_exceeded when the formula has more than limits.max_vars variables.
TruthTable truth_table(const Formula& f, const EvalLimits& limits = {});
/// Semantic equivalence over the union of both variable sets.
bool equivalent(const Formula& f, const Formula& g, const EvalLimits& limits = {});
bool is_tautology(const Formula& f, const EvalLimits& limits = {});

/// Points of {0, step, 2·step, ..., 1} (1 is always included).
std::vector<double> grid_points(double step);

/// Calls `visit(assignment)` for every point of the product grid over `vars`.
template <typename Visitor>
void for_each_grid_point(const VariableSet& vars, double step, Visitor&& visit) {
  const std::vector<double> pts = grid_points(step);
  std::vector<std::size_t> idx(vars.size(), 0);
  for (;;) {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a.set(vars[i], pts[idx[i]]);
    visit(static_cast<const Assignment&>(a));
    std::size_t k = vars.size();
    for (;;) {
      if (k == 0) return;
      --k;
      if (++idx[k] < pts.size()) break;
      idx[k] = 0;
    }
  }
}

/// Calls `visit(assignment)` for every binary assignment of `vars`, in
/// truth-table row order.
template <typename Visitor>
void for_each_binary_assignment(const VariableSet& vars, Visitor&& visit) {
  const std::size_t n = vars.size();
  const std::uint64_t rows = std::uint64_t{1} << n;
  for (std::uint64_t r = 0; r < rows; ++r) {
    Assignment a;
    for (std::size_t i = 0; i < n; ++i)
      a.set(vars[i], ((r >> (n - 1 - i)) & 1u) ? 0.0 : 1.0);
    visit(static_cast<const Assignment&>(a));
  }
}

}  // namespace vlogic
