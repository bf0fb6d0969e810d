#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vlogic/eval.hpp"
#include "vlogic/formula.hpp"

namespace vlogic {

/// Symbolic Boolean derivative ∂f/∂x = f[x:=1] ^ f[x:=0].
struct DerivativeResult {
  Formula input;
  std::string variable;
  /// Unsimplified XOR of the two cofactors. Never mentions `variable`.
  Formula formula;

  Formula simplified() const { return fold_constants(formula); }
};

/// Differentiating with respect to an absent variable yields f ^ f, the
/// derivative of f seen as a silent function of that variable.
DerivativeResult diff(const Formula& f, std::string_view var);

/// X[f(s) ⊗ f(n)] evaluated under `others` (a weight for `var` in `others`,
/// if any, is ignored). Throws missing_variable.
TruthVec diff_numeric(const Formula& f, std::string_view var, const Assignment& others);

/// Second-order mixed derivative. The alphabetically-first variable is
/// differentiated first; the result is order independent up to equivalence.
/// Throws invalid_argument when var1 == var2.
DerivativeResult cross_diff(const Formula& f, std::string_view var1, std::string_view var2);

/// X[X(G(s,s) ⊗ G(n,s)) ⊗ X(G(s,n) ⊗ G(n,n))], differentiating var1 first.
TruthVec cross_diff_numeric(const Formula& f, std::string_view var1, std::string_view var2,
                            const Assignment& others);

/// X(z ⊗ z) for z = diff_numeric(f, var, others): weight 2φ(1-φ).
TruthVec second_diff_numeric(const Formula& f, std::string_view var, const Assignment& others);

/// ε0, ε1, ..., εk with ε' = 2ε(1-ε). Throws domain unless ε0 ∈ [0,1].
std::vector<double> derivative_orbit(double eps0, std::size_t k);

/// Both sides of a chain-rule comparison for F = outer[hole := inner].
struct ChainRuleSides {
  TruthVec direct;   // ∂F/∂var
  TruthVec chained;  // C(∂outer/∂hole ⊗ ∂inner/∂var)
};

/// `var` must not occur in `outer`. Throws invalid_argument otherwise.
ChainRuleSides chain_rule(const Formula& outer, std::string_view hole, const Formula& inner,
                          std::string_view var, const Assignment& at);

}  // namespace vlogic
