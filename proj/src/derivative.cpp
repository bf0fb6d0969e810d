#include "vlogic/derivative.hpp"

#include "vlogic/operators.hpp"

namespace vlogic {

DerivativeResult diff(const Formula& f, std::string_view var) {
  Formula high = substitute(f, var, Formula::top());
  Formula low = substitute(f, var, Formula::bottom());
  return {f, std::string(var), std::move(high) ^ std::move(low)};
}

TruthVec diff_numeric(const Formula& f, std::string_view var, const Assignment& others) {
  const TruthVec high = eval_vector(f, others.with(std::string(var), 1.0));
  const TruthVec low = eval_vector(f, others.with(std::string(var), 0.0));
  return apply(gate(GateName::X), high, low);
}

DerivativeResult cross_diff(const Formula& f, std::string_view var1, std::string_view var2) {
  if (var1 == var2)
    throw Error(ErrorKind::invalid_argument, "cross derivative needs two distinct variables");
  const std::string_view first = var1 < var2 ? var1 : var2;
  const std::string_view second = var1 < var2 ? var2 : var1;
  DerivativeResult inner = diff(f, first);
  DerivativeResult outer = diff(inner.formula, second);
  return {f, std::string(first) + "," + std::string(second), std::move(outer.formula)};
}

TruthVec cross_diff_numeric(const Formula& f, std::string_view var1, std::string_view var2,
                            const Assignment& others) {
  if (var1 == var2)
    throw Error(ErrorKind::invalid_argument, "cross derivative needs two distinct variables");
  const std::string u(var1), v(var2);
  auto at = [&](double wu, double wv) { return eval_vector(f, others.with(u, wu).with(v, wv)); };
  const Gate& x = gate(GateName::X);
  // a = G(s,s), b = G(n,s), c = G(s,n), d = G(n,n) with G(u,v).
  return apply(x, apply(x, at(1, 1), at(0, 1)), apply(x, at(1, 0), at(0, 0)));
}

TruthVec second_diff_numeric(const Formula& f, std::string_view var, const Assignment& others) {
  const TruthVec z = diff_numeric(f, var, others);
  return apply(gate(GateName::X), z, z);
}

std::vector<double> derivative_orbit(double eps0, std::size_t k) {
  if (!(eps0 >= 0.0 && eps0 <= 1.0))
    throw Error(ErrorKind::domain, "initial weight must lie in [0,1]");
  std::vector<double> orbit;
  orbit.reserve(k + 1);
  orbit.push_back(eps0);
  for (std::size_t i = 0; i < k; ++i) {
    const double e = orbit.back();
    orbit.push_back(2.0 * e * (1.0 - e));
  }
  return orbit;
}

ChainRuleSides chain_rule(const Formula& outer, std::string_view hole, const Formula& inner,
                          std::string_view var, const Assignment& at) {
  if (contains_variable(outer, var))
    throw Error(ErrorKind::invalid_argument,
                "chain rule needs '" + std::string(var) + "' to occur only in the inner formula");
  const Formula composed = substitute(outer, hole, inner);
  const TruthVec outer_slope = diff_numeric(outer, hole, at);
  const TruthVec inner_slope = diff_numeric(inner, var, at);
  return {diff_numeric(composed, var, at), apply(gate(GateName::C), outer_slope, inner_slope)};
}

}  // namespace vlogic
