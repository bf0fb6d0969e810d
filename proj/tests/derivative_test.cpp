#include <gtest/gtest.h>

#include <cmath>

#include "support/generators.hpp"
#include "support/reference_tables.hpp"
#include "vlogic/analysis.hpp"
#include "vlogic/derivative.hpp"
#include "vlogic/operators.hpp"

using namespace vlogic;
using vlogic::test::FormulaGen;

namespace {

double gap(const Formula& a, const Formula& b) { return max_numeric_gap(a, b, 0.25); }

TruthVec xor_of(const TruthVec& a, const TruthVec& b) { return apply(gate(GateName::X), a, b); }

}  // namespace

TEST(Diff, Examples) {
  EXPECT_TRUE(equivalent(diff(parse("p & q"), "p").formula, parse("q")));
  EXPECT_TRUE(equivalent(diff(parse("p | !p"), "p").formula, Formula::bottom()));
  const DerivativeResult d = diff(parse("p & q"), "p");
  EXPECT_EQ(d.variable, "p");
  EXPECT_EQ(render(d.formula), "(1 & q) ^ (0 & q)");
  EXPECT_FALSE(contains_variable(d.formula, "p"));
}

TEST(Diff, AbsentVariableIsSilent) {
  const Formula f = parse("q | r");
  EXPECT_EQ(diff(f, "p").formula, f ^ f);
}

TEST(Diff, FirstDerivativeTable) {
  for (const auto& row : test::first_derivative_table()) {
    const Formula op = parse(row.op), expected = parse(row.expected);
    const Formula d = diff(op, row.variable).formula;
    EXPECT_TRUE(equivalent(d, expected)) << row.op << " d/d" << row.variable;
    EXPECT_LE(gap(d, expected), 1e-9) << row.op << " d/d" << row.variable;
    for_each_grid_point(variables(op), 0.25, [&](const Assignment& a) {
      EXPECT_NEAR(diff_numeric(op, row.variable, a).weight(), eval_scalar(expected, a), 1e-9);
    });
  }
}

TEST(Diff, MonadicTable) {
  for (const auto& row : test::monadic_derivative_table()) {
    const Formula d = diff(parse(row.op), row.variable).formula;
    EXPECT_TRUE(equivalent(d, parse(row.expected))) << row.op;
    EXPECT_EQ(diff_numeric(parse(row.op), "p", {}).weight(), eval_scalar(parse(row.expected), {}));
  }
}

// E and X derivatives have projection β² + (1-β)², minimum 1/2 at β = 1/2.
TEST(Diff, EquivalenceDerivativeIsQuasiTautology) {
  const Formula op = parse("p <-> q");
  for (double b : {0.0, 0.25, 0.5, 0.75, 1.0})
    EXPECT_NEAR(diff_numeric(op, "p", {{"q", b}}).weight(), b * b + (1 - b) * (1 - b), 1e-12);
}

TEST(CrossDiff, Table) {
  for (const auto& row : test::cross_derivative_table()) {
    const Formula op = parse(row.op);
    const DerivativeResult d = cross_diff(op, "q", "p");
    EXPECT_EQ(d.variable, "p,q");
    EXPECT_TRUE(equivalent(d.formula, Formula::constant(row.expected))) << row.op;
    EXPECT_EQ(cross_diff_numeric(op, "p", "q", {}).weight(), row.expected ? 1.0 : 0.0);
  }
  EXPECT_THROW(cross_diff(parse("p & q"), "p", "p"), Error);
}

TEST(Identities, NegationLemmas) {
  FormulaGen gen(31, test::variable_pool(3), 5);
  for (int i = 0; i < 200; ++i) {
    const Formula f = gen();
    const Formula d = diff(f, "p").formula;
    // ∂NOp/∂u = ∂Op/∂u
    EXPECT_TRUE(equivalent(diff(!f, "p").formula, d));
    EXPECT_LE(gap(diff(!f, "p").formula, d), 1e-9);
    // ∂Op(Nu)/∂u = ∂Op(u)/∂u
    const Formula flipped = substitute(f, "p", !Formula::var("p"));
    EXPECT_LE(gap(diff(flipped, "p").formula, d), 1e-9);
    // ∂Op(u)/∂Nu = ∂Op(u)/∂u, via u' = Nu
    const Formula renamed = substitute(f, "p", !Formula::var("pp"));
    EXPECT_LE(gap(diff(renamed, "pp").formula, d), 1e-9);
  }
}

TEST(Identities, NegationDoesNotCommute) {
  const Formula p = Formula::var("p");
  EXPECT_FALSE(equivalent(diff(!p, "p").formula, !diff(p, "p").formula));
}

TEST(Identities, LogicalLinearity) {
  FormulaGen gen(32, test::variable_pool(3), 5);
  for (int i = 0; i < 200; ++i) {
    const Formula f = gen(), g = gen();
    for (bool t : {true, false}) {
      const Formula lhs = diff(Formula::constant(t) & f, "p").formula;
      const Formula rhs = Formula::constant(t) & diff(f, "p").formula;
      EXPECT_LE(gap(lhs, rhs), 1e-9);
    }
    const Formula lhs = diff(f ^ g, "p").formula;
    const Formula rhs = diff(f, "p").formula ^ diff(g, "p").formula;
    EXPECT_TRUE(equivalent(lhs, rhs));
    EXPECT_LE(gap(lhs, rhs), 1e-9);
  }
}

TEST(Identities, ProductRule) {
  EXPECT_LE(gap(diff(parse("(u & v) & w"), "v").formula, parse("u & w")), 1e-12);
  EXPECT_LE(gap(diff(parse("((u & v) & w) & z"), "w").formula, parse("(u & v) & z")), 1e-12);
}

TEST(Identities, Bisymmetry) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> unit(0, 1);
  for (int i = 0; i < 1000; ++i) {
    const TruthVec a = TruthVec::from_weight(unit(rng)), b = TruthVec::from_weight(unit(rng)),
                   c = TruthVec::from_weight(unit(rng)), d = TruthVec::from_weight(unit(rng));
    EXPECT_TRUE(vec_eq(xor_of(xor_of(a, b), xor_of(c, d)), xor_of(xor_of(a, c), xor_of(b, d)), 1e-12));
  }
}

TEST(CrossDiff, SymmetricInOrder) {
  FormulaGen gen(34, test::variable_pool(3), 5);
  for (int i = 0; i < 100; ++i) {
    const Formula f = gen();
    const Formula pq = diff(diff(f, "p").formula, "q").formula;
    const Formula qp = diff(diff(f, "q").formula, "p").formula;
    EXPECT_TRUE(equivalent(pq, qp));
    EXPECT_LE(gap(pq, qp), 1e-9);
    const Assignment at = gen.assignment({"r"});
    EXPECT_NEAR(cross_diff_numeric(f, "p", "q", at).weight(),
                cross_diff_numeric(f, "q", "p", at).weight(), 1e-12);
    EXPECT_NEAR(cross_diff_numeric(f, "p", "q", at).weight(), eval_scalar(pq, at), 1e-9);
  }
}

TEST(Successive, SecondDerivativeWeight) {
  const Formula h = parse("(p | q) -> (!q & p)");
  const Assignment at{{"q", 0.9}};
  const double phi = diff_numeric(h, "p", at).weight();
  EXPECT_NEAR(phi, 0.18, 1e-12);
  EXPECT_NEAR(second_diff_numeric(h, "p", at).weight(), 2 * phi * (1 - phi), 1e-12);
  EXPECT_NEAR(second_diff_numeric(h, "p", at).weight(), 0.2952, 1e-12);
}

TEST(Successive, Orbit) {
  const auto orbit = derivative_orbit(0.1, 30);
  ASSERT_EQ(orbit.size(), 31u);
  EXPECT_EQ(orbit.front(), 0.1);
  EXPECT_NEAR(orbit.back(), 0.5, 1e-6);
  for (double fixed : {0.0, 0.5})
    for (double e : derivative_orbit(fixed, 10)) EXPECT_EQ(e, fixed);
  EXPECT_THROW(derivative_orbit(1.1, 3), Error);
}

TEST(Successive, SymbolicTwiceIsBottom) {
  FormulaGen gen(35, test::variable_pool(3), 5);
  for (int i = 0; i < 100; ++i) {
    const Formula f = gen();
    EXPECT_TRUE(equivalent(diff(diff(f, "p").formula, "p").formula, Formula::bottom()));
  }
}

TEST(ChainRule, ExampleOneHoldsOnlyAtBinaryW) {
  const Formula outer = parse("h <-> (w ^ w)");
  const Formula inner = parse("p -> q");
  for (double w : {0.0, 1.0})
    for (double p : {0.0, 0.25, 0.5, 1.0}) {
      const ChainRuleSides sides = chain_rule(outer, "h", inner, "q", {{"p", p}, {"w", w}});
      EXPECT_NEAR(sides.direct.weight(), sides.chained.weight(), 1e-12);
      EXPECT_NEAR(sides.direct.weight(), p, 1e-12);
    }
  const ChainRuleSides sides = chain_rule(outer, "h", inner, "q", {{"p", 0.5}, {"w", 0.5}});
  EXPECT_NEAR(sides.direct.weight(), 0.5, 1e-12);
  EXPECT_NEAR(sides.chained.weight(), 0.25, 1e-12);
}

TEST(ChainRule, ExampleTwoHoldsEverywhere) {
  const Formula outer = parse("h -> (w | w)");
  const Formula inner = parse("p & q");
  for_each_grid_point({"p", "w"}, 0.25, [&](const Assignment& a) {
    const ChainRuleSides sides = chain_rule(outer, "h", inner, "q", a);
    EXPECT_NEAR(sides.direct.weight(), sides.chained.weight(), 1e-9);
  });
  EXPECT_THROW(chain_rule(parse("h & q"), "h", inner, "q", {}), Error);
}
