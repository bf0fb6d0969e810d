#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "vlogic/eval.hpp"

using namespace vlogic;

TEST(Assignment, DomainChecked) {
  Assignment a;
  EXPECT_THROW(a.set("p", 1.5), Error);
  a.set("p", 0.25);
  EXPECT_EQ(a.find("p"), 0.25);
  EXPECT_FALSE(a.find("q"));
  EXPECT_FALSE(a.is_binary());
  EXPECT_TRUE(a.with("p", 1.0).is_binary());
  EXPECT_EQ(a.find("p"), 0.25);
}

TEST(EvalBinary, Basics) {
  EXPECT_FALSE(eval_binary(parse("p -> q"), {{"p", 1}, {"q", 0}}));
  EXPECT_TRUE(eval_binary(parse("p !| q"), {{"p", 0}, {"q", 0}}));
  EXPECT_TRUE(eval_binary(parse("1 | p"), {{"p", 0}}));
}

TEST(EvalBinary, Errors) {
  try {
    eval_binary(parse("p & q"), {{"p", 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::missing_variable);
    EXPECT_NE(std::string(e.what()).find("'q'"), std::string::npos);
  }
  try {
    eval_binary(parse("p"), {{"p", 0.5}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::non_binary);
  }
}

TEST(EvalScalar, Examples) {
  EXPECT_DOUBLE_EQ(eval_scalar(parse("p -> q"), {{"p", 1}, {"q", 0}}), 0.0);
  EXPECT_DOUBLE_EQ(eval_scalar(parse("p ^ q"), {{"p", 0.5}, {"q", 0.5}}), 0.5);
  EXPECT_DOUBLE_EQ(eval_scalar(parse("p | !p"), {{"p", 0.5}}), 0.75);
  EXPECT_THROW(eval_scalar(parse("p"), {}), Error);
}

// Each occurrence is evaluated independently: p & p gives α², not α.
TEST(EvalScalar, OccurrencesAreIndependent) {
  EXPECT_DOUBLE_EQ(eval_scalar(parse("p & p"), {{"p", 0.5}}), 0.25);
}

TEST(TruthTable, RowOrder) {
  const TruthTable t = truth_table(parse("p & q"));
  ASSERT_EQ(t.rows(), 4u);
  EXPECT_EQ(t.bits(), (std::vector<bool>{true, false, false, false}));
  EXPECT_TRUE(t.input(1, 0));
  EXPECT_FALSE(t.input(1, 1));
  EXPECT_EQ(t.assignment(2).find("p"), 0.0);
}

TEST(TruthTable, Constant) {
  const TruthTable t = truth_table(Formula::top());
  EXPECT_EQ(t.rows(), 1u);
  EXPECT_TRUE(t.value(0));
}

TEST(TruthTable, Cap) {
  std::string text = "x0";
  for (int i = 1; i < 21; ++i) text += " & x" + std::to_string(i);
  try {
    truth_table(parse(text));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
  }
  EXPECT_THROW(is_tautology(parse("p | q"), EvalLimits{1}), Error);
}

TEST(Decide, TautologyAndEquivalence) {
  EXPECT_TRUE(is_tautology(parse("p | !p")));
  EXPECT_FALSE(is_tautology(parse("p -> q")));
  EXPECT_TRUE(equivalent(parse("p -> q"), parse("!q -> !p")));
  EXPECT_TRUE(equivalent(parse("p | (q & !q)"), parse("p")));
  EXPECT_FALSE(equivalent(parse("p"), parse("q")));
}

TEST(Grid, Points) {
  EXPECT_EQ(grid_points(0.25), (std::vector<double>{0, 0.25, 0.5, 0.75, 1}));
  EXPECT_EQ(grid_points(0.3).back(), 1.0);
  EXPECT_THROW(grid_points(0.0), Error);
  EXPECT_THROW(grid_points(1.5), Error);
  int count = 0;
  for_each_grid_point({"p", "q"}, 0.5, [&](const Assignment&) { ++count; });
  EXPECT_EQ(count, 9);
  count = 0;
  for_each_grid_point({}, 0.5, [&](const Assignment& a) { count += a.size() == 0; });
  EXPECT_EQ(count, 1);
}

TEST(Property, VectorAgreesWithBinary) {
  test::FormulaGen gen(21, test::variable_pool(5), 6);
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen();
    for_each_binary_assignment(variables(f), [&](const Assignment& a) {
      const TruthVec u = eval_vector(f, a);
      ASSERT_TRUE(u.is_binary());
      ASSERT_EQ(u.weight() == 1.0, eval_binary(f, a)) << render(f);
    });
  }
}

TEST(Property, ProbabilisticOutputInUnitInterval) {
  test::FormulaGen gen(22, test::variable_pool(4), 6);
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen();
    const double w = eval_scalar(f, gen.assignment(variables(f)));
    EXPECT_GE(w, 0.0);
    EXPECT_LE(w, 1.0);
  }
}
