#include <gtest/gtest.h>

#include <algorithm>

#include "support/generators.hpp"
#include "vlogic/analysis.hpp"
#include "vlogic/derivative.hpp"
#include "vlogic/integral.hpp"

using namespace vlogic;

namespace {

std::vector<std::string> search_results(const char* text, std::size_t max_results = 64) {
  SearchOptions options;
  options.max_results = max_results;
  std::vector<std::string> out;
  for (const auto& pi : particular_integral_search(parse(text), "t", default_template_library(), options))
    out.push_back(render(pi.result));
  return out;
}

bool contains(const std::vector<std::string>& list, const std::string& item) {
  return std::find(list.begin(), list.end(), item) != list.end();
}

const SubstitutionTemplate& rule(const char* pattern) {
  for (const auto& r : default_template_library())
    if (r.name() == pattern) return r;
  throw std::logic_error(pattern);
}

}  // namespace

TEST(GeneralIntegral, Versions) {
  const Formula f = parse("p | !p");
  EXPECT_EQ(render(general_integral(f, "t", IntegralVersion::from_number(1))), "(p | !p) -> t");
  EXPECT_EQ(render(general_integral(f, "t", IntegralVersion::from_number(2))), "!((p | !p) -> t)");
  EXPECT_EQ(render(general_integral(f, "t", IntegralVersion::from_number(3))), "(p | !p) & t");
  EXPECT_EQ(render(general_integral(f, "t", IntegralVersion::from_number(4))), "!((p | !p) & t)");
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(IntegralVersion::from_number(k).number(), k);
  EXPECT_THROW(IntegralVersion::from_number(5), Error);
}

TEST(GeneralIntegral, TauClash) {
  try {
    general_integral(parse("p & t"), "t", {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::variable_clash);
  }
  EXPECT_THROW(general_integral(parse("p"), "T", {}), Error);
}

TEST(GeneralIntegral, DifferentiatesBack) {
  test::FormulaGen gen(41, test::variable_pool(4), 5);
  for (int i = 0; i < 100; ++i) {
    const Formula f = gen();
    for (int k = 1; k <= 4; ++k) {
      const Formula y = general_integral(f, "t", IntegralVersion::from_number(k));
      EXPECT_TRUE(equivalent(diff(y, "t").formula, f));
      EXPECT_TRUE(verify_integral(y, f, "t"));
    }
  }
}

TEST(GeneralIntegral, Contraposition) {
  const Formula f = parse("p -> (q & r)");
  const Formula y = general_integral(!f, "t", IntegralVersion::from_number(4));
  EXPECT_LE(max_numeric_gap(y, implies(Formula::var("t"), f), 0.25), 1e-9);
}

TEST(GeneralIntegral, NegationNonLinearity) {
  const Formula f = parse("p & q");
  for (int k = 1; k <= 4; ++k) {
    const IntegralVersion v = IntegralVersion::from_number(k);
    EXPECT_FALSE(equivalent(general_integral(!f, "t", v), !general_integral(f, "t", v)));
  }
}

TEST(Verify, RejectsWrongCandidates) {
  const Formula f = parse("p & q");
  EXPECT_FALSE(verify_integral(parse("(p & q) & t"), parse("p | q"), "t"));
  EXPECT_FALSE(verify_integral(f, f, "p"));
  EXPECT_TRUE(verify_integral(parse("(p & q) & t"), f, "t"));
}

TEST(Templates, Validation) {
  EXPECT_THROW(SubstitutionTemplate("bad", parse("v & w")), Error);
  const SubstitutionTemplate& r = rule("v & tau");
  EXPECT_EQ(r.instantiate(parse("!p"), Formula::var("t")), parse("!p & t"));
  EXPECT_EQ(default_template_library().size(), 7u);
}

TEST(Occurrences, PreOrder) {
  const auto occ = occurrences(parse("(v -> w) & !v"));
  ASSERT_EQ(occ.size(), 3u);
  EXPECT_EQ(occ[0].variable, "v");
  EXPECT_EQ(occ[1].variable, "w");
  EXPECT_EQ(occ[2].variable, "v");
  EXPECT_TRUE(occ[2].negated);
  EXPECT_FALSE(occ[0].negated);
}

TEST(Placements, Scopes) {
  const Formula f = parse("p | !p");
  const SubstitutionTemplate& r = rule("tau & v");
  const std::vector<Placement> var_scope = {{&r, Scope::variable}, {&r, Scope::variable}};
  const std::vector<Placement> lit_scope = {{&r, Scope::variable}, {&r, Scope::literal}};
  EXPECT_EQ(render(apply_placements(f, "t", var_scope)), "(t & p) | !(t & p)");
  EXPECT_EQ(render(apply_placements(f, "t", lit_scope)), "(t & p) | (t & !p)");
  EXPECT_THROW(apply_placements(f, "t", std::span(var_scope).first(1)), Error);
  const std::vector<Placement> bad = {{&r, Scope::literal}, {&r, Scope::literal}};
  EXPECT_THROW(apply_placements(f, "t", bad), Error);
}

TEST(Detachment, Conditions) {
  const Formula f = parse("p -> q");
  EXPECT_EQ(check_detachment(rule("tau -> v"), rule("tau & v"), f, "t"), Detachment::c1);
  EXPECT_EQ(check_detachment(rule("v | tau"), rule("v | tau"), parse("p -> !q"), "t"),
            Detachment::c2);
  EXPECT_EQ(check_detachment(rule("v & tau"), rule("v & tau"), f, "t"), Detachment::none);
  EXPECT_EQ(to_string(Detachment::c1), "c1");
}

TEST(ParticularIntegral, ExcludedMiddle) {
  EXPECT_TRUE(contains(search_results("p | !p"), "(t & p) | (t & !p)"));
}

TEST(ParticularIntegral, ImplicationWithNegation) {
  EXPECT_TRUE(contains(search_results("p -> !q"), "(p | t) -> !(q | t)"));
}

TEST(ParticularIntegral, Implication) {
  const auto found = search_results("p -> q");
  EXPECT_TRUE(contains(found, "(t -> p) -> (t & q)"));
  EXPECT_TRUE(contains(found, "(t <-> (t & p)) -> (t & (t <-> q))"));
}

TEST(ParticularIntegral, ResultsVerifyAndAreOrdered) {
  SearchOptions options;
  options.max_results = 100;
  const Formula f = parse("(p & q) | !r");
  const auto found = particular_integral_search(f, "t", default_template_library(), options);
  ASSERT_FALSE(found.empty());
  for (std::size_t i = 0; i < found.size(); ++i) {
    EXPECT_TRUE(verify_integral(found[i].result, f, "t"));
    EXPECT_NE(found[i].condition, Detachment::none);
    if (i) EXPECT_LT(found[i - 1].enumeration_index, found[i].enumeration_index);
  }
  options.max_results = 2;
  EXPECT_EQ(particular_integral_search(f, "t", default_template_library(), options).size(), 2u);
  EXPECT_THROW(particular_integral_search(f, "t", {}, options), Error);
}
