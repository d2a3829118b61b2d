#include "monorder/polyterm.hpp"

#include <gtest/gtest.h>

#include <random>

#include "monorder/graded.hpp"
#include "monorder/orders.hpp"
#include "monorder/standard.hpp"

namespace monorder {
namespace {

MultiIndex mi(std::initializer_list<Nat> xs) { return MultiIndex(xs); }

std::vector<MultiIndex> exponents_of(const std::vector<Term>& ts) {
  std::vector<MultiIndex> out;
  for (const auto& t : ts) out.push_back(t.exponents);
  return out;
}

const std::string kTableInput = "Z^3 + Y^3 + X*Y*Z + X*Y^2 + X^3";

TEST(ParsePoly, IndexedVariables) {
  const auto p = parse_poly("X0^0*X1^8 + X0^1*X1^2", 2);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.terms().at(mi({0, 8})), Coefficient(1));
  EXPECT_EQ(p.terms().at(mi({1, 2})), Coefficient(1));
}

TEST(ParsePoly, CancellationAndMerging) {
  EXPECT_TRUE(parse_poly("X0 - X0", 1).is_zero());
  const auto p = parse_poly("2*X0*X1 + 3*X0*X1", 2);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.terms().at(mi({1, 1})), Coefficient(5));
}

TEST(ParsePoly, CoefficientsAndSigns) {
  const auto p = parse_poly(" -3/4*X1^2 + 7 - X0*X0 \xE2\x88\x92 2/4", 2);
  EXPECT_EQ(p.terms().at(mi({0, 2})), Coefficient(-3, 4));
  EXPECT_EQ(p.terms().at(mi({0, 0})), Coefficient(13, 2));
  EXPECT_EQ(p.terms().at(mi({2, 0})), Coefficient(-1));
  EXPECT_TRUE(parse_poly("0", 3).is_zero());
}

TEST(ParsePoly, Aliases) {
  PolyParseInfo info;
  const auto p = parse_poly(kTableInput, 3, &info);
  EXPECT_TRUE(info.used_aliases);
  EXPECT_EQ(p.size(), 5u);
  EXPECT_EQ(p.terms().count(mi({1, 1, 1})), 1u);

  PolyParseInfo plain;
  parse_poly("X0*X2", 3, &plain);
  EXPECT_FALSE(plain.used_aliases);
}

TEST(ParsePoly, Errors) {
  auto position_of = [](std::string_view text, std::size_t d) -> std::size_t {
    try {
      parse_poly(text, d);
    } catch (const PolyParseError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for " << text;
    return 0;
  };
  EXPECT_EQ(position_of("X0 + X5", 2), 5u);
  EXPECT_EQ(position_of("X0 + ", 2), 5u);
  EXPECT_EQ(position_of("X0 X1", 2), 3u);
  EXPECT_EQ(position_of("X0 * ", 2), 5u);
  EXPECT_EQ(position_of("Z", 2), 0u);
  EXPECT_EQ(position_of("X", 4), 0u);
  EXPECT_EQ(position_of("1/0", 1), 2u);
  EXPECT_EQ(position_of("", 1), 0u);
  EXPECT_EQ(position_of("X0^", 1), 3u);
}

TEST(FormatTerms, Canonical) {
  const auto p = parse_poly("-X0 + 3/2*X1^2 - 1", 2);
  EXPECT_EQ(format_terms(sort_terms(p, *named_order("grlex")), VariableStyle::indexed),
            "-1 - X0 + 3/2*X1^2");
  EXPECT_EQ(format_terms({}, VariableStyle::indexed), "0");
  EXPECT_EQ(format_terms({{mi({1, 0, 2}), Coefficient(-2)}}, VariableStyle::xyz), "-2*X*Z^2");
}

TEST(SortTerms, TableOneRows) {
  const auto p = parse_poly(kTableInput, 3);
  auto row = [&](const char* order) {
    return format_terms(sort_terms(p, *named_order(order)), VariableStyle::xyz);
  };
  EXPECT_EQ(row("grlex"), "Z^3 + Y^3 + X*Y*Z + X*Y^2 + X^3");
  EXPECT_EQ(row("grcolex"), "X^3 + X*Y^2 + Y^3 + X*Y*Z + Z^3");
  EXPECT_EQ(row("grsymlex"), "X^3 + X*Y^2 + X*Y*Z + Y^3 + Z^3");
  EXPECT_EQ(row("grevlex"), "Z^3 + X*Y*Z + Y^3 + X*Y^2 + X^3");
}

TEST(SortTerms, SingleTermAndPermutation) {
  const auto one = parse_poly("4*X0^2", 1);
  EXPECT_EQ(sort_terms(one, *named_order("lex")), (std::vector<Term>{{mi({2}), 4}}));

  const auto p = parse_poly("X0^3 + X1 + X0*X1 + 1 + X1^4", 2);
  for (const auto& name : named_order_names()) {
    const auto order = *named_order(name);
    const auto s = sort_terms(p, order);
    ASSERT_EQ(s.size(), p.size());
    for (std::size_t i = 1; i < s.size(); ++i) EXPECT_TRUE(order(s[i - 1].exponents, s[i].exponents));
    for (const auto& t : s) EXPECT_EQ(p.terms().at(t.exponents), t.coefficient);
  }
}

TEST(SortTerms, GradedOrdersGroupByDegree) {
  const auto p = parse_poly("X0^3 + X1 + X0*X1*X2 + 1 + X2^4 + X1^2", 3);
  for (const char* name : {"grlex", "grevlex"}) {
    const auto s = sort_terms(p, *named_order(name));
    const auto n = nat_add_monoid();
    for (std::size_t i = 1; i < s.size(); ++i)
      EXPECT_LE(family_sum(s[i - 1].exponents, n), family_sum(s[i].exponents, n));
  }
}

TEST(LeadingTerm, Examples) {
  const auto p = parse_poly("X0^0*X1^8 + X0^1*X1^2", 2);
  EXPECT_EQ(leading_term(p, *named_order("lex"))->exponents, mi({1, 2}));
  EXPECT_EQ(leading_term(p, *named_order("grlex"))->exponents, mi({0, 8}));
  EXPECT_FALSE(leading_term(SparsePoly(2), *named_order("lex")).has_value());
}

TEST(LeadingTerm, CommutesWithMonomialMultiplication) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + rng() % 4;
    SparsePoly p(d);
    const int nterms = 1 + static_cast<int>(rng() % 6);
    for (int t = 0; t < nterms; ++t) {
      std::vector<Nat> e(d);
      for (auto& v : e) v = rng() % 6;
      p.add_term(MultiIndex(e), Coefficient(static_cast<std::int64_t>(rng() % 9) - 4));
    }
    std::vector<Nat> g(d);
    for (auto& v : g) v = rng() % 5;
    const MultiIndex gamma(g);
    for (const char* name : {"grlex", "grcolex", "grsymlex", "grevlex", "lex"}) {
      const auto order = *named_order(name);
      const auto before = leading_term(p, order);
      const auto after = leading_term(multiply_by_monomial(p, gamma), order);
      ASSERT_EQ(before.has_value(), after.has_value());
      if (!before) continue;
      EXPECT_EQ(after->exponents, family_add(before->exponents, gamma, nat_add_monoid()));
      EXPECT_EQ(after->coefficient, before->coefficient);
    }
  }
}

TEST(SparsePoly, InvariantsAndErrors) {
  SparsePoly p(2);
  p.add_term(mi({1, 1}), 0);
  EXPECT_TRUE(p.is_zero());
  p.add_term(mi({1, 1}), 2);
  p.add_term(mi({1, 1}), -2);
  EXPECT_TRUE(p.is_zero());
  EXPECT_THROW(p.add_term(mi({1}), 1), LengthMismatch);
  EXPECT_THROW(multiply_by_monomial(p, mi({1, 2, 3})), LengthMismatch);
}

}  // namespace
}  // namespace monorder
