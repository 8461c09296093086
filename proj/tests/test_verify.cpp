#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "kmweyl/verify.hpp"

using namespace kmweyl;

namespace {

const CartanMatrix kH3a("H3-a", {{2, 0, -1}, {0, 2, -2}, {-1, -2, 2}});  // class {1,10}
const CartanMatrix kH3c("H3-c", {{2, 0, -1}, {0, 2, -2}, {-3, -2, 2}});  // class {8,13,14}
const CartanMatrix kH3x("H3-x", {{2, -1, -1}, {-1, 2, -1}, {-1, -3, 2}});

// R_s exists iff (1 + t^3) divides Q_s, because P_A3 / P_B3 = 1 / (1 + t^3).
bool divisible_by_one_plus_t3(const Polynomial& q) { return divexact(q, Polynomial{1, 0, 0, 1}).has_value(); }

}  // namespace

TEST(VerifyIdentity, PassesForMatchedClass) {
  for (int s : {1, 10}) {
    const auto rep = verify_identity(kH3a, s, 16);
    EXPECT_EQ(rep.outcome, Outcome::Pass) << s;
    EXPECT_FALSE(rep.first_mismatch);
    EXPECT_EQ(rep.table.size(), 17u);
  }
}

TEST(VerifyIdentity, WrongIndexFailsEarly) {
  const auto rep = verify_identity(kH3a, 7, 16);
  EXPECT_EQ(rep.outcome, Outcome::Fail);
  ASSERT_TRUE(rep.first_mismatch);
  EXPECT_LE(rep.first_mismatch->degree, 9);
  EXPECT_EQ(rep.table.size(), static_cast<std::size_t>(rep.first_mismatch->degree + 1));
  EXPECT_NE(rep.first_mismatch->expected, rep.first_mismatch->actual);
  // The mismatch is the smallest differing degree.
  for (std::size_t k = 0; k + 1 < rep.table.size(); ++k) EXPECT_EQ(rep.table[k].expected, rep.table[k].actual);
}

TEST(VerifyIdentity, DegreesZeroAndOneAlwaysAgree) {
  for (int s = 1; s <= 19; ++s) {
    const auto rep = verify_identity(kH3c, s, 2);
    ASSERT_GE(rep.table.size(), 2u);
    EXPECT_EQ(rep.table[0].expected, 1);
    EXPECT_EQ(rep.table[1].expected, 3);
    EXPECT_EQ(rep.table[1].actual, 3);
  }
}

TEST(VerifyIdentity, Preconditions) {
  EXPECT_THROW(verify_identity(builtin_finite('B', 3), 1, 10), ValidationError);
  EXPECT_THROW(verify_identity(builtin_finite('A', 2), 1, 10), ValidationError);
  EXPECT_THROW(verify_identity(kH3a, 1, 1), ValidationError);
  EXPECT_THROW(verify_identity(kH3a, 20, 10), ValidationError);
}

TEST(VerifyIdentity, PrefixProperty) {
  for (int n = 2; n <= 14; ++n) EXPECT_EQ(verify_identity(kH3c, 8, n).outcome, Outcome::Pass) << n;
}

TEST(FitDenominator, RecoversQ1) {
  const auto fitted = fit_denominator(kH3a, 20);
  ASSERT_TRUE(fitted);
  EXPECT_EQ(*fitted, (Polynomial{1, 0, 0, 0, -1, -1, -1, -1, -1}));
  EXPECT_EQ(*fitted, q_polynomial(1).q_expanded);
}

TEST(FitDenominator, NonCatalogFixture) {
  const auto fitted = fit_denominator(kH3x, 20);
  if (fitted) {
    EXPECT_EQ((*fitted)[0], 1);
    EXPECT_TRUE(Catalog::instance().lookup(*fitted).empty());
  }
  EXPECT_TRUE(match_catalog(kH3x, 20).empty());
}

TEST(FitDenominator, NoMatchWhenGrowthIsNotOfThatForm) {
  // A synthetic series 1/(1-3t) truncated: P_B3 * (1 - 3t) has degree 10, so
  // the window (9, N] cannot vanish.
  GrowthSeries g;
  std::uint64_t v = 1;
  for (int n = 0; n <= 14; ++n, v *= 3) g.q.push_back(v);
  EXPECT_EQ(fit_denominator_series(g), std::nullopt);
}

TEST(FitDenominator, Preconditions) {
  EXPECT_THROW(fit_denominator(builtin_finite('B', 3), 20), ValidationError);
  EXPECT_THROW(fit_denominator(kH3a, 11), ValidationError);
}

TEST(MatchCatalog, ReturnsWholeClass) {
  EXPECT_EQ(match_catalog(kH3c, 20), (std::vector<int>{8, 13, 14}));
  EXPECT_EQ(match_catalog(kH3a, 20), (std::vector<int>{1, 10}));
}

TEST(Discover, Report) {
  const auto rep = discover(kH3c, 14);
  EXPECT_EQ(rep.outcome, Outcome::Pass);
  EXPECT_EQ(rep.matches, (std::vector<int>{8, 13, 14}));
  for (const auto& row : rep.table) EXPECT_EQ(row.expected, row.actual);
  const auto miss = discover(kH3x, 14);
  EXPECT_EQ(miss.outcome, Outcome::NoMatch);
}

TEST(A3Reduction, ExceptionalSet) {
  std::set<int> none;
  for (int s = 1; s <= 19; ++s)
    if (!a3_reduction(s)) none.insert(s);
  EXPECT_EQ(none, (std::set<int>{8, 9, 13, 14}));
}

TEST(A3Reduction, R1AndIdentity) {
  EXPECT_EQ(a3_reduction(1), (Polynomial{1, 0, 0, -1, -1, -1}));
  for (int s = 1; s <= 19; ++s) {
    const auto& q = q_polynomial(s).q_expanded;
    const auto r = a3_reduction(s);
    EXPECT_EQ(r.has_value(), divisible_by_one_plus_t3(q)) << s;
    if (r) {
      EXPECT_EQ(poincare_b3() * *r, poincare_a3() * q) << s;
    }
  }
}

TEST(ReportJson, Shape) {
  const auto rep = verify_identity(kH3a, 7, 12);
  const auto j = report_to_json(rep);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"subject", "max_length", "outcome", "first_mismatch", "table"}));
  EXPECT_EQ(j["outcome"], "fail");
  EXPECT_EQ(j["subject"]["s"], 7);
  EXPECT_EQ(j["first_mismatch"]["degree"], rep.first_mismatch->degree);

  const auto d = report_to_json(discover(kH3x, 12));
  EXPECT_EQ(d["subject"]["s"], "discovery");
  EXPECT_EQ(d["outcome"], "no_match");
  EXPECT_TRUE(d["table"][0]["expected"].is_null());
}
