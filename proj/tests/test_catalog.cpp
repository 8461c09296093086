#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "kmweyl/catalog.hpp"
#include "kmweyl/series.hpp"

using namespace kmweyl;

namespace {
using Coeffs = std::vector<std::int64_t>;
}

TEST(Catalog, EntryCount) { EXPECT_EQ(Catalog::instance().entries().size(), 19u); }

TEST(Catalog, Q1Factors) {
  const auto& e = q_polynomial(1);
  ASSERT_EQ(e.q_factored.factors.size(), 4u);
  EXPECT_EQ(e.q_factored.factors[0].poly, parse_polynomial("1+t"));
  EXPECT_EQ(e.q_factored.factors[1].poly, parse_polynomial("1+t^2"));
  EXPECT_EQ(e.q_factored.factors[2].poly, parse_polynomial("1-t+t^2"));
  EXPECT_EQ(e.q_factored.factors[3].poly, parse_polynomial("1-t^2-t^3"));
  EXPECT_EQ(format_factored(e.q_factored), "(1+t)(1+t^2)(1-t+t^2)(1-t^2-t^3)");
}

TEST(Catalog, Q19HasLinearFactor) {
  const auto& f = q_polynomial(19).q_factored.factors;
  EXPECT_TRUE(std::any_of(f.begin(), f.end(), [](const auto& x) { return x.poly == Polynomial{1, -2}; }));
  EXPECT_EQ(f.front().multiplicity, 2u);
}

TEST(Catalog, OutOfRange) {
  EXPECT_THROW(q_polynomial(0), ValidationError);
  EXPECT_THROW(q_polynomial(20), ValidationError);
}

// Expansions frozen from an independent symbolic expansion of the factored forms.
TEST(Catalog, ExpansionsFrozen) {
  const std::vector<std::pair<int, Coeffs>> expected = {
      {1, {1, 0, 0, 0, -1, -1, -1, -1, -1}},     {2, {1, 0, 0, -1, -1, -1, -2, -1, -1}},
      {3, {1, 0, 0, -1, -2, -2, -3, -2, -2, -1}}, {4, {1, 0, -1, -1, -3, -3, -3, -3, -2, -1}},
      {5, {1, 0, -1, 0, -2, -2, -1, -2, -1}},    {6, {1, 0, -1, -2, -2, -2, -3, -2, -1}},
      {7, {1, 0, -1, -2, -4, -4, -5, -4, -3, -2}}, {8, {1, 0, 0, -1, -2, -2, -2, -1, -1}},
      {9, {1, 0, -1, -2, -4, -4, -3, -2, -1}},
  };
  for (const auto& [s, c] : expected) EXPECT_EQ(q_polynomial(s).q_expanded.coeffs(), c) << "s=" << s;
}

TEST(Catalog, ExpansionInvariants) {
  for (const auto& e : Catalog::instance().entries()) {
    EXPECT_EQ(e.q_expanded, expand_factors(e.q_factored)) << e.s;
    EXPECT_EQ(e.q_expanded[0], 1) << e.s;
    EXPECT_EQ(e.q_expanded[1], 0) << e.s;
    EXPECT_GE(e.q_expanded.degree(), 5) << e.s;
    EXPECT_LE(e.q_expanded.degree(), 9) << e.s;
  }
}

TEST(Catalog, DuplicateClasses) {
  const std::vector<std::vector<int>> expected = {{1, 10}, {2, 11, 12}, {3, 15, 18}, {4, 16}, {5},
                                                  {6, 17}, {7, 19},     {8, 13, 14}, {9}};
  EXPECT_EQ(duplicate_classes(), expected);
}

// Brute force: pairwise equality of expansions is an equivalence whose classes
// match duplicate_classes() and the class_id field.
TEST(Catalog, ClassesArePairwiseEquality) {
  const auto& cat = Catalog::instance();
  std::set<int> covered;
  for (const auto& cls : cat.classes())
    for (int s : cls) EXPECT_TRUE(covered.insert(s).second) << s << " in two classes";
  EXPECT_EQ(covered.size(), 19u);
  for (int a = 1; a <= 19; ++a)
    for (int b = 1; b <= 19; ++b)
      EXPECT_EQ(q_polynomial(a).q_expanded == q_polynomial(b).q_expanded,
                q_polynomial(a).class_id == q_polynomial(b).class_id)
          << a << " " << b;
}

TEST(Catalog, Lookup) {
  EXPECT_EQ(Catalog::instance().lookup(q_polynomial(13).q_expanded), (std::vector<int>{8, 13, 14}));
  EXPECT_TRUE(Catalog::instance().lookup(Polynomial{1, -1}).empty());
}

TEST(Fixtures, AcceptsHyperbolic) {
  const auto fs = parse_fixtures(
      R"([{"name": "h", "rank": 3, "matrix": [[2,-1,0],[-1,2,-2],[0,-2,2]], "claimed_s": 4, "source": "test"}])");
  ASSERT_EQ(fs.entries.size(), 1u);
  EXPECT_TRUE(fs.rejected.empty());
  EXPECT_EQ(fs.entries[0].claimed_s, 4);
  EXPECT_EQ(fs.entries[0].source, "test");
}

TEST(Fixtures, RejectsNonHyperbolic) {
  const auto fs = parse_fixtures(R"([{"name": "A3", "rank": 3, "matrix": [[2,-1,0],[-1,2,-1],[0,-1,2]]},
                                     {"name": "A2", "rank": 2, "matrix": [[2,-1],[-1,2]]}])");
  EXPECT_TRUE(fs.entries.empty());
  ASSERT_EQ(fs.rejected.size(), 2u);
  EXPECT_EQ(fs.rejected[0].name, "A3");
  EXPECT_NE(fs.rejected[0].reason.find("finite"), std::string::npos);
  EXPECT_EQ(fs.rejected[1].index, 1u);
}

TEST(Fixtures, EmptyList) {
  const auto fs = parse_fixtures("[]");
  EXPECT_TRUE(fs.entries.empty());
  EXPECT_TRUE(fs.rejected.empty());
}

TEST(Fixtures, Errors) {
  EXPECT_THROW(parse_fixtures("{}"), ParseError);
  EXPECT_THROW(parse_fixtures("[{"), ParseError);
  EXPECT_THROW(parse_fixtures(R"([{"rank": 2, "matrix": [[2,-1],[0,2]]}])"), ValidationError);
  EXPECT_THROW(parse_fixtures(R"([{"rank": 1, "matrix": [[2]], "claimed_s": 20}])"), ValidationError);
  EXPECT_THROW(parse_fixtures(R"([{"rank": 1, "matrix": [[2]], "claimed_s": "1"}])"), ParseError);
  EXPECT_THROW(load_fixtures("/nonexistent/fixtures.json"), IoError);
}

TEST(Fixtures, BundledFileIsAllHyperbolic) {
  const auto fs = load_fixtures(std::string(KMWEYL_DATA_DIR) + "/rank3_hyperbolic.json");
  EXPECT_EQ(fs.entries.size(), 10u);
  EXPECT_TRUE(fs.rejected.empty());
}
