// Property suites over randomly generated inputs. Seeds are fixed so failures
// reproduce; the generators stay small enough that every case runs in
// milliseconds.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "kmweyl/kmweyl.hpp"

using namespace kmweyl;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed1234);
  return g;
}

Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng()); }

Polynomial random_poly(int max_degree = 6, Int mag = 9) {
  std::vector<Int> c(static_cast<std::size_t>(uniform(0, max_degree + 1)));
  for (auto& v : c) v = uniform(-mag, mag);
  return Polynomial(std::move(c));
}

// Random GCM of the given rank with off-diagonal entries in [-3, 0].
CartanMatrix random_gcm(int rank) {
  std::vector<std::vector<Int>> a(static_cast<std::size_t>(rank), std::vector<Int>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) {
    a[i][i] = 2;
    for (int j = i + 1; j < rank; ++j) {
      if (uniform(0, 3) == 0) continue;
      a[i][j] = -uniform(1, 3);
      a[j][i] = -uniform(1, 3);
    }
  }
  return CartanMatrix("random", a);
}

std::vector<CartanMatrix> orbit_test_matrices() {
  std::vector<CartanMatrix> ms = {builtin_finite('A', 3), builtin_finite('B', 3),
                                  CartanMatrix("G2", {{2, -1}, {-3, 2}})};
  for (auto& f : load_fixtures(std::string(KMWEYL_DATA_DIR) + "/rank3_hyperbolic.json").entries)
    ms.push_back(f.matrix);
  return ms;
}

}  // namespace

TEST(WeylProperties, ReflectionInvolution) {
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = random_gcm(static_cast<int>(uniform(1, 5)));
    WeightVector mu{std::vector<Int>(static_cast<std::size_t>(m.rank()))};
    for (auto& v : mu.coords) v = uniform(-1000, 1000);
    const int i = static_cast<int>(uniform(0, m.rank() - 1));
    EXPECT_EQ(reflect(reflect(mu, i, m), i, m), mu);
  }
}

TEST(WeylProperties, GammaIsNonnegativeIntegralUpToEight) {
  EnumerateOptions o;
  o.retain_levels = true;
  for (const auto& m : orbit_test_matrices()) {
    const auto orbit = enumerate_orbit(m, 8, o);
    for (std::size_t n = 0; n < orbit.levels.size(); ++n)
      for (const auto& mu : orbit.levels[n]) {
        const auto gamma = root_coordinates(mu, m);  // throws if negative or non-integral
        const Int sum = std::accumulate(gamma.coords.begin(), gamma.coords.end(), Int{0});
        EXPECT_EQ(sum == 0, n == 0) << m.name();
      }
  }
}

TEST(WeylProperties, LevelsAreDisjoint) {
  EnumerateOptions o;
  o.retain_levels = true;
  for (const auto& m : orbit_test_matrices()) {
    const auto orbit = enumerate_orbit(m, 10, o);
    std::set<WeightVector> seen;
    std::size_t total = 0;
    for (const auto& lvl : orbit.levels) {
      total += lvl.size();
      seen.insert(lvl.begin(), lvl.end());
    }
    EXPECT_EQ(seen.size(), total) << m.name();
  }
}

// Distinct orbit points give distinct gamma (gamma determines the element).
TEST(WeylProperties, GammaIsInjective) {
  EnumerateOptions o;
  o.retain_levels = true;
  for (const auto& m : orbit_test_matrices()) {
    const auto orbit = enumerate_orbit(m, 7, o);
    std::set<RootVector> gammas;
    std::size_t total = 0;
    for (const auto& lvl : orbit.levels)
      for (const auto& mu : lvl) {
        gammas.insert(root_coordinates(mu, m));
        ++total;
      }
    EXPECT_EQ(gammas.size(), total) << m.name();
  }
}

TEST(WeylProperties, OracleAgreementOnRandomMatrices) {
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_gcm(3);
    EXPECT_EQ(enumerate_levels(m, 7), enumerate_matrix_oracle(m, 7)) << format_cartan(m);
  }
}

TEST(WeylProperties, ThreadedMatchesSequentialOnRandomMatrices) {
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = random_gcm(3);
    EnumerateOptions o;
    o.threads = static_cast<unsigned>(uniform(2, 6));
    EXPECT_EQ(enumerate_levels(m, 12, o), enumerate_levels(m, 12)) << format_cartan(m);
  }
}

TEST(CartanProperties, ClassifyInvariantUnderRelabeling) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_gcm(static_cast<int>(uniform(2, 4)));
    std::vector<int> perm(static_cast<std::size_t>(m.rank()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng());
    EXPECT_EQ(classify(m.permuted(perm)), classify(m)) << format_cartan(m);
  }
}

TEST(CartanProperties, ParseFormatRoundTrip) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_gcm(static_cast<int>(uniform(1, 6)));
    EXPECT_EQ(parse_cartan(format_cartan(m)), m);
  }
}

TEST(SeriesProperties, RingLaws) {
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * Polynomial{1}, a);
    EXPECT_EQ(a + Polynomial{}, a);
  }
}

TEST(SeriesProperties, DivexactInvertsMultiplication) {
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_poly(), b = random_poly();
    if (b.is_zero()) continue;
    EXPECT_EQ(poly_divexact(a * b, b), a);
  }
}

TEST(SeriesProperties, SeriesDivConvolvesBack) {
  for (int trial = 0; trial < 300; ++trial) {
    const auto num = random_poly(8, 5);
    auto den = random_poly(5, 3);
    den = den + Polynomial::constant((den[0] >= 0 ? 1 : -1) - den[0]);  // constant term +-1
    const std::size_t order = 12;
    const auto c = series_div(num, den, order);
    const auto back = Polynomial(c) * den;
    for (std::size_t k = 0; k <= order; ++k) EXPECT_EQ(back[k], num[k]);
  }
}

TEST(SeriesProperties, PolynomialTextRoundTrip) {
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = random_poly(10, 1000);
    EXPECT_EQ(parse_polynomial(format_polynomial(p)), p);
    EXPECT_EQ(parse_polynomial(format_polynomial(p, PolyStyle::Compact)), p);
  }
}

TEST(SeriesProperties, FactoredTextRoundTrip) {
  for (int trial = 0; trial < 200; ++trial) {
    FactoredPolynomial f;
    const auto n = uniform(0, 4);
    for (Int k = 0; k < n; ++k) {
      auto p = random_poly(4, 4);
      if (p.is_zero()) p = Polynomial{1};
      f.factors.push_back({p, static_cast<unsigned>(uniform(1, 3))});
    }
    if (f.factors.empty()) continue;  // formats as "1", which is not a factored form
    const auto back = parse_factored(format_factored(f));
    EXPECT_EQ(back, f);
    EXPECT_EQ(back.expand(), f.expand());
  }
}
