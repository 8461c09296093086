#pragma once

// Checks of the rank-3 identity  growth(t) = P_B3(t) / Q_s(t),  discovery of
// the denominator from an enumerated growth series, and the A_3-numerator
// variant P_A3(t) / R_s(t).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kmweyl/cartan.hpp"
#include "kmweyl/catalog.hpp"
#include "kmweyl/polynomial.hpp"
#include "kmweyl/series.hpp"
#include "kmweyl/weyl.hpp"

namespace kmweyl {

// Numerator degree bound for fitted denominators: deg P_B3.
inline constexpr int kDenominatorDegreeBound = 9;
inline constexpr int kMinFitOrder = 12;
inline constexpr int kDefaultOrder = 20;

inline const Polynomial& poincare_b3() {
  static const Polynomial p = poincare_finite(builtin_finite('B', 3));
  return p;
}

inline const Polynomial& poincare_a3() {
  static const Polynomial p = poincare_finite(builtin_finite('A', 3));
  return p;
}

enum class Outcome { Pass, Fail, NoMatch };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::NoMatch: return "no_match";
  }
  return "?";
}

struct CoefficientRow {
  int degree;
  std::int64_t expected;  // from P_B3 / Q_s
  std::int64_t actual;    // enumerated q(n)
};

struct VerificationReport {
  std::string matrix_name;
  std::optional<int> s;  // empty for discovery
  int max_length = 0;
  Outcome outcome = Outcome::Pass;
  std::optional<CoefficientRow> first_mismatch;
  // Every degree for a pass; degrees up to and including the first mismatch for a fail.
  std::vector<CoefficientRow> table;
  // Discovery only.
  std::optional<Polynomial> fitted;
  std::vector<int> matches;
};

namespace detail {

inline void require_rank3_hyperbolic(const CartanMatrix& m) {
  if (m.rank() != 3) throw ValidationError("matrix '" + m.name() + "' has rank " + std::to_string(m.rank()) + ", expected 3");
  const auto cls = classify(m);
  if (!cls.hyperbolic)
    throw ValidationError("matrix '" + m.name() + "' is not hyperbolic (" + std::string(to_string(cls.kind)) + ")");
}

inline std::vector<std::int64_t> as_signed(const GrowthSeries& g) {
  std::vector<std::int64_t> out;
  out.reserve(g.q.size());
  for (auto v : g.q) {
    if (v > static_cast<std::uint64_t>(INT64_MAX)) throw OverflowError("growth coefficient exceeds int64");
    out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

}  // namespace detail

// Compares an already enumerated growth series with P_B3 / Q_s.
inline VerificationReport verify_series(const GrowthSeries& growth, int s, std::string name = "unnamed") {
  const auto& entry = q_polynomial(s);
  const auto n = static_cast<std::size_t>(growth.max_length());
  const auto expected = series_div(poincare_b3(), entry.q_expanded, n);
  const auto actual = detail::as_signed(growth);
  VerificationReport rep;
  rep.matrix_name = std::move(name);
  rep.s = s;
  rep.max_length = growth.max_length();
  for (std::size_t k = 0; k <= n; ++k) {
    const CoefficientRow row{static_cast<int>(k), expected[k], actual[k]};
    rep.table.push_back(row);
    if (row.expected != row.actual) {
      rep.outcome = Outcome::Fail;
      rep.first_mismatch = row;
      break;
    }
  }
  return rep;
}

inline VerificationReport verify_identity(const CartanMatrix& m, int s, int max_length,
                                          const EnumerateOptions& opts = {}) {
  detail::require_rank3_hyperbolic(m);
  if (max_length < 2) throw ValidationError("verification order must be >= 2");
  q_polynomial(s);  // range check before the expensive part
  return verify_series(enumerate_levels(m, max_length, opts), s, m.name());
}

// P_B3 / growth, truncated at the series' order. Returns the surviving
// polynomial when every coefficient above degree 9 vanishes.
inline std::optional<Polynomial> fit_denominator_series(const GrowthSeries& growth) {
  if (growth.max_length() < kMinFitOrder)
    throw ValidationError("denominator fitting needs order >= " + std::to_string(kMinFitOrder));
  const auto q = detail::as_signed(growth);
  if (q.front() != 1) throw ConsistencyError("growth series must start with q(0) = 1");
  const auto c = series_div(poincare_b3(), q, static_cast<std::size_t>(growth.max_length()));
  for (std::size_t k = kDenominatorDegreeBound + 1; k < c.size(); ++k)
    if (c[k] != 0) return std::nullopt;
  return Polynomial(std::vector<std::int64_t>(c.begin(), c.begin() + kDenominatorDegreeBound + 1));
}

inline std::optional<Polynomial> fit_denominator(const CartanMatrix& m, int max_length,
                                                 const EnumerateOptions& opts = {}) {
  detail::require_rank3_hyperbolic(m);
  return fit_denominator_series(enumerate_levels(m, max_length, opts));
}

inline std::vector<int> match_catalog(const CartanMatrix& m, int max_length, const EnumerateOptions& opts = {}) {
  const auto fitted = fit_denominator(m, max_length, opts);
  return fitted ? Catalog::instance().lookup(*fitted) : std::vector<int>{};
}

// Fit plus catalog lookup, packaged as a report. Outcome is Pass when the
// fitted polynomial is one of the catalog expansions.
inline VerificationReport discover(const CartanMatrix& m, int max_length, const EnumerateOptions& opts = {}) {
  detail::require_rank3_hyperbolic(m);
  const auto growth = enumerate_levels(m, max_length, opts);
  VerificationReport rep;
  rep.matrix_name = m.name();
  rep.max_length = max_length;
  rep.fitted = fit_denominator_series(growth);
  if (rep.fitted) rep.matches = Catalog::instance().lookup(*rep.fitted);
  rep.outcome = rep.matches.empty() ? Outcome::NoMatch : Outcome::Pass;
  const auto q = detail::as_signed(growth);
  std::vector<std::int64_t> expected;
  if (!rep.matches.empty())
    expected = series_div(poincare_b3(), q_polynomial(rep.matches.front()).q_expanded, q.size() - 1);
  for (std::size_t k = 0; k < q.size(); ++k)
    rep.table.push_back({static_cast<int>(k), expected.empty() ? 0 : expected[k], q[k]});
  return rep;
}

// R_s = P_A3 * Q_s / P_B3 when that division is exact.
inline std::optional<Polynomial> a3_reduction(int s) {
  return divexact(poincare_a3() * q_polynomial(s).q_expanded, poincare_b3());
}

// ---------------------------------------------------------------------------
// JSON: {"subject":…, "outcome":…, "first_mismatch":…, "table":[…]}

inline nlohmann::ordered_json report_to_json(const VerificationReport& rep) {
  using nlohmann::ordered_json;
  ordered_json j;
  ordered_json subject;
  subject["name"] = rep.matrix_name;
  if (rep.s)
    subject["s"] = *rep.s;
  else
    subject["s"] = "discovery";
  j["subject"] = subject;
  j["max_length"] = rep.max_length;
  j["outcome"] = to_string(rep.outcome);
  if (rep.first_mismatch)
    j["first_mismatch"] = {{"degree", rep.first_mismatch->degree},
                           {"expected", rep.first_mismatch->expected},
                           {"actual", rep.first_mismatch->actual}};
  else
    j["first_mismatch"] = nullptr;
  if (!rep.s) {
    j["fitted"] = rep.fitted ? ordered_json(format_polynomial(*rep.fitted)) : ordered_json(nullptr);
    j["matches"] = rep.matches;
  }
  // A discovery without a catalog match has no expected column.
  const bool have_expected = rep.s.has_value() || !rep.matches.empty();
  ordered_json table = ordered_json::array();
  for (const auto& row : rep.table)
    table.push_back({{"degree", row.degree},
                     {"expected", have_expected ? ordered_json(row.expected) : ordered_json(nullptr)},
                     {"actual", row.actual}});
  j["table"] = table;
  return j;
}

}  // namespace kmweyl
