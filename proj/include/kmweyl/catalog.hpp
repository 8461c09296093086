#pragma once

// The nineteen rank-3 denominators Q_s, s = 1..19, such that the growth series
// of the s-th rank-3 hyperbolic Weyl group equals P_B3(t) / Q_s(t), plus
// loading of user-supplied candidate Cartan matrices.

#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kmweyl/cartan.hpp"
#include "kmweyl/error.hpp"
#include "kmweyl/polynomial.hpp"

namespace kmweyl {

inline constexpr int kCatalogSize = 19;

struct CatalogEntry {
  int s = 0;
  FactoredPolynomial q_factored;
  Polynomial q_expanded;
  int class_id = 0;  // 0-based index into duplicate_classes()
};

namespace detail {

// Factored forms, one per s, in the polynomial grammar.
inline constexpr std::array<std::string_view, kCatalogSize> kFactoredQ = {
    "(1+t)(1+t^2)(1-t+t^2)(1-t^2-t^3)",
    "(1+t)(1-t+t^2)(1+t+t^2)(1-t-t^3)",
    "(1+t)(1+t^2)(1-t+t^2)(1-t-t^2)(1+t+t^2)",
    "(1+t)^2(1+t^2)(1-t+t^2)(1-t-t^2-t^3)",
    "(1+t)^2(1+t^2)(1-t+t^2)(1-t-t^2)",
    "(1+t)(1-t+t^2)(1+t+t^2)(1-t-t^2-t^3)",
    "(1+t)^2(1-2t)(1+t^2)(1-t+t^2)(1+t+t^2)",
    "(1+t)(1+t^2)(1-t-t^3-t^5)",
    "(1+t)(1+t^2)(1-t-t^2-t^3-t^4-t^5)",
    "(1+t)(1+t^2)(1-t+t^2)(1-t^2-t^3)",
    "(1+t)(1-t+t^2)(1+t+t^2)(1-t-t^3)",
    "(1+t)(1-t+t^2)(1+t+t^2)(1-t-t^3)",
    "(1+t)(1+t^2)(1-t-t^3-t^5)",
    "(1+t)(1+t^2)(1-t-t^3-t^5)",
    "(1+t)(1+t^2)(1-t+t^2)(1-t-t^2)(1+t+t^2)",
    "(1+t)^2(1+t^2)(1-t+t^2)(1-t-t^2-t^3)",
    "(1+t)(1-t+t^2)(1+t+t^2)(1-t-t^2-t^3)",
    "(1+t)(1+t^2)(1-t+t^2)(1-t-t^2)(1+t+t^2)",
    "(1+t)^2(1-2t)(1+t^2)(1-t+t^2)(1+t+t^2)",
};

}  // namespace detail

class Catalog {
 public:
  static const Catalog& instance() {
    static const Catalog c;
    return c;
  }

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }

  const CatalogEntry& entry(int s) const {
    if (s < 1 || s > kCatalogSize) throw ValidationError("catalog index s=" + std::to_string(s) + " outside 1..19");
    return entries_[static_cast<std::size_t>(s - 1)];
  }

  // Classes of s-indices with identical expanded Q_s, each sorted, ordered by smallest member.
  const std::vector<std::vector<int>>& classes() const noexcept { return classes_; }

  // Every s whose expansion equals `q`; empty or one whole class.
  std::vector<int> lookup(const Polynomial& q) const {
    for (const auto& cls : classes_)
      if (entry(cls.front()).q_expanded == q) return cls;
    return {};
  }

 private:
  Catalog() {
    for (int s = 1; s <= kCatalogSize; ++s) {
      CatalogEntry e;
      e.s = s;
      e.q_factored = parse_factored(detail::kFactoredQ[static_cast<std::size_t>(s - 1)]);
      e.q_expanded = e.q_factored.expand();
      e.class_id = -1;
      for (std::size_t c = 0; c < classes_.size(); ++c)
        if (entries_[static_cast<std::size_t>(classes_[c].front() - 1)].q_expanded == e.q_expanded) {
          e.class_id = static_cast<int>(c);
          classes_[c].push_back(s);
        }
      if (e.class_id < 0) {
        e.class_id = static_cast<int>(classes_.size());
        classes_.push_back({s});
      }
      entries_.push_back(std::move(e));
    }
  }

  std::vector<CatalogEntry> entries_;
  std::vector<std::vector<int>> classes_;
};

inline const CatalogEntry& q_polynomial(int s) { return Catalog::instance().entry(s); }
inline const std::vector<std::vector<int>>& duplicate_classes() { return Catalog::instance().classes(); }

// ---------------------------------------------------------------------------
// Fixtures: a JSON array of Cartan documents, each optionally carrying
// "claimed_s" and "source".

struct Fixture {
  CartanMatrix matrix;
  std::optional<int> claimed_s;
  std::string source;
};

struct RejectedFixture {
  std::size_t index;  // position in the file, 0-based
  std::string name;
  std::string reason;
};

struct FixtureSet {
  std::vector<Fixture> entries;
  std::vector<RejectedFixture> rejected;
};

// Malformed documents and invalid GCMs throw; valid matrices that are not
// rank-3 hyperbolic are listed in `rejected`.
inline FixtureSet parse_fixtures(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? ParseError::npos : e.byte - 1);
  }
  if (!doc.is_array()) throw ParseError("fixtures document must be a JSON array");
  FixtureSet out;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const auto& item = doc[k];
    const std::string name = item.is_object() && item.contains("name") && item["name"].is_string()
                                 ? item["name"].get<std::string>()
                                 : "unnamed";
    std::optional<int> claimed;
    std::string source;
    if (item.is_object() && item.contains("claimed_s")) {
      if (!item["claimed_s"].is_number_integer()) throw ParseError("fixture " + std::to_string(k) + ": claimed_s must be an integer");
      claimed = item["claimed_s"].get<int>();
      if (*claimed < 1 || *claimed > kCatalogSize)
        throw ValidationError("fixture " + std::to_string(k) + ": claimed_s outside 1..19");
    }
    if (item.is_object() && item.contains("source")) {
      if (!item["source"].is_string()) throw ParseError("fixture " + std::to_string(k) + ": source must be a string");
      source = item["source"].get<std::string>();
    }
    CartanMatrix m = cartan_from_json(item);
    if (m.rank() != 3) {
      out.rejected.push_back({k, name, "rank " + std::to_string(m.rank()) + ", expected 3"});
      continue;
    }
    const auto cls = classify(m);
    if (!cls.hyperbolic) {
      out.rejected.push_back({k, name, std::string("not hyperbolic (") + std::string(to_string(cls.kind)) + ")"});
      continue;
    }
    out.entries.push_back({std::move(m), claimed, std::move(source)});
  }
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FixtureSet load_fixtures(const std::string& path) { return parse_fixtures(read_text_file(path)); }

}  // namespace kmweyl
