#pragma once

// Generalized Cartan matrices: construction, validation, JSON I/O and
// finite/affine/indefinite classification.
//
// Convention used throughout the library: a(i, j) = <alpha_j, alpha_i^vee>,
// so column j holds the fundamental-weight coordinates of the simple root
// alpha_j. A simple reflection then acts on weight coordinates as
// mu -> mu - mu_i * column_i.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kmweyl/checked.hpp"
#include "kmweyl/error.hpp"

namespace kmweyl {

using Int = std::int64_t;

class CartanMatrix {
 public:
  // Validates the GCM axioms; throws ValidationError naming the offending entry (1-based).
  CartanMatrix(std::string name, const std::vector<std::vector<Int>>& rows) : name_(std::move(name)) {
    rank_ = static_cast<int>(rows.size());
    if (rank_ < 1) throw ValidationError("Cartan matrix must have rank >= 1");
    entries_.reserve(rows.size() * rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size())
        throw ValidationError("Cartan matrix row " + std::to_string(i + 1) + " has " +
                              std::to_string(rows[i].size()) + " entries, expected " +
                              std::to_string(rows.size()));
      entries_.insert(entries_.end(), rows[i].begin(), rows[i].end());
    }
    validate();
  }

  const std::string& name() const noexcept { return name_; }
  int rank() const noexcept { return rank_; }

  // 0-based access.
  Int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * rank_ + j)]; }

  std::vector<std::vector<Int>> rows() const {
    std::vector<std::vector<Int>> out(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i)
      out[static_cast<std::size_t>(i)].assign(entries_.begin() + i * rank_, entries_.begin() + (i + 1) * rank_);
    return out;
  }

  // Weight coordinates of simple root alpha_j.
  std::vector<Int> column(int j) const {
    std::vector<Int> c(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, j);
    return c;
  }

  // Same matrix with nodes relabeled: new node k is old node perm[k].
  CartanMatrix permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != rank_) throw ValidationError("permutation size does not match rank");
    std::vector<std::vector<Int>> r(static_cast<std::size_t>(rank_), std::vector<Int>(static_cast<std::size_t>(rank_)));
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*this)(perm[i], perm[j]);
    return CartanMatrix(name_, r);
  }

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) {
    return a.rank_ == b.rank_ && a.entries_ == b.entries_ && a.name_ == b.name_;
  }

 private:
  void validate() const {
    for (int i = 0; i < rank_; ++i) {
      for (int j = 0; j < rank_; ++j) {
        const Int a = (*this)(i, j);
        const std::string at = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        if (i == j) {
          if (a != 2) throw ValidationError("diagonal entry at " + at + " is " + std::to_string(a) + ", expected 2");
          continue;
        }
        if (a > 0) throw ValidationError("off-diagonal entry at " + at + " is positive");
        if ((a == 0) != ((*this)(j, i) == 0))
          throw ValidationError("zero pattern not symmetric: entry " + at + " is " + std::to_string(a) +
                                " but entry (" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ") is " +
                                std::to_string((*this)(j, i)));
      }
    }
  }

  std::string name_;
  int rank_ = 0;
  std::vector<Int> entries_;
};

// ---------------------------------------------------------------------------
// JSON document format: {"name": <string, optional>, "rank": <int>, "matrix": [[int,...],...]}

inline CartanMatrix cartan_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("Cartan document must be a JSON object");
  if (!doc.contains("rank") || !doc["rank"].is_number_integer()) throw ParseError("missing integer field \"rank\"");
  if (!doc.contains("matrix") || !doc["matrix"].is_array()) throw ParseError("missing array field \"matrix\"");
  std::string name = "unnamed";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("field \"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  const auto rank = doc["rank"].get<Int>();
  if (rank < 1) throw ValidationError("rank must be >= 1");
  const auto& mat = doc["matrix"];
  if (static_cast<Int>(mat.size()) != rank)
    throw ValidationError("matrix has " + std::to_string(mat.size()) + " rows, rank is " + std::to_string(rank));
  std::vector<std::vector<Int>> rows;
  for (const auto& row : mat) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    std::vector<Int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("matrix entries must be integers");
      r.push_back(v.get<Int>());
    }
    rows.push_back(std::move(r));
  }
  return CartanMatrix(std::move(name), rows);
}

inline CartanMatrix parse_cartan(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? ParseError::npos : e.byte - 1);
  }
  return cartan_from_json(doc);
}

inline nlohmann::ordered_json cartan_to_json(const CartanMatrix& m) {
  nlohmann::ordered_json doc;
  doc["name"] = m.name();
  doc["rank"] = m.rank();
  doc["matrix"] = m.rows();
  return doc;
}

inline std::string format_cartan(const CartanMatrix& m) { return cartan_to_json(m).dump(); }

// ---------------------------------------------------------------------------
// Classification

enum class AlgebraKind { Finite, Affine, Indefinite };

struct AlgebraClass {
  AlgebraKind kind = AlgebraKind::Indefinite;
  bool hyperbolic = false;
  friend bool operator==(const AlgebraClass&, const AlgebraClass&) = default;
};

inline std::string_view to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::Finite: return "finite";
    case AlgebraKind::Affine: return "affine";
    case AlgebraKind::Indefinite: return "indefinite";
  }
  return "?";
}

namespace detail {

using NodeMask = std::uint32_t;
inline constexpr int kMaxClassifyRank = 20;

inline int popcount(NodeMask m) { return __builtin_popcount(m); }

// Exact determinant of a row-major n x n integer matrix (Bareiss elimination).
inline Int bareiss_det(std::vector<Int> a, std::size_t n) {
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const Int num = checked_sub(checked_mul(a[i * n + j], a[k * n + k]), checked_mul(a[i * n + k], a[k * n + j]));
        a[i * n + j] = num / prev;
      }
    }
    prev = a[k * n + k];
  }
  return checked_mul(sign, a[n * n - 1]);
}

inline Int principal_det(const CartanMatrix& m, NodeMask mask) {
  std::vector<int> nodes;
  for (int i = 0; i < m.rank(); ++i)
    if (mask & (NodeMask{1} << i)) nodes.push_back(i);
  const auto n = nodes.size();
  std::vector<Int> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(nodes[i], nodes[j]);
  return bareiss_det(std::move(a), n);
}

inline bool is_connected(const CartanMatrix& m, NodeMask mask) {
  if (mask == 0) return false;
  NodeMask seen = mask & (~mask + 1);
  NodeMask frontier = seen;
  while (frontier) {
    NodeMask next = 0;
    for (int i = 0; i < m.rank(); ++i) {
      if (!(frontier & (NodeMask{1} << i))) continue;
      for (int j = 0; j < m.rank(); ++j)
        if ((mask & (NodeMask{1} << j)) && !(seen & (NodeMask{1} << j)) && m(i, j) != 0) next |= NodeMask{1} << j;
    }
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

class Classifier {
 public:
  explicit Classifier(const CartanMatrix& m) : m_(m) {
    if (m.rank() > kMaxClassifyRank)
      throw ValidationError("classification supports rank <= " + std::to_string(kMaxClassifyRank));
  }

  // Finite iff det > 0 and every proper principal submatrix is finite; it is
  // enough to recurse on the maximal proper subsets.
  bool finite(NodeMask mask) {
    if (mask == 0) return true;
    if (auto it = finite_.find(mask); it != finite_.end()) return it->second;
    bool ok = det(mask) > 0;
    for (int i = 0; ok && i < m_.rank(); ++i)
      if (mask & (NodeMask{1} << i)) ok = finite(mask & ~(NodeMask{1} << i));
    finite_.emplace(mask, ok);
    return ok;
  }

  AlgebraKind kind(NodeMask mask) {
    if (finite(mask)) return AlgebraKind::Finite;
    if (det(mask) == 0 && all_proper_connected(mask, [&](NodeMask s) { return finite(s); })) return AlgebraKind::Affine;
    return AlgebraKind::Indefinite;
  }

  template <class Pred>
  bool all_proper_connected(NodeMask mask, Pred pred) {
    for (NodeMask sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask)
      if (is_connected(m_, sub) && !pred(sub)) return false;
    return true;
  }

  Int det(NodeMask mask) {
    if (auto it = det_.find(mask); it != det_.end()) return it->second;
    const Int d = principal_det(m_, mask);
    det_.emplace(mask, d);
    return d;
  }

 private:
  const CartanMatrix& m_;
  std::map<NodeMask, bool> finite_;
  std::map<NodeMask, Int> det_;
};

inline NodeMask full_mask(int rank) { return rank >= 32 ? ~NodeMask{0} : (NodeMask{1} << rank) - 1; }

}  // namespace detail

inline Int determinant(const CartanMatrix& m) {
  if (m.rank() > detail::kMaxClassifyRank) throw ValidationError("rank too large");
  return detail::principal_det(m, detail::full_mask(m.rank()));
}

inline bool is_connected(const CartanMatrix& m) {
  if (m.rank() > detail::kMaxClassifyRank) throw ValidationError("rank too large");
  return detail::is_connected(m, detail::full_mask(m.rank()));
}

inline AlgebraClass classify(const CartanMatrix& m) {
  detail::Classifier c(m);
  const auto all = detail::full_mask(m.rank());
  AlgebraClass out;
  out.kind = c.kind(all);
  // Hyperbolicity is only meaningful for an indecomposable matrix.
  if (out.kind == AlgebraKind::Indefinite && detail::is_connected(m, all))
    out.hyperbolic = c.all_proper_connected(all, [&](detail::NodeMask s) { return c.kind(s) != AlgebraKind::Indefinite; });
  return out;
}

// ---------------------------------------------------------------------------
// Finite types

// B_n puts the double bond at the end of the path with a(n-1, n) = -2; C_n is the transpose.
inline CartanMatrix builtin_finite(char family, int rank) {
  const std::string label = std::string(1, family) + "_" + std::to_string(rank);
  const int min_rank = family == 'A' ? 1 : family == 'D' ? 4 : 2;
  if ((family != 'A' && family != 'B' && family != 'C' && family != 'D') || rank < min_rank || rank > 64)
    throw ValidationError("unsupported finite type " + label);
  const auto n = static_cast<std::size_t>(rank);
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  const std::size_t path = family == 'D' ? n - 1 : n;
  for (std::size_t i = 0; i + 1 < path; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  if (family == 'B') a[n - 2][n - 1] = -2;
  if (family == 'C') a[n - 1][n - 2] = -2;
  if (family == 'D') a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
  return CartanMatrix(label, a);
}

struct FiniteComponent {
  char family;  // A, B (covers C: same Weyl group), D, E, F, G
  int rank;
  friend bool operator==(const FiniteComponent&, const FiniteComponent&) = default;
};

// Decomposes a finite-type matrix into its Dynkin components, sorted.
// Throws ValidationError when the matrix is not of finite type.
inline std::vector<FiniteComponent> finite_components(const CartanMatrix& m) {
  if (classify(m).kind != AlgebraKind::Finite) throw ValidationError("matrix '" + m.name() + "' is not of finite type");
  const int r = m.rank();
  std::vector<int> comp(static_cast<std::size_t>(r), -1);
  std::vector<FiniteComponent> out;
  for (int start = 0; start < r; ++start) {
    if (comp[static_cast<std::size_t>(start)] != -1) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> nodes{start};
    comp[static_cast<std::size_t>(start)] = id;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (int j = 0; j < r; ++j)
        if (m(nodes[k], j) != 0 && comp[static_cast<std::size_t>(j)] == -1) {
          comp[static_cast<std::size_t>(j)] = id;
          nodes.push_back(j);
        }
    const int n = static_cast<int>(nodes.size());
    int max_bond = 0, branch = -1;
    std::vector<int> degree(static_cast<std::size_t>(r), 0);
    for (int a : nodes)
      for (int b : nodes)
        if (a != b && m(a, b) != 0) {
          ++degree[static_cast<std::size_t>(a)];
          max_bond = std::max<int>(max_bond, static_cast<int>(m(a, b) * m(b, a)));
        }
    for (int a : nodes)
      if (degree[static_cast<std::size_t>(a)] >= 3) branch = a;
    if (max_bond == 3) {
      out.push_back({'G', 2});
    } else if (max_bond == 2) {
      // F_4 has its double bond in the middle of the path; B_n/C_n at an end.
      bool end_bond = false;
      for (int a : nodes)
        for (int b : nodes)
          if (a != b && m(a, b) * m(b, a) == 2 &&
              (degree[static_cast<std::size_t>(a)] == 1 || degree[static_cast<std::size_t>(b)] == 1))
            end_bond = true;
      out.push_back(end_bond ? FiniteComponent{'B', n} : FiniteComponent{'F', 4});
    } else if (branch < 0) {
      out.push_back({'A', n});
    } else {
      // Arm lengths from the branch node decide D_n versus E_6/7/8.
      std::vector<int> arms;
      for (int nb : nodes) {
        if (nb == branch || m(branch, nb) == 0) continue;
        int len = 1, prev = branch, cur = nb;
        for (;;) {
          int next = -1;
          for (int x : nodes)
            if (x != prev && x != cur && m(cur, x) != 0) next = x;
          if (next < 0) break;
          prev = cur;
          cur = next;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      out.push_back(arms[1] == 1 ? FiniteComponent{'D', n} : FiniteComponent{'E', n});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.family != b.family ? a.family < b.family : a.rank < b.rank;
  });
  return out;
}

}  // namespace kmweyl
