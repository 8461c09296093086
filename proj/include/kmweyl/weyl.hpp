#pragma once

// Level-by-level enumeration of a Weyl group through the orbit of the Weyl
// vector rho. Each element w is identified by the orbit point w(rho), whose
// stabilizer is trivial, so counting distinct orbit points of length n counts
// the group elements of length n.
//
// Level n+1 is produced from level n by applying s_i only where coordinate i
// of the point is positive; that ascent condition raises the length by exactly
// one, so duplicates can only occur inside the level being built.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "kmweyl/cartan.hpp"
#include "kmweyl/checked.hpp"
#include "kmweyl/error.hpp"

namespace kmweyl {

// Coordinates in the fundamental-weight basis.
struct WeightVector {
  std::vector<Int> coords;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

// Coordinates in the simple-root basis.
struct RootVector {
  std::vector<Int> coords;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

// q[n] = number of Weyl group elements of length n, for n = 0..max_length().
struct GrowthSeries {
  std::vector<std::uint64_t> q;

  int max_length() const noexcept { return static_cast<int>(q.size()) - 1; }
  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto v : q) s = checked_add(s, v);
    return s;
  }
  friend bool operator==(const GrowthSeries&, const GrowthSeries&) = default;
};

inline WeightVector weyl_vector(int rank) { return {std::vector<Int>(static_cast<std::size_t>(rank), 1)}; }

namespace detail {

inline void reflect_into(std::span<const Int> mu, int i, const CartanMatrix& m, std::span<Int> out) {
  const Int mi = mu[static_cast<std::size_t>(i)];
  for (int j = 0; j < m.rank(); ++j)
    out[static_cast<std::size_t>(j)] = checked_sub(mu[static_cast<std::size_t>(j)], checked_mul(mi, m(j, i)));
}

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

inline std::uint64_t hash_coords(std::span<const Int> p) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (Int v : p) h = mix64(h ^ static_cast<std::uint64_t>(v)) + 0x9e3779b97f4a7c15ULL;
  return h;
}

// Insert-only hash set of fixed-width integer points, stored contiguously.
// Open addressing with linear probing; slots hold 1-based point indices.
class FlatPointSet {
 public:
  explicit FlatPointSet(int width, std::size_t expected = 0) : width_(static_cast<std::size_t>(width)) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    slots_.assign(cap, 0);
    data_.reserve(expected * width_);
  }

  std::size_t size() const noexcept { return size_; }
  std::span<const Int> at(std::size_t k) const { return {data_.data() + k * width_, width_}; }
  const std::vector<Int>& data() const noexcept { return data_; }
  std::vector<Int> release() && { return std::move(data_); }

  // Returns true when `p` was not present.
  bool insert(std::span<const Int> p) {
    if (2 * (size_ + 1) > slots_.size()) grow();
    std::size_t s = hash_coords(p) & (slots_.size() - 1);
    for (;;) {
      const auto idx = slots_[s];
      if (idx == 0) break;
      if (std::equal(p.begin(), p.end(), data_.begin() + static_cast<std::ptrdiff_t>((idx - 1) * width_))) return false;
      s = (s + 1) & (slots_.size() - 1);
    }
    data_.insert(data_.end(), p.begin(), p.end());
    slots_[s] = ++size_;
    return true;
  }

  bool contains(std::span<const Int> p) const {
    std::size_t s = hash_coords(p) & (slots_.size() - 1);
    for (;;) {
      const auto idx = slots_[s];
      if (idx == 0) return false;
      if (std::equal(p.begin(), p.end(), data_.begin() + static_cast<std::ptrdiff_t>((idx - 1) * width_))) return true;
      s = (s + 1) & (slots_.size() - 1);
    }
  }

 private:
  void grow() {
    std::vector<std::size_t> fresh(slots_.size() * 2, 0);
    for (std::size_t k = 0; k < size_; ++k) {
      std::size_t s = hash_coords(at(k)) & (fresh.size() - 1);
      while (fresh[s] != 0) s = (s + 1) & (fresh.size() - 1);
      fresh[s] = k + 1;
    }
    slots_ = std::move(fresh);
  }

  std::size_t width_;
  std::size_t size_ = 0;
  std::vector<Int> data_;
  std::vector<std::size_t> slots_;
};

// Candidate successors of frontier points [lo, hi), deduplicated locally.
inline FlatPointSet expand_chunk(const CartanMatrix& m, const std::vector<Int>& frontier, std::size_t lo,
                                 std::size_t hi) {
  const auto r = static_cast<std::size_t>(m.rank());
  FlatPointSet out(m.rank(), (hi - lo) * 2);
  std::vector<Int> next(r);
  for (std::size_t k = lo; k < hi; ++k) {
    std::span<const Int> mu(frontier.data() + k * r, r);
    for (int i = 0; i < m.rank(); ++i) {
      if (mu[static_cast<std::size_t>(i)] <= 0) continue;
      reflect_into(mu, i, m, next);
      out.insert(next);
    }
  }
  return out;
}

}  // namespace detail

// s_i(mu) = mu - mu_i * alpha_i, with i 0-based.
inline WeightVector reflect(const WeightVector& mu, int i, const CartanMatrix& m) {
  if (static_cast<int>(mu.coords.size()) != m.rank()) throw ValidationError("weight has wrong length for this rank");
  if (i < 0 || i >= m.rank()) throw ValidationError("node index " + std::to_string(i) + " out of range");
  WeightVector out{std::vector<Int>(mu.coords.size())};
  detail::reflect_into(mu.coords, i, m, out.coords);
  return out;
}

// gamma = rho - mu expressed in simple roots, by Cramer's rule over Z.
// Requires a nonsingular matrix (finite or indefinite type). Throws
// ConsistencyError if gamma is not a nonnegative integral combination.
inline RootVector root_coordinates(const WeightVector& mu, const CartanMatrix& m) {
  const auto r = static_cast<std::size_t>(m.rank());
  if (mu.coords.size() != r) throw ValidationError("weight has wrong length for this rank");
  std::vector<Int> a(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a[i * r + j] = m(static_cast<int>(i), static_cast<int>(j));
  const Int det = detail::bareiss_det(a, r);
  if (det == 0) throw ConsistencyError("singular Cartan matrix: root coordinates are not unique");
  std::vector<Int> rhs(r);
  for (std::size_t i = 0; i < r; ++i) rhs[i] = checked_sub(Int{1}, mu.coords[i]);
  RootVector out{std::vector<Int>(r)};
  for (std::size_t j = 0; j < r; ++j) {
    auto aj = a;
    for (std::size_t i = 0; i < r; ++i) aj[i * r + j] = rhs[i];
    const Int num = detail::bareiss_det(std::move(aj), r);
    if (num % det != 0) throw ConsistencyError("rho - mu is not in the root lattice");
    out.coords[j] = num / det;
    if (out.coords[j] < 0) throw ConsistencyError("rho - mu has a negative simple-root coordinate");
  }
  return out;
}

struct EnumerateOptions {
  unsigned threads = 1;
  // Keep every level's points (needed for the level-disjointness check).
  bool retain_levels = false;
  // Largest level size allowed before ResourceError.
  std::size_t max_level_size = 25'000'000;
};

struct OrbitLevels {
  GrowthSeries series;
  std::vector<std::vector<WeightVector>> levels;  // empty unless retain_levels
};

inline OrbitLevels enumerate_orbit(const CartanMatrix& m, int max_length, const EnumerateOptions& opts = {}) {
  if (max_length < 0) throw ValidationError("max length must be >= 0");
  const auto r = static_cast<std::size_t>(m.rank());
  OrbitLevels out;
  std::vector<Int> frontier = weyl_vector(m.rank()).coords;
  std::size_t frontier_size = 1;

  auto keep = [&](const std::vector<Int>& flat, std::size_t count) {
    if (!opts.retain_levels) return;
    auto& lvl = out.levels.emplace_back();
    lvl.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
      lvl.push_back({std::vector<Int>(flat.begin() + static_cast<std::ptrdiff_t>(k * r),
                                      flat.begin() + static_cast<std::ptrdiff_t>((k + 1) * r))});
  };

  out.series.q.push_back(1);
  keep(frontier, 1);
  for (int n = 1; n <= max_length; ++n) {
    const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(frontier_size / 4096 + 1)));
    std::vector<detail::FlatPointSet> parts;
    parts.reserve(threads);
    if (threads == 1) {
      parts.push_back(detail::expand_chunk(m, frontier, 0, frontier_size));
    } else {
      std::vector<std::size_t> bounds(threads + 1);
      for (unsigned t = 0; t <= threads; ++t) bounds[t] = frontier_size * t / threads;
      std::vector<std::optional<detail::FlatPointSet>> slots(threads);
      std::vector<std::exception_ptr> errors(threads);
      {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
          pool.emplace_back([&, t] {
            try {
              slots[t].emplace(detail::expand_chunk(m, frontier, bounds[t], bounds[t + 1]));
            } catch (...) {
              errors[t] = std::current_exception();
            }
          });
      }
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
      for (auto& s : slots) parts.push_back(std::move(*s));
    }

    // Merge in chunk order; the resulting set (and its size) is independent of
    // how the frontier was split.
    detail::FlatPointSet merged = std::move(parts.front());
    for (std::size_t p = 1; p < parts.size(); ++p)
      for (std::size_t k = 0; k < parts[p].size(); ++k) merged.insert(parts[p].at(k));
    if (merged.size() > opts.max_level_size)
      throw ResourceError("level " + std::to_string(n) + " has " + std::to_string(merged.size()) +
                          " points, over the budget of " + std::to_string(opts.max_level_size));
    frontier_size = merged.size();
    frontier = std::move(merged).release();
    out.series.q.push_back(frontier_size);
    keep(frontier, frontier_size);
  }
  return out;
}

inline GrowthSeries enumerate_levels(const CartanMatrix& m, int max_length, const EnumerateOptions& opts = {}) {
  auto o = opts;
  o.retain_levels = false;
  return enumerate_orbit(m, max_length, o).series;
}

// Independent check: breadth-first search over the group itself, each element
// stored as its r x r integer matrix on weight coordinates. Level n is the set
// of products w * s_i (w in level n-1) not seen at any earlier level, so no
// ascent condition is involved. Intended for small max_length.
inline GrowthSeries enumerate_matrix_oracle(const CartanMatrix& m, int max_length) {
  if (max_length < 0) throw ValidationError("max length must be >= 0");
  const auto r = static_cast<std::size_t>(m.rank());
  using Mat = std::vector<Int>;
  Mat identity(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) identity[i * r + i] = 1;

  // w * s_i: s_i fixes every column except column i, which becomes
  // sum_j w[:, j] * (delta_ji - a(j, i)).
  auto times_reflection = [&](const Mat& w, std::size_t i) {
    Mat out = w;
    for (std::size_t row = 0; row < r; ++row) {
      Int acc = 0;
      for (std::size_t j = 0; j < r; ++j) {
        const Int s = (j == i ? 1 : 0) - m(static_cast<int>(j), static_cast<int>(i));
        acc = checked_add(acc, checked_mul(w[row * r + j], s));
      }
      out[row * r + i] = acc;
    }
    return out;
  };

  std::set<Mat> seen{identity};
  std::vector<Mat> level{identity};
  GrowthSeries gs;
  gs.q.push_back(1);
  for (int n = 1; n <= max_length; ++n) {
    std::vector<Mat> next;
    for (const auto& w : level)
      for (std::size_t i = 0; i < r; ++i) {
        Mat v = times_reflection(w, i);
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    gs.q.push_back(next.size());
    level = std::move(next);
  }
  return gs;
}

}  // namespace kmweyl
