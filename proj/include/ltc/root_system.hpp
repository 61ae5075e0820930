#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltc {

/// An integral weight of sp(2n), stored as the coefficient vector of
/// (e_1, ..., e_n).  Immutable by convention after construction.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}

  int rank() const { return static_cast<int>(coords.size()); }
  int operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.coords == b.coords;
  }
  friend bool operator!=(const Weight& a, const Weight& b) {
    return !(a == b);
  }

  /// Standard dot product; the pairing of a weight with a root.
  friend long long dot(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
    long long s = 0;
    for (int i = 0; i < a.rank(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return s;
  }

  std::string to_string() const {
    std::string out = "(";
    for (int i = 0; i < rank(); ++i) {
      if (i) out += ",";
      out += std::to_string(coords[static_cast<std::size_t>(i)]);
    }
    return out + ")";
  }
};

inline Weight negate(const Weight& w) {
  std::vector<int> c(w.coords);
  for (int& x : c) x = -x;
  return Weight(std::move(c));
}

/// A weight is a positive vector iff its first nonzero coordinate is
/// positive; for vectors of root shape this decides positivity in the
/// positive system {e_i - e_j (i<j)} u {e_i + e_j (i<j)} u {2 e_i}.
inline bool is_positive_vector(const Weight& w) {
  for (int c : w.coords) {
    if (c > 0) return true;
    if (c < 0) return false;
  }
  return false;
}

enum class RootKind {
  CompactPositive, // e_i - e_j, i < j  (roots of gl(n))
  NoncompactShort, // e_i + e_j, i < j  (off-diagonal weights of sym(n))
  NoncompactLong,  // 2 e_i             (diagonal weights of sym(n))
};

/// A positive root of C_n together with its classification and the index
/// pair that defines it (0-based; j == i for long roots).
struct Root {
  Weight coords;
  RootKind kind;
  int i = 0, j = 0;

  int rank() const { return coords.rank(); }
  bool noncompact() const { return kind != RootKind::CompactPositive; }

  std::string to_string() const {
    switch (kind) {
      case RootKind::CompactPositive:
        return "e" + std::to_string(i + 1) + "-e" + std::to_string(j + 1);
      case RootKind::NoncompactShort:
        return "e" + std::to_string(i + 1) + "+e" + std::to_string(j + 1);
      case RootKind::NoncompactLong:
        return "2e" + std::to_string(i + 1);
    }
    return {};
  }
};

namespace detail {
inline Weight basis_diff(int n, int i, int j) {
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  c[static_cast<std::size_t>(i)] = 1;
  c[static_cast<std::size_t>(j)] -= 1;
  return Weight(std::move(c));
}
inline Weight basis_sum(int n, int i, int j) {
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  c[static_cast<std::size_t>(i)] += 1;
  c[static_cast<std::size_t>(j)] += 1;
  return Weight(std::move(c));
}
} // namespace detail

/// The n^2 positive roots of C_n in the fixed index order used by every
/// RootSet bitmask: first the compact block e_i - e_j (i<j, lexicographic
/// in (i,j)), then e_i + e_j (lexicographic), then 2 e_i by i.  The order
/// is part of the serialization contract and must not change.
inline std::vector<Root> positive_roots(int n) {
  if (n < 1) throw std::invalid_argument("positive_roots: rank must be >= 1");
  std::vector<Root> roots;
  roots.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      roots.push_back({detail::basis_diff(n, i, j), RootKind::CompactPositive, i, j});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      roots.push_back({detail::basis_sum(n, i, j), RootKind::NoncompactShort, i, j});
  for (int i = 0; i < n; ++i)
    roots.push_back({detail::basis_sum(n, i, i), RootKind::NoncompactLong, i, i});
  return roots;
}

/// Parses the textual form produced by Root::to_string, returning the index
/// of the root in positive_roots(n).  Throws if the string names no
/// positive root of rank n.
inline int parse_root_index(const std::string& s, int n) {
  const std::vector<Root> roots = positive_roots(n);
  for (std::size_t idx = 0; idx < roots.size(); ++idx)
    if (roots[idx].to_string() == s) return static_cast<int>(idx);
  throw std::invalid_argument("parse_root_index: unknown root '" + s + "'");
}

/// Half-sum of the positive roots: (n, n-1, ..., 1).
inline Weight rho(int n) {
  if (n < 1) throw std::invalid_argument("rho: rank must be >= 1");
  std::vector<int> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = n - i;
  return Weight(std::move(c));
}

/// Dominance for the compact positive system {e_i - e_j : i < j}:
/// coordinates weakly decreasing.
inline bool is_c_dominant(const Weight& lambda) {
  for (int i = 0; i + 1 < lambda.rank(); ++i)
    if (lambda[i] < lambda[i + 1]) return false;
  return true;
}

/// Pairing <lambda, alpha^vee> = 2 (lambda, alpha) / (alpha, alpha).
inline long long coroot_pairing(const Weight& lambda, const Root& alpha) {
  long long num = 2 * dot(lambda, alpha.coords);
  long long len2 = dot(alpha.coords, alpha.coords);
  return num / len2;
}

} // namespace ltc
