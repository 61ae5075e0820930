#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltc/exact_linalg.hpp"
#include "ltc/prime_field.hpp"
#include "ltc/root_set.hpp"
#include "ltc/root_system.hpp"

namespace ltc {

/// Symmetric n x n matrix over an exact scalar.  Writes go through
/// set(), which mirrors the entry, so M = M^T holds at all times.
template <typename T>
class SymMatrix {
public:
  SymMatrix() = default;
  explicit SymMatrix(int n)
      : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), T(0)) {
    if (n < 0) throw std::invalid_argument("SymMatrix: negative size");
  }

  int size() const { return n_; }

  const T& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(j)];
  }

  void set(int i, int j, const T& v) {
    check(i, j);
    a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
       static_cast<std::size_t>(j)] = v;
    a_[static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) +
       static_cast<std::size_t>(i)] = v;
  }

  void add(int i, int j, const T& v) { set(i, j, at(i, j) + v); }

  bool is_zero() const {
    for (const T& x : a_)
      if (!(x == T(0))) return false;
    return true;
  }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

  /// Entries of the upper triangle (i <= j), row by row: the coordinate
  /// vector of the matrix inside sym(n).
  std::vector<T> upper_coords() const {
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(n_) * (static_cast<std::size_t>(n_) + 1) / 2);
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j) out.push_back(at(i, j));
    return out;
  }

private:
  void check(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
      throw std::out_of_range("SymMatrix: index out of range");
  }

  int n_ = 0;
  std::vector<T> a_;
};

using SymMatrixI = SymMatrix<long long>;

/// Affine family of symmetric matrices { base + sum c_i * gen_i } with
/// integer base point and generators; sampling happens in F_p.
struct SymFamily {
  SymMatrixI base;
  std::vector<SymMatrixI> generators;

  int size() const { return base.size(); }
};

/// The matrix of a noncompact positive root inside sym(n):
/// 2e_i -> E_ii and e_i + e_j -> E_ij + E_ji.
inline SymMatrixI root_matrix(const Root& alpha, int n) {
  if (alpha.rank() != n) throw std::invalid_argument("root_matrix: rank mismatch");
  if (!alpha.noncompact())
    throw std::invalid_argument("root_matrix: root is not a weight of sym(n)");
  SymMatrixI m(n);
  m.set(alpha.i, alpha.j, 1);
  return m;
}

/// Base point of the rank-k orbit: ones at diagonal positions
/// offset+1, ..., offset+k.  Offset n-m places it on the Levi block.
inline SymMatrixI f_k(int k, int n, int offset = 0) {
  if (k < 0 || offset < 0 || offset + k > n)
    throw std::invalid_argument("f_k: range violation");
  SymMatrixI m(n);
  for (int i = 0; i < k; ++i) m.set(offset + i, offset + i, 1);
  return m;
}

/// Family spanned by the root matrices of the noncompact members of s.
/// Compact members are rejected; callers pass sets inside Delta(p_+).
inline SymFamily span_family(const RootSet& s) {
  const int n = s.rank();
  const std::vector<Root> roots = positive_roots(n);
  SymFamily fam;
  fam.base = SymMatrixI(n);
  for (int idx : s.indices()) {
    const Root& alpha = roots[static_cast<std::size_t>(idx)];
    fam.generators.push_back(root_matrix(alpha, n));
  }
  return fam;
}

namespace detail {

inline SymMatrix<Fp61> sample_point(const SymFamily& fam, std::mt19937_64& rng) {
  const int n = fam.size();
  SymMatrix<Fp61> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      m.set(i, j, Fp61::from_int(fam.base.at(i, j)));
  for (const SymMatrixI& g : fam.generators) {
    Fp61 c = random_fp(rng);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        if (g.at(i, j) != 0) m.add(i, j, c * Fp61::from_int(g.at(i, j)));
  }
  return m;
}

inline int rank_of(const SymMatrix<Fp61>& m) {
  const int n = m.size();
  DenseMatrix<Fp61> d(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.at(static_cast<std::size_t>(i),
                                     static_cast<std::size_t>(j)) = m.at(i, j);
  return rank_mod_p(std::move(d));
}

} // namespace detail

/// Maximum rank attained on the family, computed as the max of `trials`
/// independent F_p samples.  Equals the true generic rank except with
/// probability at most (n/p)^trials per family (Schwartz-Zippel applied
/// to a maximal minor).  Deterministic given the seed.
inline int generic_rank(const SymFamily& fam, int trials = 4,
                        std::uint64_t seed = 0) {
  if (trials < 1) throw std::invalid_argument("generic_rank: trials must be >= 1");
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng = rng_stream(seed, static_cast<std::uint64_t>(t));
    best = std::max(best, detail::rank_of(detail::sample_point(fam, rng)));
  }
  return best;
}

/// Dimension of the closure of B.V for a linear subspace V of sym(n)
/// spanned by the family's generators (base must be zero).  The Borel of
/// the congruence action a . X = a^T X + X a is realized by the lower
/// triangular matrices, and the unipotent directions inside sym(n) act
/// trivially, so the tangent space at a generic X in V is
/// { a^T X + X a : a lower triangular } + V.  Its dimension is computed
/// by exact F_p rank of the stacked coordinate matrix, randomized with
/// the same failure bound as generic_rank.
inline int borbit_dim(const SymFamily& fam, int trials = 4,
                      std::uint64_t seed = 0) {
  if (!fam.base.is_zero())
    throw std::invalid_argument("borbit_dim: base point must be zero");
  const int n = fam.size();
  const std::size_t dim_sym =
      static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1) / 2;

  int best = 0;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng = rng_stream(seed, static_cast<std::uint64_t>(t));
    SymMatrix<Fp61> x = detail::sample_point(fam, rng);

    std::vector<std::vector<Fp61>> rowvecs;
    // a = E_pq with p >= q (lower triangular basis); T = a^T X + X a
    // = E_qp X + X E_pq: row p of X lands in row q, column p in column q.
    for (int p = 0; p < n; ++p)
      for (int q = 0; q <= p; ++q) {
        DenseMatrix<Fp61> tangent(static_cast<std::size_t>(n),
                                  static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
          tangent.at(static_cast<std::size_t>(q), static_cast<std::size_t>(j)) =
              tangent.at(static_cast<std::size_t>(q), static_cast<std::size_t>(j)) +
              x.at(p, j);
        for (int i = 0; i < n; ++i)
          tangent.at(static_cast<std::size_t>(i), static_cast<std::size_t>(q)) =
              tangent.at(static_cast<std::size_t>(i), static_cast<std::size_t>(q)) +
              x.at(i, p);
        std::vector<Fp61> row;
        row.reserve(dim_sym);
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j)
            row.push_back(tangent.at(static_cast<std::size_t>(i),
                                     static_cast<std::size_t>(j)));
        rowvecs.push_back(std::move(row));
      }
    for (const SymMatrixI& g : fam.generators) {
      std::vector<Fp61> row;
      row.reserve(dim_sym);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) row.push_back(Fp61::from_int(g.at(i, j)));
      rowvecs.push_back(std::move(row));
    }

    DenseMatrix<Fp61> d(rowvecs.size(), dim_sym);
    for (std::size_t r = 0; r < rowvecs.size(); ++r)
      for (std::size_t c = 0; c < dim_sym; ++c) d.at(r, c) = rowvecs[r][c];
    best = std::max(best, rank_mod_p(std::move(d)));
  }
  return best;
}

/// Dimension of the rank-k orbit in sym(n): n k - k (k - 1) / 2.
inline int dim_Ok(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("dim_Ok: range violation");
  return n * k - k * (k - 1) / 2;
}

} // namespace ltc
