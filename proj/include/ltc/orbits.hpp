#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltc {

/// binomial(n, k) in exact integer arithmetic; zero for k < 0 or k > n.
inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long num = 1;
  for (int i = 1; i <= k; ++i) {
    num = num * (n - k + i) / i; // exact: product of i consecutive ints
  }
  return num;
}

/// The K-orbit O_k of rank-k symmetric n x n matrices (K = GL(n) acting
/// by congruence on sym(n) = p_+ for Sp(2n,R)).  Closure order is total:
/// O_j lies in the closure of O_k iff j <= k.
struct OrbitLabel {
  int n = 0;
  int k = 0;

  OrbitLabel(int n_, int k_) : n(n_), k(k_) {
    if (n < 1 || k < 0 || k > n)
      throw std::invalid_argument("OrbitLabel: need 0 <= k <= n");
  }
};

/// Partition of 2n attached to the complex orbit of O_k:
/// k rows of length two, 2n - 2k rows of length one.
inline std::vector<int> partition_of(const OrbitLabel& orbit) {
  std::vector<int> rows;
  rows.insert(rows.end(), static_cast<std::size_t>(orbit.k), 2);
  rows.insert(rows.end(), static_cast<std::size_t>(2 * (orbit.n - orbit.k)), 1);
  return rows;
}

inline std::string partition_to_string(const std::vector<int>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(rows[i]);
  }
  return out;
}

/// The complex orbit above O_k is special exactly when k is even or k = n.
inline bool is_special(const OrbitLabel& orbit) {
  return orbit.k % 2 == 0 || orbit.k == orbit.n;
}

/// Dimension of the Springer representation attached to the complex
/// orbit: binomial(n, floor(k/2)).
inline long long springer_dim(const OrbitLabel& orbit) {
  return binomial(orbit.n, orbit.k / 2);
}

/// Number of conormal bundle closures with moment map image the closure
/// of O_k.  Equals springer_dim because the component groups A_G and A_K
/// have the same orbits on Springer fiber components for this pair.
inline long long predicted_conormal_count(const OrbitLabel& orbit) {
  return springer_dim(orbit);
}

/// Query for the existence of a signed Young diagram: a partition of
/// 2(p+q) decorated with alternating signs subject to the row rules for
/// the quaternionic symplectic group of signature (p, q).
struct SignedPartitionQuery {
  std::vector<int> rowLengths; // weakly decreasing when listed
  int p = 0;
  int q = 0;
};

/// Existence of an admissible sign assignment.  Row rules:
///   - each even row length occurs an even number of times, with equally
///     many rows starting + as starting -;
///   - each odd row length occurs an even number of times, with an even
///     number starting + and an even number starting -.
/// A row of length L starting with + carries ceil(L/2) plus boxes; the
/// search runs over assignments meeting the rules and checks that plus
/// boxes total 2p and minus boxes 2q.
inline bool spq_admissible(const SignedPartitionQuery& query) {
  long long total = std::accumulate(query.rowLengths.begin(),
                                    query.rowLengths.end(), 0LL);
  if (query.p < 0 || query.q < 0 ||
      total != 2LL * (static_cast<long long>(query.p) + query.q))
    throw std::invalid_argument("spq_admissible: row lengths do not sum to 2(p+q)");
  for (int len : query.rowLengths)
    if (len < 1) throw std::invalid_argument("spq_admissible: nonpositive row");

  // Row-length multiplicities.
  std::vector<std::pair<int, int>> classes; // (length, count)
  {
    std::vector<int> sorted = query.rowLengths;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      classes.emplace_back(sorted[i], static_cast<int>(j - i));
      i = j;
    }
  }

  long long forced_plus = 0; // plus boxes fixed by the even-row rule
  std::vector<std::pair<int, int>> odd_classes;
  for (auto [len, count] : classes) {
    if (count % 2 != 0) return false;
    if (len % 2 == 0) {
      // Equal numbers of +-initial and --initial rows; every even row
      // carries len/2 plus boxes regardless of its starting sign.
      forced_plus += static_cast<long long>(count) * (len / 2);
    } else {
      odd_classes.emplace_back(len, count);
    }
  }

  // Search the even choices of +-initial rows in each odd class.
  long long target = 2LL * query.p;
  std::vector<long long> reachable{forced_plus};
  for (auto [len, count] : odd_classes) {
    std::vector<long long> next;
    for (long long base : reachable)
      for (int a = 0; a <= count; a += 2) {
        int b = count - a; // also even since count is even
        long long plus = static_cast<long long>(a) * ((len + 1) / 2) +
                         static_cast<long long>(b) * ((len - 1) / 2);
        next.push_back(base + plus);
      }
    reachable = std::move(next);
  }
  return std::find(reachable.begin(), reachable.end(), target) != reachable.end();
}

} // namespace ltc
