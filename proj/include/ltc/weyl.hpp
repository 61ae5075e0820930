#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ltc/root_set.hpp"
#include "ltc/root_system.hpp"
#include "ltc/signed_permutation.hpp"

namespace ltc {

/// The roots of n preserved by pulling back through w:
/// { alpha > 0 : w^-1(alpha) > 0 }.  Cardinality is n^2 - length(w).
inline RootSet n_cap_nw(const SignedPermutation& w) {
  const int n = w.rank();
  const SignedPermutation winv = w.inverse();
  const std::vector<Root> roots = positive_roots(n);
  RootSet s(n);
  for (std::size_t idx = 0; idx < roots.size(); ++idx)
    if (is_positive_vector(act(winv, roots[idx].coords)))
      s.insert(static_cast<int>(idx));
  return s;
}

/// Coxeter length: the number of positive roots sent negative by w.
inline int length(const SignedPermutation& w) {
  const std::vector<Root> roots = positive_roots(w.rank());
  int inv = 0;
  for (const Root& alpha : roots)
    if (!is_positive_vector(act(w, alpha.coords))) ++inv;
  return inv;
}

/// Streams every element of W(C_n) in a fixed order (permutations in
/// lexicographic order, sign masks ascending inside each permutation).
/// |W(C_n)| = 2^n n!, so keep n small; n <= 8 is enforced.
template <typename Fn>
void for_each_element(int n, Fn&& fn) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("for_each_element: need 1 <= n <= 8");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> img(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        int s = (mask >> j) & 1u ? -1 : 1;
        img[static_cast<std::size_t>(j)] = s * perm[static_cast<std::size_t>(j)];
      }
      fn(SignedPermutation(std::move(img)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

/// The 2^n elements w with -w(rho) dominant for the compact positive
/// system, i.e. w(rho) strictly increasing.  One element per sign
/// pattern: negate the chosen rho entries and sort; no filtering of W.
inline std::vector<SignedPermutation> dominant_reps(int n) {
  if (n < 1 || n > 20)
    throw std::invalid_argument("dominant_reps: need 1 <= n <= 20");
  const Weight r = rho(n);
  std::vector<SignedPermutation> reps;
  reps.reserve(std::size_t{1} << n);
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    std::vector<std::pair<int, int>> vals; // (signed value, source index)
    vals.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      int s = (mask >> j) & 1ull ? -1 : 1;
      vals.emplace_back(s * r[j], j);
    }
    std::sort(vals.begin(), vals.end());
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) {
      auto [v, src] = vals[static_cast<std::size_t>(pos)];
      img[static_cast<std::size_t>(src)] = (v < 0 ? -1 : 1) * (pos + 1);
    }
    reps.emplace_back(std::move(img));
  }
  return reps;
}

struct LongElements {
  SignedPermutation w_K;  // order reversal of all n coordinates
  SignedPermutation w_KL; // order reversal of the last m coordinates
  SignedPermutation w0;   // w_K * w_KL  (w_KL applied first)
};

/// Long elements of the compact Weyl group S_n and of its Levi factor S_m
/// on the last m coordinates, plus their product w0 used to transfer
/// parameters from the Levi to the ambient group.
inline LongElements long_elements(int n, int m) {
  if (n < 1 || m < 0 || m > n)
    throw std::invalid_argument("long_elements: need 0 <= m <= n");
  std::vector<int> rev(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) rev[static_cast<std::size_t>(j)] = n - j;
  SignedPermutation wK{std::move(rev)};

  std::vector<int> revL(static_cast<std::size_t>(n));
  for (int j = 0; j < n - m; ++j) revL[static_cast<std::size_t>(j)] = j + 1;
  for (int j = n - m; j < n; ++j) revL[static_cast<std::size_t>(j)] = 2 * n - m + 1 - (j + 1);
  SignedPermutation wKL{std::move(revL)};

  SignedPermutation w0 = wK * wKL;
  return {wK, wKL, w0};
}

/// Embeds sigma in W(C_m) into W(C_n) acting on the last m coordinates.
inline SignedPermutation embed_levi(const SignedPermutation& sigma, int n) {
  const int m = sigma.rank();
  if (m > n) throw std::invalid_argument("embed_levi: Levi rank exceeds ambient rank");
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int j = 0; j < n - m; ++j) img[static_cast<std::size_t>(j)] = j + 1;
  for (int j = 0; j < m; ++j)
    img[static_cast<std::size_t>(n - m + j)] =
        sigma.sign(j) * (n - m + sigma.target(j) + 1);
  return SignedPermutation(std::move(img));
}

/// Transfer of a Levi parameter: w = w0 * embed(sigma).  For sigma with
/// -sigma(rho_levi) dominant in W(C_m) the result has -w(rho) dominant in
/// W(C_n); a violation means the composition convention drifted, so it is
/// checked on every call.
inline SignedPermutation transfer_w(const SignedPermutation& sigma, int n) {
  const int m = sigma.rank();
  if (m >= n) throw std::invalid_argument("transfer_w: need Levi rank m < n");
  const SignedPermutation w = long_elements(n, m).w0 * embed_levi(sigma, n);
  const bool sigma_dominant = m == 0 || is_c_dominant(negate(act(sigma, rho(m))));
  if (sigma_dominant && !is_c_dominant(negate(act(w, rho(n)))))
    throw std::logic_error(
        "transfer_w: dominance postcondition failed; composition convention bug");
  return w;
}

} // namespace ltc
