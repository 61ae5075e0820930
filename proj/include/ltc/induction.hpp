#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltc/cells.hpp"
#include "ltc/parabolic.hpp"
#include "ltc/sym_rep.hpp"
#include "ltc/weyl.hpp"

namespace ltc {

/// Predicted rank of a generic element of f_k + u cap p_+ for the
/// parabolic with Levi C^(n-m) + sp(2m): the saturation sends the rank-k
/// Levi orbit to rank 2(n-m)+k, capped at n (the cap binds from
/// k = 2m-n upward).
inline int saturation_predicted(int n, int m, int k) {
  if (!(0 <= k && k <= m && m < n))
    throw std::invalid_argument("saturation_predicted: need 0 <= k <= m < n");
  return std::min(n, 2 * (n - m) + k);
}

struct SaturationResult {
  int n = 0, m = 0, k = 0;
  int predictedRank = 0;
  int genericRank = 0;
  int witnessRank = 0;

  bool agrees() const {
    return predictedRank == genericRank && predictedRank == witnessRank;
  }
};

struct ClaimWitness {
  SymMatrixI matrix;
  int caseId = 1; // 1: k >= 2m-n (full rank), 2: k <= 2m-n (rank k+2(n-m))
  int rank = 0;   // exact rank over the rationals
};

/// The explicit element of f_k + u cap p_+ whose rank certifies the
/// saturation formula deterministically.  For k >= 2m-n the element
///   f_k + sum_{i=1}^{m-k} X_{e_i+e_{n-m+k+i}} + sum_{i=m-k+1}^{n-m} X_{2e_i}
/// has rank n; for k <= 2m-n the element
///   f_k + sum_{i=1}^{n-m} X_{e_i+e_{n-m+k+i}}
/// has rank k + 2(n-m).  f_k sits on the Levi block (offset n-m).
/// The rank is computed fraction-free over big integers.
inline ClaimWitness claim_witness_matrices(int n, int m, int k) {
  if (!(0 <= k && k <= m && m < n))
    throw std::invalid_argument("claim_witness_matrices: need 0 <= k <= m < n");

  const ParabolicDatum q = parabolic(n, m);
  const std::vector<Root> roots = positive_roots(n);
  auto require_in_u = [&](int i, int j) {
    // 0-based indices; the summand e_i+e_j (or 2e_i) must lie in u cap p_+.
    for (std::size_t idx = 0; idx < roots.size(); ++idx) {
      const Root& r = roots[static_cast<std::size_t>(idx)];
      if (!r.noncompact()) continue;
      if ((r.i == i && r.j == j) || (r.i == j && r.j == i)) {
        if (!q.uPplus.contains(static_cast<int>(idx)))
          throw std::logic_error("claim_witness_matrices: summand escapes u cap p_+");
        return;
      }
    }
    throw std::logic_error("claim_witness_matrices: summand is not a root vector");
  };

  ClaimWitness out;
  out.matrix = f_k(k, n, n - m);
  if (k >= 2 * m - n) {
    out.caseId = 1;
    for (int i = 0; i < m - k; ++i) {
      require_in_u(i, n - m + k + i);
      out.matrix.add(i, n - m + k + i, 1);
    }
    for (int i = m - k; i < n - m; ++i) {
      require_in_u(i, i);
      out.matrix.add(i, i, 1);
    }
  } else {
    out.caseId = 2;
    for (int i = 0; i < n - m; ++i) {
      require_in_u(i, n - m + k + i);
      out.matrix.add(i, n - m + k + i, 1);
    }
  }

  using boost::multiprecision::cpp_int;
  DenseMatrix<cpp_int> d(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      d.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          cpp_int(out.matrix.at(i, j));
  out.rank = rank_fraction_free(std::move(d));
  return out;
}

/// Randomized generic rank of the family f_k + u cap p_+, together with
/// the predicted rank and the deterministic witness rank.  Disagreement
/// is data (reported by the caller), not an error.
inline SaturationResult saturation_generic(int n, int m, int k,
                                           std::uint64_t seed = 0,
                                           int trials = 4) {
  if (!(0 <= k && k <= m && m < n))
    throw std::invalid_argument("saturation_generic: need 0 <= k <= m < n");
  const ParabolicDatum q = parabolic(n, m);
  SymFamily fam = span_family(q.uPplus);
  fam.base = f_k(k, n, n - m);

  SaturationResult res;
  res.n = n;
  res.m = m;
  res.k = k;
  res.predictedRank = saturation_predicted(n, m, k);
  res.genericRank = generic_rank(fam, trials, seed);
  res.witnessRank = claim_witness_matrices(n, m, k).rank;
  return res;
}

/// Rows (j, count) of induced parameters: j runs from
/// j0 = max(0, m - floor((n-1)/2)) to floor(m/2), and the Levi fiber of
/// rank 2j-1 has binomial(m, j-1) dominant parameters (zero at j = 0).
inline std::vector<std::pair<int, long long>> induced_witness_counts(int n, int m) {
  if (!(0 < m && m < n))
    throw std::invalid_argument("induced_witness_counts: need 0 < m < n");
  const int j0 = std::max(0, m - (n - 1) / 2);
  std::vector<std::pair<int, long long>> rows;
  for (int j = j0; j <= m / 2; ++j) rows.emplace_back(j, binomial(m, j - 1));
  return rows;
}

/// A transferred parameter: sigma dominant in W(C_m) whose support
/// conormal maps onto the non-special Levi orbit O_{2j-1}, and
/// w = w0 * sigma in W(C_n).  The rank identity
///   rank_n(w) = saturation(rank_m(sigma))
/// is verified on every record.  The two reducibility flags are the
/// conclusions licensed by the cell-size and transfer theorems; they are
/// recorded as assertions, not recomputed facts.
struct WitnessRecord {
  int n = 0, m = 0, j = 0;
  SignedPermutation sigma;
  SignedPermutation w;
  SignedPermutation wInverse;
  int leviRank = 0;    // 2j-1, verified by computation
  int ambientRank = 0; // rank of w's fiber in C_n, verified by computation
  bool reducibleLTC = false;          // asserted for the induced module
  bool reducibleAVcategoryO = false;  // asserted for L_{w^-1}
};

/// Enumerates the witness records for the pair (n, m).  For each j in the
/// admissible range and each dominant sigma with Levi fiber rank 2j-1,
/// the saturated orbit is the full space (rank n, special), so the
/// transferred parameter carries both reducibility conclusions.
inline std::vector<WitnessRecord> generate_witnesses(int n, int m,
                                                     std::uint64_t seed = 0,
                                                     int trials = 4) {
  if (!(0 < m && m < n))
    throw std::invalid_argument("generate_witnesses: need 0 < m < n");

  const std::vector<std::pair<int, long long>> counts = induced_witness_counts(n, m);
  const std::vector<SignedPermutation> levi_reps = dominant_reps(m);

  // Levi fiber rank of each dominant sigma, streams derived per index.
  std::vector<int> levi_rank(levi_reps.size(), 0);
  for (std::size_t i = 0; i < levi_reps.size(); ++i)
    levi_rank[i] = generic_rank(span_family(n_cap_nw(levi_reps[i])), trials,
                                rng_stream(seed, i)());

  std::vector<WitnessRecord> records;
  for (auto [j, expected] : counts) {
    if (j == 0) continue; // empty fiber: rank -1 does not occur
    const int target = 2 * j - 1;
    const int saturated = saturation_predicted(n, m, target);
    if (!is_special(OrbitLabel(n, saturated)) || saturated <= target)
      throw std::logic_error("generate_witnesses: saturated orbit not special; "
                             "range bound violated");
    long long found = 0;
    for (std::size_t i = 0; i < levi_reps.size(); ++i) {
      if (levi_rank[i] != target) continue;
      WitnessRecord rec;
      rec.n = n;
      rec.m = m;
      rec.j = j;
      rec.sigma = levi_reps[i];
      rec.w = transfer_w(rec.sigma, n);
      rec.wInverse = rec.w.inverse();
      rec.leviRank = target;
      rec.ambientRank =
          generic_rank(span_family(n_cap_nw(rec.w)), trials,
                       rng_stream(seed, (std::uint64_t{1} << 32) + i)());
      if (rec.ambientRank != saturated)
        throw std::logic_error(
            "generate_witnesses: rank of transferred parameter (" +
            std::to_string(rec.ambientRank) + ") differs from saturation (" +
            std::to_string(saturated) + "); composition convention bug");
      rec.reducibleLTC = true;
      rec.reducibleAVcategoryO = true;
      records.push_back(std::move(rec));
      ++found;
    }
    if (found != expected)
      throw std::logic_error("generate_witnesses: fiber size " +
                             std::to_string(found) + " != binomial count " +
                             std::to_string(expected));
  }

  std::sort(records.begin(), records.end(),
            [](const WitnessRecord& a, const WitnessRecord& b) {
              if (a.j != b.j) return a.j < b.j;
              return a.sigma.to_string() < b.sigma.to_string();
            });
  return records;
}

} // namespace ltc
