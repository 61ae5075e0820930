#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "ltc/induction.hpp"

namespace ltc {

struct CheckRecord {
  std::string id;
  std::string statement;
  std::string params;
  bool pass = true;
  std::string details;     // first discrepancy on failure, summary on success
  std::string errorBound;  // Schwartz-Zippel bound for randomized checks
};

struct VerificationReport {
  std::vector<CheckRecord> records;

  bool overall() const {
    for (const CheckRecord& r : records)
      if (!r.pass) return false;
    return true;
  }
  std::vector<bool> verdicts() const {
    std::vector<bool> out;
    out.reserve(records.size());
    for (const CheckRecord& r : records) out.push_back(r.pass);
    return out;
  }
};

struct VerifyOptions {
  int maxN = 5;      // exhaustive Weyl scans (<= 7)
  int gridMaxN = 8;  // saturation grid and even-rank witness counts
  int spqMaxN = 10;  // signed diagram sweeps and the partition identity
  std::uint64_t seed = 0;
  int trials = 4;
};

namespace detail {

inline std::string sz_bound(long long count, int dim, int trials) {
  std::ostringstream os;
  os << "<= " << count << "*(" << dim << "/" << Fp61::p << ")^" << trials;
  return os.str();
}

/// log10 of count * (dim/p)^trials, for threshold claims.
inline double sz_bound_log10(long long count, int dim, int trials) {
  return std::log10(static_cast<double>(count)) +
         trials * (std::log10(static_cast<double>(dim)) -
                   std::log10(static_cast<double>(Fp61::p)));
}

} // namespace detail

inline CheckRecord make_check(std::string id, std::string statement,
                              std::string params) {
  CheckRecord rec;
  rec.id = std::move(id);
  rec.statement = std::move(statement);
  rec.params = std::move(params);
  return rec;
}

/// Every element of W(C_n) satisfies: n cap n^y lies in Delta(p_+) iff
/// -y(rho) is dominant for the compact positive system.
inline CheckRecord check_orbital_inclusion(int maxN) {
  CheckRecord rec = make_check("orbital-inclusion",
                  "n cap n^y inside Delta(p_+) iff -y(rho) compactly dominant",
                  "all y in W(C_n), n <= " + std::to_string(maxN));
  long long scanned = 0;
  for (int n = 1; n <= maxN && rec.pass; ++n) {
    const RootSet pplus = noncompact_root_set(n);
    const Weight r = rho(n);
    for_each_element(n, [&](const SignedPermutation& y) {
      if (!rec.pass) return;
      ++scanned;
      bool inclusion = n_cap_nw(y).subset_of(pplus);
      bool dominant = is_c_dominant(negate(act(y, r)));
      if (inclusion != dominant) {
        rec.pass = false;
        rec.details = "counterexample y = " + y.to_string() +
                      " at n = " + std::to_string(n);
      }
    });
  }
  if (rec.pass) rec.details = std::to_string(scanned) + " elements scanned";
  return rec;
}

/// Observed fiber sizes of the rank map equal binomial(n, floor(k/2)).
inline CheckRecord check_fiber_counts(int maxN, std::uint64_t seed, int trials) {
  CheckRecord rec = make_check("fiber-counts",
                  "rank fibers of the dominant parameters have size "
                  "binomial(n, floor(k/2))",
                  "n <= " + std::to_string(maxN));
  long long families = 0;
  for (int n = 1; n <= maxN && rec.pass; ++n) {
    families += 1LL << n;
    GeoCheck geo = verify_geo(n, seed, trials);
    if (!geo.ok) {
      rec.pass = false;
      for (const auto& row : geo.rows)
        if (row[1] != row[2]) {
          rec.details = "n = " + std::to_string(n) + ", k = " +
                        std::to_string(row[0]) + ": observed " +
                        std::to_string(row[1]) + ", predicted " +
                        std::to_string(row[2]);
          break;
        }
    }
  }
  if (rec.pass) rec.details = std::to_string(families) + " parameters ranked";
  rec.errorBound = detail::sz_bound(families, maxN, trials);
  return rec;
}

/// The Borel saturation of each span n cap n^w has the dimension of the
/// rank-k orbit, k the generic rank of the span.
inline CheckRecord check_borel_dimension(int maxN, std::uint64_t seed, int trials) {
  CheckRecord rec = make_check("borel-dimension",
                  "dim of the Borel saturation of span(n cap n^w) equals "
                  "nk - k(k-1)/2",
                  "dominant w, n <= " + std::to_string(maxN));
  long long families = 0;
  for (int n = 1; n <= maxN && rec.pass; ++n) {
    for (const FiberEntry& e : fiber_map(n, seed, trials)) {
      ++families;
      int dim = borbit_dim(span_family(e.rootset), trials,
                           rng_stream(seed, 7777 + families)());
      if (dim != dim_Ok(n, e.k)) {
        rec.pass = false;
        rec.details = "w = " + e.w.to_string() + " at n = " + std::to_string(n) +
                      ": dim " + std::to_string(dim) + " != " +
                      std::to_string(dim_Ok(n, e.k));
        break;
      }
    }
  }
  if (rec.pass) rec.details = std::to_string(families) + " spans saturated";
  rec.errorBound =
      detail::sz_bound(2 * families, maxN * (maxN + 1) / 2, trials);
  return rec;
}

/// Observed cell sizes match binomial(n,j) + binomial(n,j-1) (and the odd
/// top cell binomial(n,(n-1)/2)).
inline CheckRecord check_cell_sizes(int maxN, std::uint64_t seed, int trials) {
  CheckRecord rec = make_check("cell-sizes",
                  "cell sizes equal the left cell dimensions",
                  "n <= " + std::to_string(maxN));
  long long cells = 0;
  for (int n = 1; n <= maxN && rec.pass; ++n) {
    CellReport report = cell_partition(n, seed, trials);
    long long sum = 0;
    for (const CellInfo& cell : report.cells) {
      ++cells;
      sum += cell.observedSize;
      if (cell.observedSize != cell.predictedSize) {
        rec.pass = false;
        rec.details = cell.cellId + " at n = " + std::to_string(n) +
                      ": observed " + std::to_string(cell.observedSize) +
                      ", predicted " + std::to_string(cell.predictedSize);
        break;
      }
    }
    if (rec.pass && sum != (1LL << n)) {
      rec.pass = false;
      rec.details = "cell sizes at n = " + std::to_string(n) +
                    " do not sum to 2^n";
    }
  }
  if (rec.pass) rec.details = std::to_string(cells) + " cells sized";
  rec.errorBound = detail::sz_bound(1LL << (maxN + 1), maxN, trials);
  return rec;
}

/// Generic, predicted, and deterministic witness ranks agree over the
/// full saturation grid 0 <= k <= m < n <= gridMaxN.
inline CheckRecord check_saturation_grid(int gridMaxN, std::uint64_t seed,
                                         int trials) {
  CheckRecord rec = make_check("saturation-grid",
                  "generic rank of f_k + u cap p_+ equals min(n, 2(n-m)+k) "
                  "and the explicit witness matrix has that exact rank",
                  "0 <= k <= m < n <= " + std::to_string(gridMaxN));
  long long triples = 0;
  for (int n = 1; n <= gridMaxN && rec.pass; ++n)
    for (int m = 0; m < n && rec.pass; ++m)
      for (int k = 0; k <= m && rec.pass; ++k) {
        ++triples;
        SaturationResult res =
            saturation_generic(n, m, k, rng_stream(seed, triples)(), trials);
        if (!res.agrees()) {
          rec.pass = false;
          rec.details = "(n,m,k) = (" + std::to_string(n) + "," +
                        std::to_string(m) + "," + std::to_string(k) +
                        "): predicted " + std::to_string(res.predictedRank) +
                        ", generic " + std::to_string(res.genericRank) +
                        ", witness " + std::to_string(res.witnessRank);
        }
      }
  if (rec.pass) rec.details = std::to_string(triples) + " triples checked";
  rec.errorBound = detail::sz_bound(triples, gridMaxN, trials);
  return rec;
}

/// Rank of the transferred parameter w0 * sigma equals the saturation of
/// sigma's Levi rank, for every dominant sigma in W(C_m), m < n <= maxN.
inline CheckRecord check_transfer_consistency(int maxN, std::uint64_t seed,
                                              int trials) {
  CheckRecord rec = make_check("transfer-consistency",
                  "fiber rank of w0 * sigma equals the saturated Levi rank",
                  "dominant sigma in W(C_m), 0 <= m < n <= " +
                      std::to_string(maxN));
  long long checked = 0;
  for (int n = 1; n <= maxN && rec.pass; ++n) {
    for (int m = 0; m < n && rec.pass; ++m) {
      std::vector<SignedPermutation> sigmas =
          m == 0 ? std::vector<SignedPermutation>{SignedPermutation{}}
                 : dominant_reps(m);
      for (const SignedPermutation& sigma : sigmas) {
        ++checked;
        int levi_rank =
            m == 0 ? 0
                   : generic_rank(span_family(n_cap_nw(sigma)), trials,
                                  rng_stream(seed, 31337 + checked)());
        SignedPermutation w = transfer_w(sigma, n);
        int ambient = generic_rank(span_family(n_cap_nw(w)), trials,
                                   rng_stream(seed, 41337 + checked)());
        if (ambient != saturation_predicted(n, m, levi_rank)) {
          rec.pass = false;
          rec.details = "sigma = " + sigma.to_string() + ", (n,m) = (" +
                        std::to_string(n) + "," + std::to_string(m) +
                        "): rank " + std::to_string(ambient) + " != saturation " +
                        std::to_string(saturation_predicted(n, m, levi_rank));
          break;
        }
      }
    }
  }
  if (rec.pass) rec.details = std::to_string(checked) + " transfers checked";
  rec.errorBound = detail::sz_bound(2 * checked, maxN, trials);
  return rec;
}

/// Witness counts: the even-rank subregular fiber has binomial(n, n/2-1)
/// parameters, and the induced records match the binomial rows.
inline CheckRecord check_witness_counts(int maxN, int gridMaxN,
                                        std::uint64_t seed, int trials) {
  CheckRecord rec = make_check("witness-counts",
                  "subregular fibers and induced witness lists have their "
                  "binomial sizes",
                  "n even <= " + std::to_string(gridMaxN) + "; 0 < m < n <= " +
                      std::to_string(maxN));
  long long counted = 0;
  for (int n = 2; n <= gridMaxN && rec.pass; n += 2) {
    auto ws = reducible_cc_witnesses(n, seed, trials);
    counted += 1LL << n;
    if (static_cast<long long>(ws.size()) != binomial(n, n / 2 - 1)) {
      rec.pass = false;
      rec.details = "n = " + std::to_string(n) + ": " +
                    std::to_string(ws.size()) + " subregular parameters, "
                    "expected " + std::to_string(binomial(n, n / 2 - 1));
    }
  }
  for (int n = 2; n <= maxN && rec.pass; ++n)
    for (int m = 1; m < n && rec.pass; ++m) {
      long long expected = 0;
      for (auto [j, c] : induced_witness_counts(n, m)) expected += c;
      auto records = generate_witnesses(n, m, seed, trials);
      counted += (1LL << m) + 2 * static_cast<long long>(records.size());
      if (static_cast<long long>(records.size()) != expected) {
        rec.pass = false;
        rec.details = "(n,m) = (" + std::to_string(n) + "," +
                      std::to_string(m) + "): " +
                      std::to_string(records.size()) + " records, expected " +
                      std::to_string(expected);
      }
    }
  if (rec.pass) rec.details = std::to_string(counted) + " parameters counted";
  rec.errorBound = detail::sz_bound(counted, gridMaxN, trials);
  return rec;
}

/// Rows (2,2,...,2) admit a signed diagram iff n is even and p = q = n/2.
inline CheckRecord check_spq_admissibility(int spqMaxN) {
  CheckRecord rec = make_check("signed-diagram-admissibility",
                  "rows (2^n) admissible iff n even and p = q = n/2",
                  "p + q = n <= " + std::to_string(spqMaxN));
  for (int n = 1; n <= spqMaxN && rec.pass; ++n)
    for (int p = 0; p <= n && rec.pass; ++p) {
      SignedPartitionQuery query;
      query.rowLengths.assign(static_cast<std::size_t>(n), 2);
      query.p = p;
      query.q = n - p;
      bool expected = n % 2 == 0 && p == n - p;
      if (spq_admissible(query) != expected) {
        rec.pass = false;
        rec.details = "(n,p,q) = (" + std::to_string(n) + "," +
                      std::to_string(p) + "," + std::to_string(n - p) + ")";
      }
    }
  if (rec.pass) rec.details = "all signatures scanned";
  return rec;
}

/// sum_k binomial(n, floor(k/2)) = 2^n: the fibers partition the coset.
inline CheckRecord check_partition_identity(int spqMaxN) {
  CheckRecord rec = make_check("fiber-partition-identity",
                  "sum of binomial(n, floor(k/2)) over k = 0..n equals 2^n",
                  "n <= " + std::to_string(spqMaxN));
  for (int n = 1; n <= spqMaxN && rec.pass; ++n) {
    long long sum = 0;
    for (int k = 0; k <= n; ++k) sum += binomial(n, k / 2);
    if (sum != (1LL << n)) {
      rec.pass = false;
      rec.details = "n = " + std::to_string(n) + ": sum " + std::to_string(sum);
    }
  }
  if (rec.pass) rec.details = "identity holds";
  return rec;
}

/// The full verification suite in canonical order.
inline VerificationReport run_verification(const VerifyOptions& opt) {
  if (opt.maxN < 1 || opt.maxN > 7)
    throw std::invalid_argument("run_verification: maxN must be in [1, 7]");
  if (opt.gridMaxN < 1 || opt.gridMaxN > 10)
    throw std::invalid_argument("run_verification: gridMaxN must be in [1, 10]");
  VerificationReport report;
  report.records.push_back(check_orbital_inclusion(opt.maxN));
  report.records.push_back(check_fiber_counts(opt.maxN, opt.seed, opt.trials));
  report.records.push_back(check_borel_dimension(opt.maxN, opt.seed, opt.trials));
  report.records.push_back(check_cell_sizes(opt.maxN, opt.seed, opt.trials));
  report.records.push_back(
      check_saturation_grid(opt.gridMaxN, opt.seed, opt.trials));
  report.records.push_back(
      check_transfer_consistency(opt.maxN, opt.seed, opt.trials));
  report.records.push_back(
      check_witness_counts(opt.maxN, opt.gridMaxN, opt.seed, opt.trials));
  report.records.push_back(check_spq_admissibility(opt.spqMaxN));
  report.records.push_back(check_partition_identity(opt.spqMaxN));
  return report;
}

} // namespace ltc
