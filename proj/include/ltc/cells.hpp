#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ltc/orbits.hpp"
#include "ltc/sym_rep.hpp"
#include "ltc/weyl.hpp"

namespace ltc {

enum class LtcFlag { InLTC, NotInLTC };

inline const char* to_string(LtcFlag f) {
  return f == LtcFlag::InLTC ? "InLTC" : "NotInLTC";
}

/// One dominant parameter w together with the computed invariants of its
/// support conormal: the root set n cap n^w, the generic rank k of its
/// span (the orbit the conormal maps onto), the cell containing the
/// parameter, and whether that conormal can carry the leading term.
/// The conormal is excluded exactly when the target orbit is not special.
struct FiberEntry {
  SignedPermutation w;
  RootSet rootset;
  int k = 0;
  std::string cell;
  LtcFlag ltcFlag = LtcFlag::InLTC;
};

/// Name of the cell containing the rank-k parameters: ranks 2j-1 and 2j
/// share the cell C_{2j}; for n odd the top rank n forms its own cell C_n.
inline std::string cell_id(int n, int k) {
  if (n % 2 != 0 && k == n) return "C" + std::to_string(n);
  return "C" + std::to_string(2 * ((k + 1) / 2));
}

/// One entry per dominant parameter, sorted by (k, serialized w); the
/// rank of entry i is computed with the RNG stream (seed, i) taken in
/// enumeration order, so results are schedule independent.
inline std::vector<FiberEntry> fiber_map(int n, std::uint64_t seed = 0,
                                         int trials = 4) {
  if (n < 1) throw std::invalid_argument("fiber_map: rank must be >= 1");
  const std::vector<SignedPermutation> reps = dominant_reps(n);
  const RootSet pplus = noncompact_root_set(n);

  std::vector<FiberEntry> entries;
  entries.reserve(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    FiberEntry e;
    e.w = reps[i];
    e.rootset = n_cap_nw(e.w);
    if (!e.rootset.subset_of(pplus))
      throw std::logic_error("fiber_map: dominant parameter with compact root in "
                             "n cap n^w; positivity convention bug");
    e.k = generic_rank(span_family(e.rootset), trials,
                       rng_stream(seed, i)());
    e.cell = cell_id(n, e.k);
    e.ltcFlag = is_special(OrbitLabel(n, e.k)) ? LtcFlag::InLTC : LtcFlag::NotInLTC;
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(),
            [](const FiberEntry& a, const FiberEntry& b) {
              if (a.k != b.k) return a.k < b.k;
              return a.w.to_string() < b.w.to_string();
            });
  return entries;
}

inline std::vector<long long> observed_fibers(const std::vector<FiberEntry>& entries,
                                              int n) {
  std::vector<long long> fibers(static_cast<std::size_t>(n) + 1, 0);
  for (const FiberEntry& e : entries) ++fibers[static_cast<std::size_t>(e.k)];
  return fibers;
}

struct GeoCheck {
  bool ok = true;
  // (k, observed, predicted) for every k; discrepancies have obs != pred.
  std::vector<std::array<long long, 3>> rows;
};

inline GeoCheck geo_from_entries(const std::vector<FiberEntry>& entries, int n) {
  const std::vector<long long> fibers = observed_fibers(entries, n);
  GeoCheck out;
  for (int k = 0; k <= n; ++k) {
    long long pred = predicted_conormal_count(OrbitLabel(n, k));
    out.rows.push_back({static_cast<long long>(k),
                        fibers[static_cast<std::size_t>(k)], pred});
    if (fibers[static_cast<std::size_t>(k)] != pred) out.ok = false;
  }
  return out;
}

/// Compares the observed fiber sizes against binomial(n, floor(k/2)).
inline GeoCheck verify_geo(int n, std::uint64_t seed = 0, int trials = 4) {
  return geo_from_entries(fiber_map(n, seed, trials), n);
}

/// The full per-n survey: the fiber table plus the count comparison.
struct SurveyReport {
  int n = 0;
  std::uint64_t seed = 0;
  int trials = 4;
  std::vector<FiberEntry> entries;
  GeoCheck geo;
};

inline SurveyReport make_survey(int n, std::uint64_t seed = 0, int trials = 4) {
  SurveyReport report;
  report.n = n;
  report.seed = seed;
  report.trials = trials;
  report.entries = fiber_map(n, seed, trials);
  report.geo = geo_from_entries(report.entries, n);
  return report;
}

struct CellInfo {
  std::string cellId;
  std::vector<int> memberRanks;
  long long observedSize = 0;
  long long predictedSize = 0;
};

struct CellReport {
  int n = 0;
  std::vector<CellInfo> cells;
};

/// Groups the fiber map into cells {2j-1, 2j} (plus {n} alone for n odd)
/// with the predicted sizes binomial(n,j) + binomial(n,j-1), and
/// binomial(n,(n-1)/2) for the odd top cell.
inline CellReport cell_partition(int n, std::uint64_t seed = 0, int trials = 4) {
  const std::vector<FiberEntry> entries = fiber_map(n, seed, trials);
  const std::vector<long long> fibers = observed_fibers(entries, n);

  CellReport report;
  report.n = n;
  const int jmax = n % 2 == 0 ? n / 2 : (n - 1) / 2;
  for (int j = 0; j <= jmax; ++j) {
    CellInfo cell;
    cell.cellId = "C" + std::to_string(2 * j);
    if (2 * j - 1 >= 0) {
      cell.memberRanks.push_back(2 * j - 1);
      cell.observedSize += fibers[static_cast<std::size_t>(2 * j - 1)];
    }
    cell.memberRanks.push_back(2 * j);
    cell.observedSize += fibers[static_cast<std::size_t>(2 * j)];
    cell.predictedSize = binomial(n, j) + binomial(n, j - 1);
    report.cells.push_back(std::move(cell));
  }
  if (n % 2 != 0) {
    CellInfo top;
    top.cellId = "C" + std::to_string(n);
    top.memberRanks.push_back(n);
    top.observedSize = fibers[static_cast<std::size_t>(n)];
    top.predictedSize = binomial(n, (n - 1) / 2);
    report.cells.push_back(std::move(top));
  }
  return report;
}

/// For n even, the parameters whose support conormal maps onto the
/// subregular orbit O_{n-1}.  That orbit is not special, so these
/// conormals cannot carry the leading term, and the characteristic cycle
/// of each such parameter must contain a second conormal: these are the
/// reducible characteristic cycle witnesses.  Count: binomial(n, n/2-1).
inline std::vector<FiberEntry> reducible_cc_witnesses(int n,
                                                      std::uint64_t seed = 0,
                                                      int trials = 4) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("reducible_cc_witnesses: rank must be even, >= 2");
  std::vector<FiberEntry> out;
  for (FiberEntry& e : fiber_map(n, seed, trials))
    if (e.k == n - 1) out.push_back(std::move(e));
  return out;
}

struct CellSizeComparison {
  std::string cellId;
  long long cellSize = 0;
  long long springerDim = 0;
  bool strict = false; // cell strictly larger: reducible characteristic cycles
};

/// Compares each cell size against the Springer dimension of the top
/// orbit in the cell; a strict inequality certifies that the cell
/// contains parameters with reducible characteristic cycle.
inline std::vector<CellSizeComparison> cell_size_comparison(int n,
                                                         std::uint64_t seed = 0,
                                                         int trials = 4) {
  const CellReport report = cell_partition(n, seed, trials);
  std::vector<CellSizeComparison> out;
  for (const CellInfo& cell : report.cells) {
    CellSizeComparison row;
    row.cellId = cell.cellId;
    row.cellSize = cell.observedSize;
    int top = *std::max_element(cell.memberRanks.begin(), cell.memberRanks.end());
    row.springerDim = springer_dim(OrbitLabel(n, top));
    row.strict = row.cellSize > row.springerDim;
    out.push_back(std::move(row));
  }
  return out;
}

} // namespace ltc
