#pragma once

#include <stdexcept>

#include "ltc/root_set.hpp"
#include "ltc/root_system.hpp"

namespace ltc {

/// Data of the theta-stable parabolic q = l + u defined by the dominant
/// vector H = (n-m, ..., 2, 1, 0, ..., 0).  The Levi is C^(n-m) + sp(2m)
/// sitting on the last m coordinates; u collects the positive roots
/// pairing strictly positively with H.
struct ParabolicDatum {
  int n = 0;
  int m = 0;
  Weight H;
  RootSet uRoots;    // Delta(u)
  RootSet uPplus;    // Delta(u) intersect Delta(p_+)
  RootSet leviRoots; // positive roots vanishing on H
};

inline ParabolicDatum parabolic(int n, int m) {
  if (n < 1 || m < 0 || m >= n)
    throw std::invalid_argument("parabolic: need 0 <= m < n");
  std::vector<int> h(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n - m; ++i) h[static_cast<std::size_t>(i)] = n - m - i;

  ParabolicDatum q;
  q.n = n;
  q.m = m;
  q.H = Weight(std::move(h));
  q.uRoots = RootSet(n);
  q.uPplus = RootSet(n);
  q.leviRoots = RootSet(n);

  const std::vector<Root> roots = positive_roots(n);
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    long long pairing = dot(q.H, roots[idx].coords);
    if (pairing > 0) {
      q.uRoots.insert(static_cast<int>(idx));
      if (roots[idx].noncompact()) q.uPplus.insert(static_cast<int>(idx));
    } else if (pairing == 0) {
      q.leviRoots.insert(static_cast<int>(idx));
    }
  }

  // u intersect p equals u intersect p_+ : Delta(u) contains no negative
  // noncompact root, so the identity reduces to the bitmask equality below.
  if (q.uRoots.set_intersection(noncompact_root_set(n)) != q.uPplus)
    throw std::logic_error("parabolic: u-cap-p identity violated");
  return q;
}

} // namespace ltc
