#include <catch2/catch_amalgamated.hpp>

#include "ltc/parabolic.hpp"
#include "ltc/root_set.hpp"
#include "ltc/root_system.hpp"

using namespace ltc;

namespace {

// Independent oracle: rho as half the coordinate sum of the positive roots.
Weight half_sum_oracle(int n) {
  std::vector<int> sum(static_cast<std::size_t>(n), 0);
  for (const Root& alpha : positive_roots(n))
    for (int i = 0; i < n; ++i) sum[static_cast<std::size_t>(i)] += alpha.coords[i];
  for (int& c : sum) {
    REQUIRE(c % 2 == 0);
    c /= 2;
  }
  return Weight(sum);
}

} // namespace

TEST_CASE("positive root counts and classification") {
  CHECK(positive_roots(1).size() == 1);
  CHECK(positive_roots(1)[0].to_string() == "2e1");

  // n=2 in the documented order: compact block, sums, longs.
  auto r2 = positive_roots(2);
  REQUIRE(r2.size() == 4);
  CHECK(r2[0].to_string() == "e1-e2");
  CHECK(r2[1].to_string() == "e1+e2");
  CHECK(r2[2].to_string() == "2e1");
  CHECK(r2[3].to_string() == "2e2");

  auto r3 = positive_roots(3);
  REQUIRE(r3.size() == 9);
  int compact = 0, noncompact = 0;
  for (const Root& alpha : r3)
    (alpha.noncompact() ? noncompact : compact)++;
  CHECK(compact == 3);
  CHECK(noncompact == 6);

  for (int n = 1; n <= 8; ++n) {
    auto roots = positive_roots(n);
    CHECK(static_cast<int>(roots.size()) == n * n);
    int c = 0;
    for (const Root& alpha : roots)
      if (!alpha.noncompact()) ++c;
    CHECK(c == n * (n - 1) / 2);
    for (const Root& alpha : roots) {
      CHECK(is_positive_vector(alpha.coords));
      CHECK_FALSE(is_positive_vector(negate(alpha.coords)));
    }
  }

  CHECK_THROWS_AS(positive_roots(0), std::invalid_argument);
}

TEST_CASE("root order is stable under serialization") {
  for (int n : {2, 4, 7}) {
    auto roots = positive_roots(n);
    for (std::size_t idx = 0; idx < roots.size(); ++idx)
      CHECK(parse_root_index(roots[idx].to_string(), n) == static_cast<int>(idx));
  }
}

TEST_CASE("rho equals the half sum of positive roots") {
  CHECK(rho(1) == Weight({1}));
  CHECK(rho(2) == half_sum_oracle(2));
  CHECK(rho(2) == Weight({2, 1}));
  CHECK(rho(4) == half_sum_oracle(4));
  CHECK(rho(4) == Weight({4, 3, 2, 1}));
  for (int n = 1; n <= 8; ++n) CHECK(rho(n) == half_sum_oracle(n));
}

TEST_CASE("rho pairs to one with every simple coroot") {
  for (int n = 1; n <= 8; ++n) {
    const Weight r = rho(n);
    auto roots = positive_roots(n);
    // Simple roots: e_i - e_(i+1) and 2 e_n.
    for (const Root& alpha : roots) {
      bool simple = (alpha.kind == RootKind::CompactPositive && alpha.j == alpha.i + 1) ||
                    (alpha.kind == RootKind::NoncompactLong && alpha.i == n - 1);
      if (simple) CHECK(coroot_pairing(r, alpha) == 1);
    }
  }
}

TEST_CASE("compact dominance is weak decrease of coordinates") {
  CHECK(is_c_dominant(Weight({2, 1})));
  CHECK_FALSE(is_c_dominant(Weight({-2, -1})));
  CHECK(is_c_dominant(Weight({1, 1, 0})));
  CHECK(is_c_dominant(Weight({0})));
  CHECK_FALSE(is_c_dominant(Weight({0, 1})));
}

TEST_CASE("parabolic data") {
  SECTION("n=2, m=1") {
    ParabolicDatum q = parabolic(2, 1);
    CHECK(q.H == Weight({1, 0}));
    CHECK(q.uRoots.to_string() == "e1-e2,e1+e2,2e1");
    CHECK(q.leviRoots.to_string() == "2e2");
  }
  SECTION("n=4, m=2: sizes from the pairing oracle") {
    ParabolicDatum q = parabolic(4, 2);
    // Enumerate <alpha, H> directly.
    int in_u = 0, in_u_pplus = 0, levi = 0;
    for (const Root& alpha : positive_roots(4)) {
      long long pairing = dot(Weight({2, 1, 0, 0}), alpha.coords);
      if (pairing > 0) {
        ++in_u;
        if (alpha.noncompact()) ++in_u_pplus;
      } else {
        ++levi;
      }
    }
    CHECK(q.uRoots.count() == in_u);
    CHECK(q.uPplus.count() == in_u_pplus);
    CHECK(q.leviRoots.count() == levi);
    CHECK(q.uPplus.count() == 7);
    // |Delta(u)| = n^2 - m^2: the Levi carries the m^2 positive roots of C_m.
    CHECK(q.uRoots.count() == 16 - 4);
  }
  SECTION("n=3, m=0: u is everything") {
    ParabolicDatum q = parabolic(3, 0);
    CHECK(q.uRoots == full_root_set(3));
    CHECK(q.leviRoots.empty());
  }
  SECTION("u cap p equals u cap p_+, exhaustively") {
    for (int n = 1; n <= 8; ++n)
      for (int m = 0; m < n; ++m) {
        ParabolicDatum q = parabolic(n, m);
        CHECK(q.uRoots.set_intersection(noncompact_root_set(n)) == q.uPplus);
        CHECK(q.uRoots.count() == n * n - m * m);
      }
  }
  CHECK_THROWS_AS(parabolic(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(parabolic(3, 4), std::invalid_argument);
}

TEST_CASE("root set algebra") {
  RootSet a = RootSet::from_indices(3, {0, 2, 5});
  RootSet b = RootSet::from_indices(3, {2, 5, 7});
  CHECK(a.set_intersection(b).indices() == std::vector<int>{2, 5});
  CHECK(a.set_union(b).count() == 4);
  CHECK(a.set_intersection(b).subset_of(a));
  CHECK_FALSE(a.subset_of(b));
  CHECK(a.complement().count() == 9 - 3);
  CHECK(a.complement().complement() == a);
  CHECK_THROWS_AS(a.set_union(RootSet(2)), std::invalid_argument);
  CHECK_THROWS_AS(a.insert(9), std::out_of_range);
}
