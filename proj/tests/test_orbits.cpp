#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <map>

#include "ltc/orbits.hpp"

using namespace ltc;

namespace {

// Oracle for signed diagram admissibility: enumerate every assignment of
// starting signs to rows and test the two row rules plus the box totals
// directly.  The library implementation searches per length class; this
// checks raw assignments, one bit per row.
bool spq_admissible_bruteforce(const std::vector<int>& rows, int p, int q) {
  const int r = static_cast<int>(rows.size());
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    long long plus = 0, minus = 0;
    bool ok = true;
    // Rule bookkeeping per row length.
    std::map<int, std::array<int, 2>> starts; // length -> {plus-initial, minus-initial}
    for (int i = 0; i < r; ++i) {
      bool plus_initial = (mask >> i) & 1u;
      int len = rows[static_cast<std::size_t>(i)];
      starts[len][plus_initial ? 0 : 1]++;
      plus += plus_initial ? (len + 1) / 2 : len / 2;
      minus += plus_initial ? len / 2 : (len + 1) / 2;
    }
    for (auto& [len, counts] : starts) {
      int total = counts[0] + counts[1];
      if (total % 2 != 0) ok = false;
      if (len % 2 == 0 && counts[0] != counts[1]) ok = false;
      if (len % 2 != 0 && (counts[0] % 2 != 0 || counts[1] % 2 != 0)) ok = false;
    }
    if (ok && plus == 2LL * p && minus == 2LL * q) return true;
  }
  return false;
}

} // namespace

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(3, 4) == 0);
}

TEST_CASE("orbit partitions") {
  CHECK(partition_of(OrbitLabel(4, 4)) == std::vector<int>{2, 2, 2, 2});
  CHECK(partition_of(OrbitLabel(3, 0)) == std::vector<int>(6, 1));
  CHECK(partition_of(OrbitLabel(3, 2)) == std::vector<int>{2, 2, 1, 1});
  CHECK(partition_to_string(partition_of(OrbitLabel(3, 2))) == "2,2,1,1");
  CHECK_THROWS_AS(OrbitLabel(3, 4), std::invalid_argument);
}

TEST_CASE("special orbits") {
  CHECK_FALSE(is_special(OrbitLabel(4, 3)));
  CHECK(is_special(OrbitLabel(5, 5)));
  CHECK(is_special(OrbitLabel(5, 0)));
  for (int n = 1; n <= 10; ++n)
    for (int k = 0; k <= n; ++k)
      if (!is_special(OrbitLabel(n, k))) {
        CHECK(k % 2 == 1);
        CHECK(k < n);
      }
}

TEST_CASE("Springer dimensions and conormal counts") {
  CHECK(springer_dim(OrbitLabel(4, 4)) == 6);
  CHECK(springer_dim(OrbitLabel(3, 0)) == 1);
  CHECK(springer_dim(OrbitLabel(7, 0)) == 1);
  CHECK(springer_dim(OrbitLabel(5, 3)) == 5);

  CHECK(predicted_conormal_count(OrbitLabel(2, 2)) == 2);
  CHECK(predicted_conormal_count(OrbitLabel(2, 1)) == 1);
  CHECK(predicted_conormal_count(OrbitLabel(3, 3)) == 3);

  SECTION("paired ranks share the dimension") {
    for (int n = 1; n <= 10; ++n)
      for (int j = 1; 2 * j + 1 <= n; ++j)
        CHECK(springer_dim(OrbitLabel(n, 2 * j)) ==
              springer_dim(OrbitLabel(n, 2 * j + 1)));
  }

  SECTION("fibers partition the dominant coset") {
    for (int n = 1; n <= 10; ++n) {
      long long sum = 0;
      for (int k = 0; k <= n; ++k)
        sum += predicted_conormal_count(OrbitLabel(n, k));
      CHECK(sum == (1LL << n));
    }
  }
}

TEST_CASE("signed diagram admissibility") {
  SECTION("the two-row-length-two family") {
    for (int n = 1; n <= 10; ++n)
      for (int p = 0; p <= n; ++p) {
        SignedPartitionQuery query;
        query.rowLengths.assign(static_cast<std::size_t>(n), 2);
        query.p = p;
        query.q = n - p;
        bool expected = n % 2 == 0 && p == n - p;
        CHECK(spq_admissible(query) == expected);
      }
  }

  SECTION("agreement with the raw assignment oracle on mixed partitions") {
    const std::vector<std::vector<int>> shapes = {
        {2, 2},       {2, 2, 1, 1},    {1, 1, 1, 1}, {3, 3, 1, 1},
        {2, 2, 2, 2}, {4, 4},          {3, 3, 2, 2}, {2, 1, 1},
        {5, 5, 1, 1}, {3, 3, 3, 3, 2, 2}};
    for (const auto& rows : shapes) {
      long long total = 0;
      for (int len : rows) total += len;
      if (total % 2 != 0) continue;
      for (int p = 0; 2 * p <= total; ++p) {
        int q = static_cast<int>(total / 2) - p;
        SignedPartitionQuery query{rows, p, q};
        CHECK(spq_admissible(query) == spq_admissible_bruteforce(rows, p, q));
      }
    }
  }

  SECTION("inconsistent totals rejected") {
    SignedPartitionQuery query{{2, 2}, 3, 3};
    CHECK_THROWS_AS(spq_admissible(query), std::invalid_argument);
  }
}
