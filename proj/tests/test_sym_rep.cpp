#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ltc/sym_rep.hpp"
#include "ltc/weyl.hpp"

using namespace ltc;

namespace {

Root find_root(int n, const std::string& name) {
  auto roots = positive_roots(n);
  for (const Root& alpha : roots)
    if (alpha.to_string() == name) return alpha;
  FAIL("no root named " + name);
  return roots[0];
}

// Tangent dimension of the full gl(n) congruence orbit at the single
// point f_k: span of { a^T f_k + f_k a : a in gl(n) }.  Entries are small
// integers, so F_p rank is the rank over Q; no sampling involved.
int gl_tangent_dim(int n, int k) {
  SymMatrixI base = f_k(k, n);
  std::vector<std::vector<Fp61>> rows;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      // a = E_pq: T = E_qp X + X E_pq.
      std::vector<std::vector<long long>> t(
          static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
      for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)] += base.at(p, j);
      for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(q)] += base.at(i, p);
      std::vector<Fp61> row;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          row.push_back(Fp61::from_int(t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
      rows.push_back(std::move(row));
    }
  DenseMatrix<Fp61> d(rows.size(), static_cast<std::size_t>(n) * (n + 1) / 2);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < d.cols; ++c) d.at(r, c) = rows[r][c];
  return rank_mod_p(std::move(d));
}

} // namespace

TEST_CASE("root matrices") {
  SymMatrixI long1 = root_matrix(find_root(2, "2e1"), 2);
  CHECK(long1.at(0, 0) == 1);
  CHECK(long1.at(0, 1) == 0);
  CHECK(long1.at(1, 1) == 0);

  SymMatrixI shrt = root_matrix(find_root(2, "e1+e2"), 2);
  CHECK(shrt.at(0, 1) == 1);
  CHECK(shrt.at(1, 0) == 1);
  CHECK(shrt.at(0, 0) == 0);

  SymMatrixI long3 = root_matrix(find_root(3, "2e3"), 3);
  CHECK(long3.at(2, 2) == 1);
  CHECK(long3 == f_k(1, 3, 2));

  CHECK_THROWS_AS(root_matrix(find_root(2, "e1-e2"), 2), std::invalid_argument);
  CHECK_THROWS_AS(root_matrix(find_root(3, "2e3"), 2), std::invalid_argument);
}

TEST_CASE("orbit base points") {
  SymMatrixI m = f_k(2, 3);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(1, 1) == 1);
  CHECK(m.at(2, 2) == 0);
  CHECK(f_k(0, 4, 2).is_zero());
  SymMatrixI e44 = f_k(1, 4, 3);
  CHECK(e44.at(3, 3) == 1);
  CHECK_THROWS_AS(f_k(2, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(f_k(-1, 3), std::invalid_argument);
}

TEST_CASE("generic rank of simple families") {
  SECTION("single diagonal generator") {
    SymFamily fam;
    fam.base = SymMatrixI(2);
    fam.generators.push_back(f_k(1, 2));
    CHECK(generic_rank(fam) == 1);
  }
  SECTION("bordered two generator family has full rank") {
    RootSet s(2);
    s.insert(parse_root_index("e1+e2", 2));
    s.insert(parse_root_index("2e2", 2));
    CHECK(generic_rank(span_family(s)) == 2);
  }
  SECTION("all of sym(n) contains invertibles") {
    for (int n = 1; n <= 8; ++n)
      CHECK(generic_rank(span_family(noncompact_root_set(n))) == n);
  }
  CHECK_THROWS_AS(generic_rank(SymFamily{}, 0, 0), std::invalid_argument);
}

TEST_CASE("generic rank is congruence invariant") {
  std::mt19937_64 rng(777);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      // Random symmetric X over F_p and random invertible g.
      SymMatrix<Fp61> x(n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          if (rng() % 3 == 0) x.set(i, j, random_fp(rng));
      DenseMatrix<Fp61> g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      int grank = 0;
      while (grank < n) {
        for (std::size_t i = 0; i < g.rows; ++i)
          for (std::size_t j = 0; j < g.cols; ++j) g.at(i, j) = random_fp(rng);
        grank = rank_mod_p(g);
      }
      // g^T X g.
      DenseMatrix<Fp61> xd(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          xd.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = x.at(i, j);
      DenseMatrix<Fp61> tmp(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < tmp.rows; ++i)
        for (std::size_t j = 0; j < tmp.cols; ++j) {
          Fp61 s;
          for (std::size_t l = 0; l < g.rows; ++l) s = s + g.at(l, i) * xd.at(l, j);
          tmp.at(i, j) = s;
        }
      DenseMatrix<Fp61> conj(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < conj.rows; ++i)
        for (std::size_t j = 0; j < conj.cols; ++j) {
          Fp61 s;
          for (std::size_t l = 0; l < g.rows; ++l) s = s + tmp.at(i, l) * g.at(l, j);
          conj.at(i, j) = s;
        }
      CHECK(rank_mod_p(std::move(conj)) == rank_mod_p(std::move(xd)));
    }
  }
}

TEST_CASE("orbit dimensions") {
  CHECK(dim_Ok(2, 1) == 2);
  CHECK(dim_Ok(2, 2) == 3);
  CHECK(dim_Ok(5, 0) == 0);
  CHECK_THROWS_AS(dim_Ok(3, 4), std::invalid_argument);

  SECTION("full gl(n) tangent at f_k reproduces the formula") {
    for (int n = 1; n <= 5; ++n)
      for (int k = 0; k <= n; ++k) CHECK(gl_tangent_dim(n, k) == dim_Ok(n, k));
  }
}

TEST_CASE("Borel saturation dimension") {
  SECTION("empty family") {
    SymFamily fam;
    fam.base = SymMatrixI(3);
    CHECK(borbit_dim(fam) == 0);
  }
  SECTION("the rank two examples") {
    RootSet s1(2);
    s1.insert(parse_root_index("2e2", 2));
    CHECK(borbit_dim(span_family(s1)) == dim_Ok(2, 1));

    RootSet s2(2);
    s2.insert(parse_root_index("e1+e2", 2));
    s2.insert(parse_root_index("2e2", 2));
    CHECK(borbit_dim(span_family(s2)) == dim_Ok(2, 2));

    CHECK(borbit_dim(span_family(noncompact_root_set(2))) == 3);
  }
  SECTION("nonzero base rejected") {
    SymFamily fam;
    fam.base = f_k(1, 2);
    CHECK_THROWS_AS(borbit_dim(fam), std::invalid_argument);
  }
}

TEST_CASE("randomized rank is stable across seeds") {
  std::mt19937_64 pick(2024);
  int families = 0;
  for (int n = 2; n <= 5; ++n) {
    const RootSet pplus = noncompact_root_set(n);
    const std::vector<int> all = pplus.indices();
    for (int trial = 0; trial < 250; ++trial) {
      RootSet sub(n);
      for (int idx : all)
        if (pick() & 1) sub.insert(idx);
      SymFamily fam = span_family(sub);
      int r0 = generic_rank(fam, 4, 0);
      CHECK(generic_rank(fam, 4, 1) == r0);
      CHECK(generic_rank(fam, 4, 987654321) == r0);
      ++families;
    }
  }
  CHECK(families == 1000);
}
