#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "curvedhh/chain_complex.hpp"
#include "curvedhh/errors.hpp"
#include "curvedhh/sparse_matrix.hpp"

using namespace curvedhh;

namespace {

using Dense = std::vector<std::vector<long>>;

SparseMatrix to_sparse(Field f, const Dense& m, std::size_t cols) {
  std::vector<MatrixEntry> e;
  for (std::uint32_t r = 0; r < m.size(); ++r)
    for (std::uint32_t c = 0; c < cols; ++c)
      if (m[r][c]) e.push_back({r, c, Scalar(f, m[r][c])});
  return SparseMatrix::from_entries(f, m.size(), cols, std::move(e));
}

// Textbook dense elimination over Q.
std::size_t dense_rank_q(const Dense& m, std::size_t cols) {
  std::vector<std::vector<mpq_class>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    auto piv = std::find_if(a.begin() + static_cast<long>(r), a.end(), [c](const auto& row) { return row[c] != 0; });
    if (piv == a.end()) continue;
    std::swap(*piv, a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpq_class k = a[i][c] / a[r][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= k * a[r][j];
    }
    ++r;
  }
  return r;
}

// Counts the kernel over F_p by enumerating all p^cols vectors.
std::size_t brute_rank_mod(const Dense& m, std::size_t cols, long p) {
  std::vector<long> v(cols, 0);
  std::size_t kernel = 0, total = 0;
  while (true) {
    ++total;
    bool zero = true;
    for (const auto& row : m) {
      long s = 0;
      for (std::size_t j = 0; j < cols; ++j) s += row[j] * v[j];
      if (((s % p) + p) % p) {
        zero = false;
        break;
      }
    }
    kernel += zero;
    std::size_t j = 0;
    while (j < cols && ++v[j] == p) v[j++] = 0;
    if (j == cols) break;
  }
  std::size_t dim = 0;
  for (std::size_t k = kernel; k > 1; k /= static_cast<std::size_t>(p)) ++dim;
  (void)total;
  return cols - dim;
}

Dense random_dense(std::mt19937& rng, std::size_t rows, std::size_t cols, int density, long lo, long hi) {
  std::uniform_int_distribution<int> coin(0, 99);
  std::uniform_int_distribution<long> val(lo, hi);
  Dense m(rows, std::vector<long>(cols, 0));
  for (auto& row : m)
    for (auto& x : row)
      if (coin(rng) < density) x = val(rng);
  return m;
}

}  // namespace

TEST_CASE("rank of small hand examples") {
  const Field q = Field::rationals();
  CHECK(rank(SparseMatrix(q, 3, 4)) == 0);
  CHECK(rank(SparseMatrix::identity(q, 5)) == 5);
  CHECK(rank(to_sparse(q, {{1, 2}, {2, 4}}, 2)) == 1);
  CHECK(rank(to_sparse(q, {{1, 1, 0}, {0, 1, 1}, {1, 0, -1}}, 3)) == 2);
  // Rank 2 over Q but 1 over F2.
  const Dense m{{1, 1}, {1, -1}};
  CHECK(rank(to_sparse(q, m, 2)) == 2);
  CHECK(rank(to_sparse(Field::prime(2), m, 2)) == 1);
}

TEST_CASE("rank agrees with dense elimination over Q") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
    auto m = random_dense(rng, r, c, 40, -3, 3);
    // Force some dependent rows.
    if (r > 2) for (std::size_t j = 0; j < c; ++j) m[r - 1][j] = m[0][j] * 2 - m[1][j];
    CHECK(rank(to_sparse(Field::rationals(), m, c)) == dense_rank_q(m, c));
  }
}

TEST_CASE("rank over F_p agrees with a brute-force kernel count") {
  std::mt19937 rng(11);
  for (long p : {2L, 3L, 5L}) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % (p == 5 ? 4 : 6);
      const auto m = random_dense(rng, r, c, 60, -4, 4);
      CHECK(rank(to_sparse(Field::prime(static_cast<std::uint64_t>(p)), m, c)) == brute_rank_mod(m, c, p));
    }
  }
}

TEST_CASE("rank is invariant under row and column permutations and rank_Q >= rank_p") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 2 + rng() % 7, c = 2 + rng() % 7;
    const auto m = random_dense(rng, r, c, 50, -2, 2);
    std::vector<std::size_t> pr(r), pc(c);
    std::iota(pr.begin(), pr.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    std::shuffle(pr.begin(), pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    Dense perm(r, std::vector<long>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) perm[i][j] = m[pr[i]][pc[j]];
    const auto rq = rank(to_sparse(Field::rationals(), m, c));
    CHECK(rq == rank(to_sparse(Field::rationals(), perm, c)));
    for (std::uint64_t p : {2u, 3u, 7u}) CHECK(rq >= rank(to_sparse(Field::prime(p), m, c)));
  }
}

TEST_CASE("large rationals stay exact") {
  // Hilbert matrix is nonsingular; floating point loses this quickly.
  const std::size_t n = 12;
  std::vector<MatrixEntry> e;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) e.push_back({i, j, Scalar(Field::rationals(), mpq_class(1, i + j + 1))});
  CHECK(rank(SparseMatrix::from_entries(Field::rationals(), n, n, e)) == n);
}

TEST_CASE("matrix algebra") {
  const Field q = Field::rationals();
  const auto a = to_sparse(q, {{1, 2, 0}, {0, 1, 3}}, 3);
  const auto b = to_sparse(q, {{1, 0}, {0, 1}, {1, 1}}, 2);
  CHECK(a * b == to_sparse(q, {{1, 2}, {3, 4}}, 2));
  CHECK(a.transpose().transpose() == a);
  CHECK((-a).at(0, 1) == Scalar(q, -2));
  CHECK_THROWS_AS(b * b, ConfigurationError);
}

TEST_CASE("homology of small complexes") {
  const Field q = Field::rationals();
  SUBCASE("interval: C^0 = K^2 -> C^1 = K, d = [1 -1]") {
    FiniteChainComplex c(q, 0, {2, 1}, {to_sparse(q, {{1, -1}}, 2)});
    const auto h = homology_dims(c);
    CHECK(h.at(0) == 1);
    CHECK(h.at(1) == 0);
  }
  SUBCASE("circle as two vertices and two edges") {
    FiniteChainComplex c(q, 0, {2, 2}, {to_sparse(q, {{1, -1}, {1, -1}}, 2)});
    const auto h = homology_dims(c);
    CHECK(h.at(0) == 1);
    CHECK(h.at(1) == 1);
    CHECK(euler_characteristic(c) == 0);
  }
  SUBCASE("multiplication by 2 on Z is acyclic over Q but not over F2") {
    FiniteChainComplex cq(q, -1, {1, 1}, {to_sparse(q, {{2}}, 1)});
    FiniteChainComplex c2(Field::prime(2), -1, {1, 1}, {to_sparse(Field::prime(2), {{2}}, 1)});
    CHECK(homology_dims(cq).at(-1) == 0);
    CHECK(homology_dims(c2).at(-1) == 1);
    CHECK(homology_dims(c2).at(0) == 1);
  }
  SUBCASE("d∘d != 0 is rejected") {
    FiniteChainComplex c(q, 0, {1, 1, 1}, {to_sparse(q, {{1}}, 1), to_sparse(q, {{1}}, 1)});
    CHECK_THROWS_AS(c.validate(), InvalidComplexError);
  }
  SUBCASE("empty complex") { CHECK(homology_dims(FiniteChainComplex(q)).empty()); }
}

TEST_CASE("Euler characteristic of homology equals that of the chains") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    // d1 * d0 = 0 by building d0 from a kernel: d1 = [x], d0 = column with x . col = 0.
    const long x = 1 + static_cast<long>(rng() % 3);
    const Dense d0{{x, 0}, {-1, 0}, {0, 0}};
    const Dense d1{{1, x, static_cast<long>(rng() % 2)}};
    const Field q = Field::rationals();
    FiniteChainComplex c(q, 0, {2, 3, 1}, {to_sparse(q, d0, 2), to_sparse(q, d1, 3)});
    c.validate();
    CHECK(euler_characteristic(homology_dims(c)) == euler_characteristic(c));
  }
}

TEST_CASE("field parsing and scalars") {
  CHECK(Field::parse("Q").is_rational());
  CHECK(Field::parse("2").modulus() == 2);
  CHECK(Field::parse("F3").modulus() == 3);
  CHECK(Field::parse("Z/5").modulus() == 5);
  CHECK_THROWS_AS(Field::parse("4"), ConfigurationError);
  CHECK_THROWS_AS(Field::parse("R"), ConfigurationError);
  const Field f5 = Field::prime(5);
  CHECK(Scalar(f5, mpq_class(1, 2)) == Scalar(f5, 3));
  CHECK_THROWS_AS(Scalar(f5, mpq_class(1, 5)), ConfigurationError);
  CHECK(parse_rational_literal("-3/6") == mpq_class(-1, 2));
  CHECK_THROWS_AS(parse_rational_literal("0.5"), ConfigurationError);
  CHECK_THROWS_AS(parse_rational_literal("1/0"), ConfigurationError);
}
