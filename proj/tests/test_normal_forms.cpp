#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "border3/algebra.hpp"
#include "border3/graded_maps.hpp"
#include "border3/normal_forms.hpp"
#include "border3/random.hpp"
#include "oracles.hpp"

using namespace border3;

namespace {

Matrix random_skew(Sampler& rng, std::size_t k) {
  Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      m(i, j) = rng.integer(-3, 3);
      m(j, i) = -m(i, j);
    }
  return m;
}

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  return s;
}

std::size_t count_nonzero(const Vector& v, std::size_t from, std::size_t to) {
  std::size_t c = 0;
  for (std::size_t i = from; i < to; ++i)
    if (v[i] != 0) ++c;
  return c;
}

}  // namespace

TEST_CASE("sigma2 normal form") {
  const Tensor x = sigma2_point(3, {0, 1, 2}, {2, 2, 2});
  const Tensor expected = tensor_from_terms({2, 2, 2}, {{{0, 0, 1}, 1}, {{0, 1, 0}, 1}, {{1, 0, 0}, 1}});
  CHECK(x == expected);

  const Tensor b = sigma2_point(3, {0, 1}, {2, 2, 2});
  CHECK(multilinear_rank(b) == std::vector<std::size_t>{2, 2, 1});

  CHECK_THROWS_AS(sigma2_point(3, {3}, {2, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(sigma2_point(3, {0, 1}, {1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(sigma2_point(3, {}, {2, 2, 2}), std::invalid_argument);
}

TEST_CASE("sigma2 flattening ranks are 2 on J and 1 off J") {
  for (std::size_t n = 3; n <= 5; ++n)
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> J;
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (1u << j)) J.push_back(j);
      if (J.size() < 2) continue;
      const Tensor x = sigma2_point(n, J, Dims(n, 2));
      const auto r = multilinear_rank(x);
      for (std::size_t j = 0; j < n; ++j) CHECK(r[j] == ((mask & (1u << j)) ? 2u : 1u));
    }
}

TEST_CASE("sigma3 normal forms") {
  const Tensor pi = sigma3_point({TypeTag::i, 3, {}, std::nullopt});
  CHECK(pi == tensor_from_terms({3, 3, 3}, {{{0, 0, 0}, 1}, {{1, 1, 1}, 1}, {{2, 2, 2}, 1}}));

  // a1 b2 c2 + a2 b1 c2 + a2 b2 c1 + a1 b1 c3 + a1 b3 c1 + a3 b1 c1 (1-based).
  const Tensor piii = sigma3_point({TypeTag::iii, 3, {}, std::nullopt});
  CHECK(piii == tensor_from_terms({3, 3, 3}, {{{0, 1, 1}, 1},
                                              {{1, 0, 1}, 1},
                                              {{1, 1, 0}, 1},
                                              {{0, 0, 2}, 1},
                                              {{0, 2, 0}, 1},
                                              {{2, 0, 0}, 1}}));

  for (std::size_t n = 3; n <= 6; ++n) {
    CHECK(sigma3_terms({TypeTag::iii, n, {}, std::nullopt}).size() == n * (n + 1) / 2);
    CHECK(sigma3_terms({TypeTag::ii, n, {}, std::nullopt}).size() == n + 1);
    CHECK(sigma3_terms({TypeTag::iv, n, {}, 0}).size() == 2 * n - 1);
  }

  CHECK_THROWS_AS(sigma3_point({TypeTag::iv, 3, {}, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(sigma3_point({TypeTag::i, 3, {3, 2, 3}, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(sigma3_point({TypeTag::iv, 3, {}, 3}), std::invalid_argument);
}

TEST_CASE("type iv normal forms for other distinguished factors are mode permutations") {
  const Tensor base = sigma3_point({TypeTag::iv, 4, {}, 0});
  for (std::size_t f = 1; f < 4; ++f) {
    std::vector<std::size_t> perm{0, 1, 2, 3};
    std::swap(perm[0], perm[f]);
    CHECK(sigma3_point({TypeTag::iv, 4, {}, f}) == permute_modes(base, perm));
  }
}

TEST_CASE("orbit representatives match the table's slice patterns") {
  // Slices along mode 0 as s*X + t*Y + u*Z, written as coefficient matrices.
  auto slices = [](int id) {
    const Tensor t = orbit_representative(id);
    return std::vector<Matrix>{slice(t, 0, 0), slice(t, 0, 1), slice(t, 0, 2)};
  };
  auto m = [](std::initializer_list<int> e) { return Matrix(3, 3, std::vector<Rational>(e.begin(), e.end())); };

  // diag(s,t,u)
  CHECK(slices(39) == std::vector<Matrix>{m({1, 0, 0, 0, 0, 0, 0, 0, 0}), m({0, 0, 0, 0, 1, 0, 0, 0, 0}),
                                          m({0, 0, 0, 0, 0, 0, 0, 0, 1})});
  // [[u,t,s],[t,s,0],[s,0,0]]
  CHECK(slices(37) == std::vector<Matrix>{m({0, 0, 1, 0, 1, 0, 1, 0, 0}), m({0, 1, 0, 1, 0, 0, 0, 0, 0}),
                                          m({1, 0, 0, 0, 0, 0, 0, 0, 0})});
  // [[t,s,u],[s,0,0],[u,0,0]]
  CHECK(slices(34) == std::vector<Matrix>{m({0, 1, 0, 1, 0, 0, 0, 0, 0}), m({1, 0, 0, 0, 0, 0, 0, 0, 0}),
                                          m({0, 0, 1, 0, 0, 0, 1, 0, 0})});
  // [[t,s,0],[s,0,0],[0,0,u]]
  CHECK(slices(38) == std::vector<Matrix>{m({0, 1, 0, 1, 0, 0, 0, 0, 0}), m({1, 0, 0, 0, 0, 0, 0, 0, 0}),
                                          m({0, 0, 0, 0, 0, 0, 0, 0, 1})});
  CHECK_THROWS_AS(orbit_representative(33), std::invalid_argument);
  CHECK_THROWS_AS(orbit_representative(40), std::invalid_argument);
}

TEST_CASE("rows 35 and 36 are mode swaps of row 34") {
  CHECK(orbit_representative(35) == permute_modes(orbit_representative(34), {1, 0, 2}));
  CHECK(orbit_representative(36) == permute_modes(orbit_representative(34), {2, 1, 0}));
}

TEST_CASE("Grassmannian coordinates") {
  const Vector zero = grassmann_phi(Matrix(3, 3), 3, 6, false);
  CHECK(zero.size() == 20);  // C(6,3)
  CHECK(zero[0] == 1);
  CHECK(count_nonzero(zero, 1, zero.size()) == 0);

  const Vector e1 = grassmann_phi(epsilon(1, 3, 3), 3, 6, false);
  CHECK(count_nonzero(e1, 10, 20) == 0);  // all minors of size >= 2 vanish

  const Vector e2 = grassmann_phi(epsilon(2, 3, 3), 3, 6, false);
  CHECK(count_nonzero(e2, 10, 19) == 1);  // 2x2 minors occupy slots 10..18
  CHECK(e2[10] == 1);                     // rows {0,1}, cols {0,1}
  CHECK(e2[19] == 0);

  CHECK(grassmann_phi(Matrix(2, 4), 2, 6, false).size() == 15);
  CHECK_THROWS_AS(grassmann_phi(Matrix(3, 2), 3, 6, false), std::invalid_argument);
  Matrix nonsym(2, 2);
  nonsym(0, 1) = 1;
  CHECK_THROWS_AS(grassmann_phi(nonsym, 2, 4, true), std::invalid_argument);
  CHECK(grassmann_phi(Matrix::identity(3), 3, 6, true).size() == 20);
}

TEST_CASE("minor coordinates satisfy Cauchy-Binet") {
  Sampler rng(201);
  for (int trial = 0; trial < 3; ++trial) {
    const Matrix m = rng.matrix(3, 4, 4, 1), n = rng.matrix(4, 3, 4, 1);
    const Matrix mn = m * n;
    for (std::size_t s = 1; s <= 3; ++s)
      for (const auto& rows : combinations(3, s))
        for (const auto& cols : combinations(3, s)) {
          Rational sum = 0;
          for (const auto& mid : combinations(4, s))
            sum += oracle::det_leibniz(submatrix(m, rows, mid)) * oracle::det_leibniz(submatrix(n, mid, cols));
          CHECK(oracle::det_leibniz(submatrix(mn, rows, cols)) == sum);
          // The library's minor coordinates agree with the Leibniz minors.
          const Vector phi = minor_coordinates(mn.entries(), 3, 3, Rational(0));
          std::size_t offset = 0;
          for (std::size_t q = 0; q < s; ++q) offset += combinations(3, q).size() * combinations(3, q).size();
          std::size_t ri = 0, ci = 0;
          const auto all_rows = combinations(3, s), all_cols = combinations(3, s);
          while (all_rows[ri] != rows) ++ri;
          while (all_cols[ci] != cols) ++ci;
          CHECK(phi[offset + ri * all_cols.size() + ci] == sum);
        }
  }
}

TEST_CASE("Pfaffians") {
  Matrix j(2, 2);
  j(0, 1) = 1;
  j(1, 0) = -1;
  CHECK(pfaffian(j) == 1);

  Sampler rng(202);
  for (std::size_t k = 2; k <= 8; ++k)
    for (int trial = 0; trial < 3; ++trial) {
      const Matrix m = random_skew(rng, k);
      const Rational pf = pfaffian(m);
      CHECK(pf * pf == oracle::det_leibniz(m));
      if (k % 2 == 1) CHECK(pf == 0);
    }
}

TEST_CASE("spinor coordinates") {
  const Vector e1 = spinor_phi(epsilon_skew(1, 6), 6);
  CHECK(e1.size() == 32);  // 2^(k-1)
  // Slots: 1 | 15 entries m_ij | 15 Pf_4 | 1 Pf_6.
  CHECK(count_nonzero(e1, 16, 32) == 0);

  const Vector e2 = spinor_phi(epsilon_skew(2, 6), 6);
  CHECK(count_nonzero(e2, 16, 31) == 1);
  // With the standard sign convention Pf of [[0,I2],[-I2,0]] is -1.
  CHECK(e2[16] == -1);
  CHECK(e2[31] == 0);

  CHECK_THROWS_AS(spinor_phi(Matrix::identity(4), 4), std::invalid_argument);
  CHECK(spinor_phi(Matrix(5, 5), 5).size() == 16);
}
