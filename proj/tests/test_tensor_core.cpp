#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "border3/normal_forms.hpp"
#include "border3/random.hpp"
#include "border3/tensor.hpp"
#include "oracles.hpp"

using namespace border3;

namespace {

Tensor rank_one(const Vector& a, const Vector& b, const Vector& c) { return outer({a, b, c}); }

}  // namespace

TEST_CASE("make_tensor validates shape") {
  const Tensor id = make_tensor({2, 2}, {1, 0, 0, 1});
  CHECK(id.dims() == Dims{2, 2});
  CHECK(id[{0, 0}] == 1);
  CHECK(id[{0, 1}] == 0);
  CHECK(id[{1, 1}] == 1);
  CHECK_THROWS_AS(make_tensor({2, 2}, {1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_tensor({2, 0}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_tensor({4}, {1, 2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Tensor::zeros({1000, 1000, 2}), std::invalid_argument);
}

TEST_CASE("entries are stored exactly") {
  const Tensor t = make_tensor({1, 2}, {Rational(1, 3), Rational(-7, 11)});
  CHECK(t.at(0) == Rational(1, 3));
  CHECK(t.at(1) == Rational(-7, 11));
}

TEST_CASE("orbit 39 representative is diag(s,t,u)") {
  const Tensor t = orbit_representative(39);
  for (std::size_t v = 0; v < 3; ++v) {
    const Matrix s = slice(t, 0, v);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(s(i, j) == (i == v && j == v ? 1 : 0));
  }
}

TEST_CASE("flatten matches the definition and has the documented shape") {
  Sampler rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor t = rng.tensor({2, 3, 4});
    for (std::size_t m = 0; m < 3; ++m) {
      const Matrix f = flatten(t, m);
      CHECK(f.rows() == t.dim(m));
      CHECK(f.cols() == 24 / t.dim(m));
      CHECK(f == oracle::flatten_by_definition(t, m));
    }
  }
  CHECK_THROWS_AS(flatten(Tensor::zeros({2, 2}), 2), std::invalid_argument);
}

TEST_CASE("flattening ranks of simple tensors") {
  const Tensor r1 = rank_one({1, 2, 3}, {0, 1, -1}, {5, 0, 2});
  for (std::size_t m = 0; m < 3; ++m) CHECK(rank(flatten(r1, m)) == 1);

  const Tensor pi = sigma3_point({TypeTag::i, 3, {3, 3, 3}, std::nullopt});
  for (std::size_t m = 0; m < 3; ++m) {
    CHECK(rank(flatten(pi, m)) == 3);
    CHECK(oracle::rank_mod_p(flatten(pi, m)) == 3);
  }

  const Tensor o34 = orbit_representative(34);
  CHECK(rank(flatten(o34, 0)) == 3);
  CHECK(oracle::rank_mod_p(flatten(o34, 0)) == 3);
}

TEST_CASE("multilinear rank") {
  CHECK(multilinear_rank(Tensor::zeros({3, 3, 3})) == std::vector<std::size_t>{0, 0, 0});
  CHECK(multilinear_rank(sigma2_point(3, {0, 1, 2}, {3, 3, 3})) == std::vector<std::size_t>{2, 2, 2});
  Sampler rng(11);
  const Tensor g = rng.tensor({3, 3, 3});
  CHECK(multilinear_rank(g) == std::vector<std::size_t>{3, 3, 3});
}

TEST_CASE("multilinear rank never exceeds dims or the product of the others") {
  Sampler rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    Dims dims{static_cast<std::size_t>(rng.integer(1, 4)), static_cast<std::size_t>(rng.integer(1, 4)),
              static_cast<std::size_t>(rng.integer(1, 4))};
    // Sum of a random number of rank-one terms keeps ranks interesting.
    Tensor t = Tensor::zeros(dims);
    const int terms = rng.integer(0, 3);
    for (int k = 0; k < terms; ++k)
      t = t + outer({rng.vector(dims[0]), rng.vector(dims[1]), rng.vector(dims[2])});
    const auto r = multilinear_rank(t);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(r[i] <= dims[i]);
      CHECK(r[i] <= r[(i + 1) % 3] * r[(i + 2) % 3]);
      CHECK(r[i] <= static_cast<std::size_t>(terms));
    }
  }
}

TEST_CASE("concise core reconstructs the tensor") {
  SUBCASE("rank one") {
    const Tensor t = rank_one({1, 2, 3}, {0, 1, -1}, {5, 0, 2});
    const ConciseCore cc = concise_core(t);
    CHECK(cc.core.dims() == Dims{1, 1, 1});
    CHECK(cc.core.at(0) != 0);
    CHECK(apply_mode_maps(cc.core, cc.bases) == t);
  }
  SUBCASE("sigma2 point embedded in 5x5x5") {
    Sampler rng(3);
    const Tensor x = apply_gl(sigma2_point(3, {0, 1, 2}, {5, 5, 5}), rng.gl_tuple({5, 5, 5}));
    const ConciseCore cc = concise_core(x);
    CHECK(cc.core.dims() == Dims{2, 2, 2});
    CHECK(apply_mode_maps(cc.core, cc.bases) == x);
  }
  SUBCASE("concise input keeps its shape") {
    Sampler rng(4);
    const Tensor t = rng.tensor({3, 3, 3});
    const ConciseCore cc = concise_core(t);
    CHECK(cc.core.dims() == Dims{3, 3, 3});
    CHECK(apply_mode_maps(cc.core, cc.bases) == t);
  }
  SUBCASE("random low-rank tensors") {
    Sampler rng(5);
    for (int trial = 0; trial < 25; ++trial) {
      Tensor t = Tensor::zeros({4, 3, 5, 2});
      for (int k = 0; k < 2; ++k) t = t + outer({rng.vector(4), rng.vector(3), rng.vector(5), rng.vector(2)});
      if (t.is_zero()) continue;
      const ConciseCore cc = concise_core(t);
      CHECK(cc.core.dims() == multilinear_rank(t));
      CHECK(apply_mode_maps(cc.core, cc.bases) == t);
    }
  }
  CHECK_THROWS_AS(concise_core(Tensor::zeros({2, 2, 2})), std::invalid_argument);
}

TEST_CASE("GL action") {
  Sampler rng(21);
  const Tensor t = rng.tensor({3, 2, 3});
  CHECK(apply_gl(t, GLTuple::identity(t.dims())) == t);
  for (int trial = 0; trial < 10; ++trial) {
    const GLTuple g = rng.gl_tuple(t.dims());
    const Tensor gt = apply_gl(t, g);
    CHECK(apply_gl(gt, g.inverse()) == t);
    CHECK(multilinear_rank(gt) == multilinear_rank(t));
  }
  CHECK_THROWS_AS(apply_gl(t, GLTuple::identity({3, 3, 3})), std::invalid_argument);
  CHECK_THROWS_AS(GLTuple({Matrix(2, 2)}), std::invalid_argument);
}

TEST_CASE("contract produces slices") {
  const Tensor o39 = orbit_representative(39);
  const Tensor x = contract(o39, 0, {1, 0, 0});
  CHECK(x.dims() == Dims{3, 3});
  CHECK(x.entries() == std::vector<Rational>{1, 0, 0, 0, 0, 0, 0, 0, 0});

  CHECK(contract(o39, 1, {0, 0, 0}).is_zero());

  const Tensor x37 = contract(orbit_representative(37), 0, {0, 0, 1});
  CHECK(x37.entries() == std::vector<Rational>{1, 0, 0, 0, 0, 0, 0, 0, 0});

  CHECK_THROWS_AS(contract(o39, 0, {1, 0}), std::invalid_argument);
}

TEST_CASE("contraction is linear in the covector") {
  Sampler rng(31);
  const Tensor t = rng.tensor({3, 4, 2});
  const Vector a = rng.vector(4), b = rng.vector(4);
  Vector ab(4);
  for (std::size_t i = 0; i < 4; ++i) ab[i] = a[i] + 2 * b[i];
  CHECK(contract(t, 1, ab) == contract(t, 1, a) + Rational(2) * contract(t, 1, b));
}

TEST_CASE("mode permutation and grouping") {
  Sampler rng(41);
  const Tensor t = rng.tensor({2, 3, 4});
  const Tensor p = permute_modes(t, {2, 0, 1});
  CHECK(p.dims() == Dims{4, 2, 3});
  CHECK(p[{3, 1, 2}] == t[{1, 2, 3}]);
  const Tensor g = group_modes(t, {{0}, {1, 2}});
  CHECK(g.dims() == Dims{2, 12});
  CHECK(Matrix(2, 12, g.entries()) == flatten(t, 0));
  const Tensor h = group_modes(t, {{1}, {0, 2}});
  CHECK(Matrix(3, 8, h.entries()) == flatten(t, 1));
}
