#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "border3/classifier.hpp"
#include "border3/equations.hpp"
#include "border3/kernels.hpp"
#include "border3/limits.hpp"
#include "border3/random.hpp"
#include "oracles.hpp"

using namespace border3;

namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector e(n);
  e[i] = 1;
  return e;
}

// Segre tangent vector -> the factor vectors e_0 + x_f.
std::vector<Vector> segre_factors(const std::vector<std::size_t>& dims, const Vector& x) {
  std::vector<Vector> out;
  std::size_t pos = 0;
  for (auto d : dims) {
    Vector f(d);
    f[0] = 1;
    for (std::size_t j = 1; j < d; ++j) f[j] = x[pos++];
    out.push_back(f);
  }
  return out;
}

// The tangent coordinates of a single factor, embedded in the factor's space.
Vector factor_part(const std::vector<std::size_t>& dims, const Vector& x, std::size_t factor) {
  Vector f(dims[factor]);
  std::size_t pos = 0;
  for (std::size_t g = 0; g < factor; ++g) pos += dims[g] - 1;
  for (std::size_t j = 1; j < dims[factor]; ++j) f[j] = x[pos + j - 1];
  return f;
}

SeriesVector random_curve(Sampler& rng, std::size_t dim, std::size_t degree, std::size_t truncation) {
  std::vector<Vector> c;
  for (std::size_t j = 0; j <= degree; ++j) c.push_back(rng.vector(dim));
  return SeriesVector::from_coefficients(dim, truncation, c);
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b) { return span_basis(a) == span_basis(b); }

}  // namespace

TEST_CASE("series arithmetic") {
  const Series s(8, {1, 2, 3});
  const Series u(8, {1, 1});
  // s(t + t^2) = 1 + 2t + 5t^2 + 6t^3 + 3t^4.
  CHECK(s.compose_scaled(u) == Series(8, {1, 2, 5, 6, 3}));
  const Series inv = s.inverse();
  CHECK(s * inv == Series::constant(8, 1));
  CHECK(Series(8, {0, 0, 4}).valuation() == 2);
  CHECK(Series(8).valuation() == std::nullopt);
  CHECK(Series(8, {0, 0, 4, 1}).divided_by_t(2) == Series(6, {4, 1}));
  CHECK_THROWS_AS(Series(8, {0, 1}).divided_by_t(2), std::invalid_argument);
  CHECK_THROWS_AS(Series(8, {0, 1}).inverse(), std::domain_error);
  // Products keep the smaller truncation.
  CHECK((Series(3, {1, 1}) * Series(5, {1, 1})).truncation() == 3);
  CHECK(Series(4, {1, 1}).shifted(3) == Series(4, {0, 0, 0, 1}));
}

TEST_CASE("series vectors") {
  const SeriesVector v = SeriesVector::from_coefficients(2, 6, {{0, 0}, {1, 2}, {0, 3}});
  CHECK(v.valuation() == 1);
  CHECK(v.support_end() == 3);
  CHECK(v.component(1) == Series(6, {0, 2, 3}));
  CHECK(SeriesVector::from_components(v.components()) == v);
  CHECK(v.divided_by_t(1).coefficient(0) == Vector{1, 2});
  const SeriesVector w = Series(6, {2, 1}) * v;
  CHECK(w.coefficient(1) == Vector{2, 4});
  CHECK(w.coefficient(2) == Vector{1, 8});
  CHECK_THROWS_AS(SeriesVector(2, 0), std::invalid_argument);
}

TEST_CASE("packed exterior indices are lexicographic") {
  for (std::size_t d : {3u, 4u, 7u}) {
    std::size_t idx = 0;
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q) CHECK(kernels::pair_index(p, q, d) == idx++);
    CHECK(idx == kernels::pair_count(d));
    idx = 0;
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = p + 1; q < d; ++q)
        for (std::size_t r = q + 1; r < d; ++r) CHECK(kernels::triple_index(p, q, r, d) == idx++);
    CHECK(idx == kernels::triple_count(d));
  }
}

TEST_CASE("wedge kernels give 3x3 minors; serial and parallel agree") {
  Sampler rng(11);
  for (std::size_t d : {3u, 5u, 9u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Vector a = rng.vector(d), b = rng.vector(d), c = rng.vector(d);
      std::vector<Rational> w2(kernels::pair_count(d));
      kernels::wedge2_accumulate(w2, a, b);
      std::vector<Rational> s(kernels::triple_count(d)), p(kernels::triple_count(d));
      kernels::wedge3_accumulate_serial(s, w2, c);
      kernels::wedge3_accumulate_parallel(p, w2, c, 4);
      CHECK(s == p);
      const Matrix m = Matrix::from_rows({a, b, c});
      std::size_t idx = 0;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
          for (std::size_t k = j + 1; k < d; ++k) {
            Matrix sub(3, 3);
            for (std::size_t r = 0; r < 3; ++r) {
              sub(r, 0) = m(r, i);
              sub(r, 1) = m(r, j);
              sub(r, 2) = m(r, k);
            }
            CHECK(s[idx++] == oracle::det_leibniz(sub));
          }
    }
  }
}

TEST_CASE("models: dimensions and base point") {
  const auto seg = CominusculeModel::segre({3, 3, 3});
  CHECK(seg.tangent_dim() == 6);
  CHECK(seg.ambient_dim() == 27);
  CHECK(seg.max_degree() == 3);
  CHECK(base_point(seg) == unit(27, 0));
  const auto g = CominusculeModel::grassmannian(3, 6);
  CHECK(g.tangent_dim() == 9);
  CHECK(g.ambient_dim() == 20);
  const auto lg = CominusculeModel::lagrangian(3);
  CHECK(lg.tangent_dim() == 6);
  CHECK(lg.ambient_dim() == 20);
  const auto sp = CominusculeModel::spinor(6);
  CHECK(sp.tangent_dim() == 15);
  CHECK(sp.ambient_dim() == 32);
  CHECK(sp.max_degree() == 3);
  CHECK_THROWS_AS(CominusculeModel::grassmannian(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(CominusculeModel::segre({3, 1}), std::invalid_argument);
}

TEST_CASE("Segre parameterization is the outer product of e_0 + x_f") {
  Sampler rng(21);
  const std::vector<std::size_t> dims{2, 3, 4};
  const auto seg = CominusculeModel::segre(dims);
  for (int trial = 0; trial < 10; ++trial) {
    const Vector x = rng.vector(seg.tangent_dim());
    CHECK(seg.phi(x, Rational(0)) == outer(segre_factors(dims, x)).entries());
  }
}

TEST_CASE("parameterize examples") {
  const auto seg = CominusculeModel::segre({3, 3, 3});
  SUBCASE("zero tangent gives the constant base point") {
    const SeriesVector c = parameterize(seg, SeriesVector(6, 5));
    CHECK(c == SeriesVector::constant(base_point(seg), 5));
  }
  SUBCASE("tangent inside one factor has no normal component") {
    SeriesVector tan(6, 6);
    tan.set_coefficient(1, {2, -1, 0, 0, 0, 0});
    const SeriesVector c = parameterize(seg, tan);
    for (std::size_t j = 0; j < c.truncation(); ++j)
      for (std::size_t i = 0; i < 27; ++i)
        if (seg.degrees()[i] >= 2) CHECK(c.coefficient(j)[i] == 0);
  }
  SUBCASE("Grassmannian: order-2 part of phi(tM) is the 2x2 minors of M") {
    Sampler rng(5);
    const auto g = CominusculeModel::grassmannian(3, 6);
    const Vector m = rng.vector(9);
    SeriesVector tan(9, 4);
    tan.set_coefficient(1, m);
    const SeriesVector c = parameterize(g, tan);
    const Vector order2 = c.coefficient(2);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < 20; ++i) {
      if (g.degrees()[i] != 2) {
        CHECK(order2[i] == 0);
        continue;
      }
      // Degree-2 coordinates list row pairs (outer) then column pairs.
      const auto rows = combinations(3, 2)[pos / 3];
      const auto cols = combinations(3, 2)[pos % 3];
      Matrix sub(2, 2);
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) sub(a, b) = m[rows[a] * 3 + cols[b]];
      CHECK(order2[i] == oracle::det_leibniz(sub));
      ++pos;
    }
    CHECK(pos == 9);
  }
  CHECK_THROWS_AS(parameterize(seg, SeriesVector(5, 3)), std::invalid_argument);
}

TEST_CASE("second fundamental form of the three-factor Segre") {
  Sampler rng(31);
  const std::vector<std::size_t> dims{3, 3, 3};
  const auto seg = CominusculeModel::segre(dims);
  for (int trial = 0; trial < 10; ++trial) {
    const Vector x = rng.vector(6), y = rng.vector(6);
    // 1/2 (a (x) e' + d (x) b', a (x) f' + d (x) c', b (x) f' + e (x) c') placed in the ambient cube.
    Tensor expect = Tensor::zeros({3, 3, 3});
    const Vector e0 = unit(3, 0);
    const std::array<Vector, 3> xf{factor_part(dims, x, 0), factor_part(dims, x, 1), factor_part(dims, x, 2)};
    const std::array<Vector, 3> yf{factor_part(dims, y, 0), factor_part(dims, y, 1), factor_part(dims, y, 2)};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        std::vector<Vector> f1(3, e0), f2(3, e0);
        f1[i] = xf[i], f1[j] = yf[j];
        f2[i] = yf[i], f2[j] = xf[j];
        expect = expect + Rational(1, 2) * (outer(f1) + outer(f2));
      }
    CHECK(fubini_form(seg, 2, {x, y}) == expect.entries());
    // Symmetric, and equal to the degree-2 piece on the diagonal.
    CHECK(fubini_form(seg, 2, {x, y}) == fubini_form(seg, 2, {y, x}));
    CHECK(fubini_form(seg, 2, {x, x}) == graded_piece(seg, 2, x));
    CHECK(fubini_form(seg, 3, {x, x, x}) == graded_piece(seg, 3, x));
    CHECK(is_zero(fubini_form(seg, 4, {x, x, x, x})));
  }
  // Directions inside one factor are isotropic for II.
  CHECK(is_zero(fubini_form(seg, 2, {Vector{0, 0, 1, 3, 0, 0}, Vector{0, 0, 1, 3, 0, 0}})));
  CHECK_THROWS_AS(fubini_form(seg, 2, {Vector(6)}), std::invalid_argument);
  CHECK_THROWS_AS(fubini_form(seg, 1, {Vector(6)}), std::invalid_argument);
}

TEST_CASE("Fubini forms are multilinear") {
  Sampler rng(41);
  const auto g = CominusculeModel::grassmannian(3, 6);
  for (int trial = 0; trial < 5; ++trial) {
    const Vector x = rng.vector(9), y = rng.vector(9), z = rng.vector(9), w = rng.vector(9);
    const Rational a = rng.rational();
    Vector xw(9);
    for (std::size_t i = 0; i < 9; ++i) xw[i] = x[i] + a * w[i];
    const Vector lhs = fubini_form(g, 3, {xw, y, z});
    const Vector r1 = fubini_form(g, 3, {x, y, z}), r2 = fubini_form(g, 3, {w, y, z});
    for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == r1[i] + a * r2[i]);
    CHECK(fubini_form(g, 3, {x, y, z}) == fubini_form(g, 3, {z, x, y}));
  }
  // A rank-one matrix has no 2x2 minors.
  const Vector eps1 = epsilon(1, 3, 3).entries();
  CHECK(is_zero(fubini_form(g, 2, {eps1, eps1})));
}

TEST_CASE("prolongation examples") {
  Sampler rng(51);
  SUBCASE("Segre: v^2 with v in one factor, times anything") {
    const auto seg = CominusculeModel::segre({3, 3, 3});
    const Vector v{0, 0, 2, -1, 0, 0};
    const SymmetricElement f1{{1, {v, v}}};
    const SymmetricElement f2{{1, {rng.vector(6)}}};
    CHECK(prolongation_check(seg, f1, f2));
    CHECK_THROWS_AS(prolongation_check(seg, {{1, {rng.vector(6), rng.vector(6)}}}, f2), std::invalid_argument);
  }
  SUBCASE("Grassmannian: eps_1^2 times a generic matrix") {
    const auto g = CominusculeModel::grassmannian(3, 6);
    const Vector e = epsilon(1, 3, 3).entries();
    CHECK(prolongation_check(g, {{1, {e, e}}}, {{1, {rng.vector(9)}}}));
  }
  SUBCASE("spinor: (eps_1 skew)^2 times a generic skew matrix") {
    const auto sp = CominusculeModel::spinor(6);
    // Tangent coordinates are the entries i < j; eps_1 skew has a single 1 at (0, 1).
    const Vector e = unit(15, 0);
    CHECK(prolongation_check(sp, {{1, {e, e}}}, {{1, {rng.vector(15)}}}));
  }
}

TEST_CASE("kernels of the second fundamental form and prolongation on random elements") {
  Sampler rng(55);
  struct Case {
    CominusculeModel model;
    std::size_t kernel_dim;
  };
  // Segre: S^2 A' + S^2 B' + S^2 C'; G(3,6): S^2 of 9-dim T minus 9 minors; spinor: 120 - 15 Pfaffians.
  for (const Case& c : {Case{CominusculeModel::segre({3, 3, 3}), 9}, Case{CominusculeModel::grassmannian(3, 6), 36},
                        Case{CominusculeModel::spinor(6), 105}}) {
    const auto basis = fubini_kernel_basis(c.model, 2);
    CHECK(basis.size() == c.kernel_dim);
    for (int trial = 0; trial < 5; ++trial) {
      SymmetricElement f1;
      for (int j = 0; j < 3; ++j) {
        const auto& b = basis[static_cast<std::size_t>(rng.integer(0, static_cast<int>(basis.size()) - 1))];
        const Rational a = rng.nonzero_rational();
        for (const auto& p : b) f1.push_back({a * p.coefficient, p.factors});
      }
      CHECK(prolongation_check(c.model, f1, {{1, {rng.vector(c.model.tangent_dim())}}}));
    }
  }
  // A generic quadric is not in the kernel, and its product with a vector is not either.
  const auto seg = CominusculeModel::segre({3, 3, 3});
  const Vector x = rng.vector(6);
  CHECK_FALSE(is_zero(fubini_form(seg, SymmetricElement{{1, {x, x, x}}})));
}

TEST_CASE("fundamental form orders along curves with isotropic leading direction") {
  // If II(v(t)^2) has order m > 0, F_s(v(t)^s) has order >= m + s - 2.
  Sampler rng(61);
  for (const auto& dims : {std::vector<std::size_t>{3, 3, 3}, std::vector<std::size_t>{2, 3, 2, 3}}) {
    const auto seg = CominusculeModel::segre(dims);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
      SeriesVector v = random_curve(rng, seg.tangent_dim(), 3, 14);
      // Leading term inside a single factor, later terms pushed to random orders per factor.
      const std::size_t keep = static_cast<std::size_t>(rng.integer(0, static_cast<int>(dims.size()) - 1));
      for (std::size_t j = 0; j < v.truncation(); ++j) {
        Vector c = v.coefficient(j);
        for (std::size_t i = 0; i < c.size(); ++i)
          if (j == 0 && seg.factor_of(i) != keep) c[i] = 0;
        v.set_coefficient(j, c);
      }
      v = v + random_curve(rng, seg.tangent_dim(), 1, 14).shifted(static_cast<std::size_t>(rng.integer(1, 3)));
      const auto m = fubini_series(seg, 2, v).valuation();
      if (!m || *m == 0) continue;
      for (std::size_t s : {3u, 4u}) {
        const auto order = fubini_series(seg, s, v).valuation();
        if (order) CHECK(*order >= *m + s - 2);
      }
      ++checked;
    }
    CHECK(checked > 20);
  }
}

TEST_CASE("limit plane of constant curves") {
  const auto seg = CominusculeModel::segre({3, 3, 3});
  const Vector a = base_point(seg);
  const Vector b = seg.phi(Vector{1, 0, 1, 0, 1, 0}, Rational(0));
  const Vector c = seg.phi(Vector{0, 1, 0, 1, 0, 1}, Rational(0));
  const auto res = limit_plane(SeriesVector::constant(a, 4), SeriesVector::constant(b, 4), SeriesVector::constant(c, 4));
  CHECK_FALSE(res.degenerate);
  CHECK(res.leading_order == 0);
  CHECK(same_span(res.plane, {a, b, c}));
  // Two equal curves: degenerate.
  const auto deg = limit_plane(SeriesVector::constant(a, 4), SeriesVector::constant(b, 4), SeriesVector::constant(b, 4));
  CHECK(deg.degenerate);
  CHECK_THROWS_AS(limit_plane(SeriesVector(65, 2), SeriesVector(65, 2), SeriesVector(65, 2)), std::invalid_argument);
}

TEST_CASE("a curve approaching the base point contributes its direction") {
  Sampler rng(71);
  const auto seg = CominusculeModel::segre({3, 3, 3});
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t k = static_cast<std::size_t>(rng.integer(1, 3));
    const SeriesVector v = random_curve(rng, 6, 2, 12);
    const Vector eta = seg.phi(rng.vector(6), Rational(0));
    const auto res = limit_plane(SeriesVector::constant(base_point(seg), 12), parameterize(seg, v.shifted(k)),
                                 SeriesVector::constant(eta, 12));
    REQUIRE_FALSE(res.degenerate);
    CHECK(res.leading_order == k);
    CHECK(same_span(res.plane, {base_point(seg), tangent_to_ambient(seg, v.coefficient(0)), eta}));
  }
}

TEST_CASE("closure construction reaches xi' + u") {
  Sampler rng(81);
  const auto seg = CominusculeModel::segre({3, 3, 3});
  for (int trial = 0; trial < 6; ++trial) {
    SeriesVector v = random_curve(rng, 6, 2, 24);
    if (trial % 2) {
      // Isotropic leading direction: u comes from a higher order.
      Vector v0 = v.coefficient(0);
      for (std::size_t i = 2; i < 6; ++i) v0[i] = 0;
      v.set_coefficient(0, v0);
    }
    const SeriesVector ii = fubini_series(seg, 2, v);
    const std::size_t m = *ii.valuation();
    const Vector u = ii.coefficient(m);
    const Vector w0 = rng.vector(6);
    SeriesVector z = Series::constant(24, 2) * v.shifted(1);
    Vector zc = z.coefficient(m + 2);
    for (std::size_t i = 0; i < 6; ++i) zc[i] += 2 * w0[i];
    z.set_coefficient(m + 2, zc);
    const auto res = limit_plane(SeriesVector::constant(base_point(seg), 24), parameterize(seg, v.shifted(1)),
                                 parameterize(seg, z));
    REQUIRE_FALSE(res.degenerate);
    CHECK(res.leading_order == m + 3);
    Vector target = base_point(seg);
    const Vector tw = tangent_to_ambient(seg, w0);
    for (std::size_t i = 0; i < target.size(); ++i) target[i] += tw[i] + u[i];
    CHECK(in_span(res.plane, target));
    CHECK(in_span(res.plane, tangent_to_ambient(seg, v.coefficient(0))));
  }
}

TEST_CASE("normalization of the moving curves") {
  const auto seg = CominusculeModel::segre({3, 3, 3});
  const Vector v0{1, 0, 1, 0, 1, 0}, w0{0, 1, 0, 0, 0, 1};
  SUBCASE("the curve of higher order is moved to z") {
    const SeriesVector y = SeriesVector::from_coefficients(6, 4, {Vector(6), Vector(6), w0});
    const SeriesVector z = SeriesVector::from_coefficients(6, 4, {Vector(6), v0});
    const LimitConfig cfg = LimitConfig::from_curves(seg, y, z);
    CHECK(cfg.swapped);
    CHECK(cfg.k == 1);
    CHECK(cfg.l == 2);
    CHECK(cfg.lambda.is_zero());
    CHECK(cfg.w.coefficient(0) == w0);
  }
  SUBCASE("parallel parts are absorbed into lambda") {
    // z = (3 + 2t) v0 + t^2 w0 with y = v0.
    Vector z0(6), z1(6);
    for (std::size_t i = 0; i < 6; ++i) z0[i] = 3 * v0[i], z1[i] = 2 * v0[i];
    const SeriesVector y = SeriesVector::from_coefficients(6, 4, {v0});
    const SeriesVector z = SeriesVector::from_coefficients(6, 4, {z0, z1, w0});
    const LimitConfig cfg = LimitConfig::from_curves(seg, y, z);
    CHECK(cfg.k == 0);
    CHECK(cfg.l == 2);
    CHECK(cfg.lambda[0] == 3);
    CHECK(cfg.lambda[1] == 2);
    CHECK(limit_type(cfg) == LimitType::I);
  }
  SUBCASE("w = 0 gives l = infinity") {
    const SeriesVector y = SeriesVector::from_coefficients(6, 4, {v0});
    const LimitConfig cfg = LimitConfig::from_curves(seg, y, Series::constant(4, 5) * y);
    CHECK_FALSE(cfg.l.has_value());
  }
  SUBCASE("inconsistent data") {
    CHECK_THROWS_AS(LimitConfig::from_curves(seg, SeriesVector(6, 3), SeriesVector(6, 3)), std::invalid_argument);
    const SeriesVector v = SeriesVector::from_coefficients(6, 2, {v0});
    // w parallel to v: l is not maximal.
    CHECK_THROWS_AS(LimitConfig::from_data(seg, 0, 1, Series::constant(1, 2), v, v), std::invalid_argument);
    CHECK_THROWS_AS(LimitConfig::from_data(seg, 2, 1, Series::constant(1, 2), v, v), std::invalid_argument);
  }
}

TEST_CASE("case analysis examples") {
  const auto seg = CominusculeModel::segre({3, 3, 3});
  const SeriesVector v = SeriesVector::from_coefficients(6, 2, {Vector{1, 0, 1, 0, 1, 0}, Vector{0, 1, 1, 0, 2, 1}});
  const SeriesVector w = SeriesVector::from_coefficients(6, 1, {Vector{0, 1, 0, 1, 0, 1}});
  CHECK(limit_type(LimitConfig::from_data(seg, 0, 0, Series::constant(1, 2), v, w)) == LimitType::I);
  // lambda = t: only its terms below t^l are visible in the normalization.
  const LimitConfig ii = LimitConfig::from_data(seg, 0, 3, Series(2, {0, 1}), v, w);
  CHECK(ii.m == 1);
  CHECK_FALSE(LimitConfig::from_data(seg, 0, 1, Series(3, {0, 0, 1}), v, w).m.has_value());
  CHECK(limit_type(ii) == LimitType::II);
  CHECK(limit_type(LimitConfig::from_data(seg, 1, 2, Series::constant(1, 2), v, w)) == LimitType::IIIorIV);
  // lambda_0 generic but the points are collinear in T and the line is not on X.
  CHECK(limit_type(LimitConfig::from_data(seg, 0, 1, Series::constant(1, 2), v, w)) == LimitType::I);
  const SeriesVector line = SeriesVector::from_coefficients(6, 2, {Vector{1, 0, 0, 0, 0, 0}, Vector{0, 1, 1, 0, 2, 1}});
  CHECK(limit_type(LimitConfig::from_data(seg, 0, 1, Series::constant(1, 2), line, w)) == LimitType::IIIorIV);
}

TEST_CASE("recipes: case analysis, limit plane and classification agree") {
  Sampler rng(91);
  const auto seg = CominusculeModel::segre({3, 3, 3});
  for (auto r : {LimitRecipe::HonestSecant, LimitRecipe::PointPlusTangent, LimitRecipe::CoincidentPoints,
                 LimitRecipe::LineDirection}) {
    for (int trial = 0; trial < 5; ++trial) {
      const LimitConfig cfg = limit_recipe(r, seg, rng);
      CAPTURE(to_string(r));
      CHECK(limit_type(cfg) == expected_type(r));
      const auto res = limit_plane(cfg);
      REQUIRE_FALSE(res.degenerate);
      const Tensor p = make_tensor({3, 3, 3}, sample_plane_point(res, 1000 + trial));
      const auto report = classify(p);
      CAPTURE(to_string(report.border_rank_class));
      CHECK(limit_type_of(report) == expected_type(r));
    }
  }
}

TEST_CASE("limit planes from three curves satisfy Strassen's equations") {
  Sampler rng(101);
  const auto seg = CominusculeModel::segre({3, 3, 3});
  for (int trial = 0; trial < 20; ++trial) {
    // Curves sharing a random common prefix so that limits are taken at coincident points.
    const SeriesVector common = random_curve(rng, 6, 1, 16).shifted(static_cast<std::size_t>(rng.integer(0, 1)));
    std::array<SeriesVector, 3> c{SeriesVector(27, 16), SeriesVector(27, 16), SeriesVector(27, 16)};
    for (auto& ci : c) {
      const std::size_t k = static_cast<std::size_t>(rng.integer(0, 3));
      ci = parameterize(seg, common + random_curve(rng, 6, 2, 16).shifted(k));
    }
    const auto res = limit_plane_adaptive([&](std::size_t) { return c; });
    for (int s = 0; s < 5; ++s) {
      const Tensor p = make_tensor({3, 3, 3}, sample_plane_point(res, 7 * trial + s));
      CHECK(strassen_vanishes(p));
    }
  }
}

TEST_CASE("limit plane is invariant under reparameterization") {
  Sampler rng(111);
  const auto seg = CominusculeModel::segre({3, 3, 3});
  for (auto r : {LimitRecipe::PointPlusTangent, LimitRecipe::CoincidentPoints, LimitRecipe::LineDirection}) {
    for (int trial = 0; trial < 3; ++trial) {
      const LimitConfig cfg = limit_recipe(r, seg, rng);
      const auto curves = cfg.curves(24);
      Series u(24, {rng.nonzero_rational(), rng.rational(), rng.rational()});
      const auto base = limit_plane(curves[0], curves[1], curves[2]);
      const auto moved = limit_plane(curves[0].compose_scaled(u), curves[1].compose_scaled(u),
                                     curves[2].compose_scaled(u));
      REQUIRE_FALSE(base.degenerate);
      REQUIRE_FALSE(moved.degenerate);
      CHECK(same_span(base.plane, moved.plane));
      CHECK(base.leading_order == moved.leading_order);
    }
  }
}

TEST_CASE("adaptive truncation") {
  const auto seg = CominusculeModel::segre({3, 3, 3});
  const SeriesVector v = SeriesVector::from_coefficients(6, 1, {Vector{1, 0, 1, 0, 1, 0}});
  const SeriesVector w = SeriesVector::from_coefficients(6, 1, {Vector{0, 1, 0, 1, 0, 1}});
  // Leading order k + l = 12 needs truncation 16.
  const LimitConfig cfg = LimitConfig::from_data(seg, 4, 8, Series::constant(1, 3), v, w);
  const auto res = limit_plane(cfg);
  CHECK(res.truncation == 16);
  CHECK(res.leading_order == 12);
  // z a multiple of y: the three points stay on a line forever.
  const SeriesVector y = SeriesVector::from_coefficients(6, 2, {Vector(6), Vector{1, 0, 0, 0, 0, 0}});
  const LimitConfig flat = LimitConfig::from_curves(seg, y, Series::constant(2, 3) * y);
  CHECK_THROWS_AS(limit_plane(flat), TruncationCapExceeded);
}

TEST_CASE("tangent spans along lines") {
  for (const auto& dims : {std::vector<std::size_t>{2, 2, 2}, std::vector<std::size_t>{3, 3, 3},
                           std::vector<std::size_t>{3, 4, 5}}) {
    const auto seg = CominusculeModel::segre(dims);
    for (std::size_t f = 0; f < dims.size(); ++f) {
      const std::size_t got = line_tangent_span(seg, f);
      CHECK(got == line_tangent_span_formula(seg, f));
      // Independent count: tangent spaces at e_0 (x) e_0 (x) e_0 and at the point with e_1 in factor f.
      std::vector<Vector> span;
      for (const Vector& base_f1 : {unit(dims[f], 0), unit(dims[f], 1)}) {
        std::vector<Vector> pt;
        for (std::size_t g = 0; g < dims.size(); ++g) pt.push_back(unit(dims[g], 0));
        pt[f][0] = 1;
        if (base_f1[1] == 1) pt[f][1] = 1;
        span.push_back(outer(pt).entries());
        for (std::size_t g = 0; g < dims.size(); ++g)
          for (std::size_t j = 0; j < dims[g]; ++j) {
            auto q = pt;
            q[g] = unit(dims[g], j);
            span.push_back(outer(q).entries());
          }
      }
      CHECK(got == oracle::rank_mod_p(Matrix::from_rows(span)));
    }
  }
  CHECK(line_tangent_span(CominusculeModel::segre({3, 3, 3}), 0) == 11);
  CHECK(line_tangent_span(CominusculeModel::segre({2, 2, 2}), 0) == 6);
  CHECK(line_tangent_span(CominusculeModel::segre({3, 4, 5}), 2) == 15);
  CHECK_THROWS_AS(line_tangent_span(CominusculeModel::segre({3, 3, 3}), Vector{1, 0, 1, 0, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(line_tangent_span(CominusculeModel::grassmannian(2, 4), 0), std::invalid_argument);
}
