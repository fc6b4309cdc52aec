#include "border3/limits.hpp"

#include "border3/kernels.hpp"
#include "border3/linalg.hpp"
#include "border3/random.hpp"

#include <algorithm>

namespace border3 {

namespace {

void check_tangent(const CominusculeModel& model, const Vector& x) {
  if (x.size() != model.tangent_dim()) throw std::invalid_argument("tangent vector length does not match the model");
}

Rational factorial(std::size_t s) {
  Rational f = 1;
  for (std::size_t i = 2; i <= s; ++i) f *= static_cast<long>(i);
  return f;
}

}  // namespace

Vector base_point(const CominusculeModel& model) { return graded_piece(model, 0, Vector(model.tangent_dim())); }

Vector graded_piece(const CominusculeModel& model, std::size_t s, const Vector& x) {
  check_tangent(model, x);
  Vector out = model.phi(x, Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i)
    if (model.degrees()[i] != s) out[i] = 0;
  return out;
}

Vector tangent_to_ambient(const CominusculeModel& model, const Vector& x) { return graded_piece(model, 1, x); }

SeriesVector parameterize(const CominusculeModel& model, const SeriesVector& tangent) {
  if (tangent.dim() != model.tangent_dim()) throw std::invalid_argument("tangent curve does not live in the model's T");
  const Series zero(tangent.truncation());
  return SeriesVector::from_components(model.phi(tangent.components(), zero));
}

std::size_t degree_of(const SymmetricElement& f) {
  if (f.empty()) throw std::invalid_argument("empty symmetric element");
  const std::size_t s = f.front().factors.size();
  for (const auto& p : f)
    if (p.factors.size() != s) throw std::invalid_argument("symmetric element mixes degrees");
  return s;
}

SymmetricElement operator*(const SymmetricElement& a, const SymmetricElement& b) {
  SymmetricElement out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      SymmetricProduct p{x.coefficient * y.coefficient, x.factors};
      p.factors.insert(p.factors.end(), y.factors.begin(), y.factors.end());
      out.push_back(std::move(p));
    }
  return out;
}

Vector fubini_form(const CominusculeModel& model, std::size_t s, const std::vector<Vector>& args) {
  if (s < 2) throw std::invalid_argument("Fubini forms start at degree 2");
  if (args.size() != s) throw std::invalid_argument("Fubini form arity mismatch");
  for (const auto& x : args) check_tangent(model, x);
  Vector acc(model.ambient_dim());
  if (s > model.max_degree()) return acc;
  // (1/s!) sum over nonempty S of (-1)^{s-|S|} P_s(sum_{i in S} x_i).
  for (std::size_t mask = 1; mask < (std::size_t{1} << s); ++mask) {
    Vector sum(model.tangent_dim());
    std::size_t size = 0;
    for (std::size_t i = 0; i < s; ++i)
      if (mask >> i & 1) {
        ++size;
        for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += args[i][j];
      }
    const Vector piece = graded_piece(model, s, sum);
    const bool negative = (s - size) % 2 == 1;
    for (std::size_t j = 0; j < acc.size(); ++j) {
      if (negative)
        acc[j] -= piece[j];
      else
        acc[j] += piece[j];
    }
  }
  const Rational f = factorial(s);
  for (auto& x : acc) x /= f;
  return acc;
}

Vector fubini_form(const CominusculeModel& model, const SymmetricElement& f) {
  const std::size_t s = degree_of(f);
  Vector acc(model.ambient_dim());
  for (const auto& p : f) {
    if (p.coefficient == 0) continue;
    const Vector v = fubini_form(model, s, p.factors);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += p.coefficient * v[j];
  }
  return acc;
}

SeriesVector fubini_series(const CominusculeModel& model, std::size_t s, const SeriesVector& tangent) {
  if (s < 2) throw std::invalid_argument("Fubini forms start at degree 2");
  SeriesVector curve = parameterize(model, tangent);
  for (std::size_t j = 0; j < curve.truncation(); ++j) {
    Vector c = curve.coefficient(j);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (model.degrees()[i] != s) c[i] = 0;
    curve.set_coefficient(j, std::move(c));
  }
  return curve;
}

std::vector<SymmetricElement> fubini_kernel_basis(const CominusculeModel& model, std::size_t s) {
  const std::size_t n = model.tangent_dim();
  // Multisets i_1 <= ... <= i_s of coordinate directions.
  std::vector<std::vector<std::size_t>> monomials;
  std::vector<std::size_t> cur(s, 0);
  while (true) {
    monomials.push_back(cur);
    std::size_t pos = s;
    while (pos > 0 && cur[pos - 1] == n - 1) --pos;
    if (pos == 0) break;
    const std::size_t v = cur[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < s; ++i) cur[i] = v;
  }
  const auto product = [&](const std::vector<std::size_t>& mono) {
    std::vector<Vector> f;
    for (auto i : mono) {
      Vector e(n);
      e[i] = 1;
      f.push_back(std::move(e));
    }
    return f;
  };
  std::vector<Vector> cols;
  for (const auto& mono : monomials) cols.push_back(fubini_form(model, s, product(mono)));
  std::vector<SymmetricElement> out;
  for (const Vector& k : nullspace(Matrix::from_columns(cols))) {
    SymmetricElement f;
    for (std::size_t j = 0; j < k.size(); ++j)
      if (k[j] != 0) f.push_back({k[j], product(monomials[j])});
    out.push_back(std::move(f));
  }
  return out;
}

bool prolongation_check(const CominusculeModel& model, const SymmetricElement& f1, const SymmetricElement& f2) {
  degree_of(f2);
  if (!is_zero(fubini_form(model, f1))) throw std::invalid_argument("prolongation_check: F_s1(f1) is not zero");
  return is_zero(fubini_form(model, f1 * f2));
}

LimitPlaneResult limit_plane(const SeriesVector& c1, const SeriesVector& c2, const SeriesVector& c3, int threads) {
  const std::size_t d = c1.dim();
  if (c2.dim() != d || c3.dim() != d) throw std::invalid_argument("curves live in different ambient spaces");
  if (d > kMaxWedgeAmbient) throw std::invalid_argument("ambient dimension exceeds the exterior-cube guard");
  const std::size_t n = std::min({c1.truncation(), c2.truncation(), c3.truncation()});
  LimitPlaneResult res;
  res.truncation = n;
  if (d < 3) {
    res.degenerate = true;
    return res;
  }
  const auto nonzero = [](const Vector& v) { return !is_zero(v); };
  // pairs[M] = sum_{a+b=M} c1_a ^ c2_b, filled lazily.
  std::vector<std::vector<Rational>> pairs;
  for (std::size_t order = 0; order < n; ++order) {
    std::vector<Rational> w2(kernels::pair_count(d));
    for (std::size_t a = 0; a <= order; ++a)
      if (nonzero(c1.coefficient(a)) && nonzero(c2.coefficient(order - a)))
        kernels::wedge2_accumulate(w2, c1.coefficient(a), c2.coefficient(order - a));
    pairs.push_back(std::move(w2));

    std::vector<Rational> w3(kernels::triple_count(d));
    for (std::size_t c = 0; c <= order; ++c) {
      const Vector& v = c3.coefficient(c);
      if (!nonzero(v)) continue;
      const auto& w2 = pairs[order - c];
      if (std::all_of(w2.begin(), w2.end(), [](const Rational& x) { return x == 0; })) continue;
      if (threads > 1)
        kernels::wedge3_accumulate_parallel(w3, w2, v, threads);
      else
        kernels::wedge3_accumulate_serial(w3, w2, v);
    }
    const auto first = std::find_if(w3.begin(), w3.end(), [](const Rational& x) { return x != 0; });
    if (first == w3.end()) continue;

    // Locate the triple (p, q, r) of the first nonzero coordinate.
    const std::size_t target = static_cast<std::size_t>(first - w3.begin());
    std::size_t p = 0, q = 0, r = 0;
    for (std::size_t a = 0; a < d && !r; ++a)
      for (std::size_t b = a + 1; b < d && !r; ++b)
        for (std::size_t c = b + 1; c < d; ++c)
          if (kernels::triple_index(a, b, c, d) == target) {
            p = a, q = b, r = c;
            break;
          }
    // For a decomposable 3-vector, contracting against two of its coordinate
    // covectors gives vectors in the plane; these three are independent.
    const auto coord = [&](std::size_t i, std::size_t j, std::size_t x) -> Rational {
      std::array<std::size_t, 3> idx{i, j, x};
      if (i == x || j == x) return 0;
      int sign = 1;
      for (int s = 0; s < 3; ++s)
        for (int t = 0; t + 1 < 3 - s; ++t)
          if (idx[t] > idx[t + 1]) {
            std::swap(idx[t], idx[t + 1]);
            sign = -sign;
          }
      const Rational& val = w3[kernels::triple_index(idx[0], idx[1], idx[2], d)];
      return sign > 0 ? val : Rational(-val);
    };
    for (const auto& [i, j] : {std::pair{p, q}, std::pair{p, r}, std::pair{q, r}}) {
      Vector b(d);
      for (std::size_t x = 0; x < d; ++x) b[x] = coord(i, j, x);
      res.plane.push_back(std::move(b));
    }
    res.plane = span_basis(res.plane);
    if (res.plane.size() != 3) throw std::logic_error("leading wedge coefficient is not decomposable");
    res.leading_order = order;
    return res;
  }
  res.degenerate = true;
  return res;
}

LimitPlaneResult limit_plane_adaptive(const CurveFamily& curves, int threads, std::size_t initial) {
  if (initial < 1 || initial > kMaxTruncation)
    throw std::invalid_argument("initial truncation must lie in [1, " + std::to_string(kMaxTruncation) + "]");
  for (std::size_t t = initial; t <= kMaxTruncation; t *= 2) {
    const auto c = curves(t);
    LimitPlaneResult res = limit_plane(c[0], c[1], c[2], threads);
    if (!res.degenerate) return res;
  }
  throw TruncationCapExceeded("wedge of the curves vanishes up to order " + std::to_string(kMaxTruncation));
}

Vector sample_plane_point(const LimitPlaneResult& result, std::uint64_t seed) {
  if (result.degenerate || result.plane.empty()) throw std::invalid_argument("no plane to sample from");
  Sampler rng(seed);
  Vector p(result.plane.front().size());
  for (const auto& b : result.plane) {
    // Wide range: the non-generic points of a plane form a few lines, which
    // small coefficients hit too often.
    const Rational c = rng.nonzero_rational(1000000, 97);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += c * b[i];
  }
  return p;
}

std::string to_string(LimitType t) {
  switch (t) {
    case LimitType::I:
      return "i";
    case LimitType::II:
      return "ii";
    case LimitType::IIIorIV:
      return "iii-iv";
  }
  return "?";
}

namespace {

// Working precision for normalizing polynomial tangent curves.
std::size_t working_truncation(const SeriesVector& y, const SeriesVector& z) {
  return std::max(y.support_end(), z.support_end()) + kMaxTruncation;
}

// c with a = c * b, if any; b nonzero.
std::optional<Rational> proportionality(const Vector& a, const Vector& b) {
  std::size_t piv = 0;
  while (b[piv] == 0) ++piv;
  const Rational c = a[piv] / b[piv];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != c * b[i]) return std::nullopt;
  return c;
}

}  // namespace

LimitConfig LimitConfig::from_curves(const CominusculeModel& model, const SeriesVector& y, const SeriesVector& z) {
  if (y.dim() != model.tangent_dim() || z.dim() != model.tangent_dim())
    throw std::invalid_argument("tangent curves do not live in the model's T");
  const std::size_t work = working_truncation(y, z);
  SeriesVector yy = y.with_truncation(work);
  SeriesVector zz = z.with_truncation(work);
  bool swapped = false;
  const auto vy = yy.valuation();
  const auto vz = zz.valuation();
  if (!vy && !vz) throw std::invalid_argument("inconsistent configuration: both moving points equal the base point");
  if (!vy || (vz && *vz < *vy)) {
    std::swap(yy, zz);
    swapped = true;
  }
  const std::size_t k = *yy.valuation();
  SeriesVector v = yy.divided_by_t(k);
  SeriesVector r = zz.divided_by_t(k);
  const std::size_t n = v.truncation();
  Series lambda(n);
  std::optional<std::size_t> j;
  // Absorb leading terms parallel to v_0 into lambda; whatever is left starts w.
  while ((j = r.valuation())) {
    const auto c = proportionality(r.coefficient(*j), v.coefficient(0));
    if (!c) break;
    lambda.set(*j, lambda[*j] + *c);
    r -= Series::monomial(n, *j, *c) * v;
  }
  LimitConfig cfg{model, y, z, swapped, k, std::nullopt, std::nullopt, lambda, v, SeriesVector(model.tangent_dim(), 1)};
  if (j) {
    cfg.l = k + *j;
    cfg.w = r.divided_by_t(*j);
  } else {
    cfg.w = SeriesVector(model.tangent_dim(), n);
  }
  const Rational l0 = lambda[0];
  if (l0 == 0 || l0 == 1) {
    const Series rest = lambda - Series::constant(n, l0);
    if (auto mv = rest.valuation()) cfg.m = *mv;
  }
  return cfg;
}

LimitConfig LimitConfig::from_data(const CominusculeModel& model, std::size_t k, std::optional<std::size_t> l,
                                   const Series& lambda, const SeriesVector& v, const SeriesVector& w) {
  if (l && *l < k) throw std::invalid_argument("inconsistent configuration: l < k");
  if (v.dim() != model.tangent_dim() || w.dim() != model.tangent_dim())
    throw std::invalid_argument("tangent curves do not live in the model's T");
  if (!w.is_zero() && !l) throw std::invalid_argument("inconsistent configuration: w given without l");
  const std::size_t shift = l ? *l : 0;
  // Everything is a polynomial; pick a truncation that holds the products exactly.
  const std::size_t trunc = k + std::max(lambda.truncation() + v.support_end(), shift + w.support_end()) + 1;
  const SeriesVector vv = v.with_truncation(trunc);
  SeriesVector y = vv.shifted(k);
  SeriesVector z = (lambda.with_truncation(trunc) * vv).shifted(k);
  if (l) z += w.with_truncation(trunc).shifted(*l);
  LimitConfig cfg = from_curves(model, y, z);
  if (cfg.swapped || cfg.k != k || cfg.l != l)
    throw std::invalid_argument("inconsistent configuration: (k, l) are not the maximal exponents of these curves");
  return cfg;
}

std::array<SeriesVector, 3> LimitConfig::curves(std::size_t truncation) const {
  const SeriesVector& a = swapped ? z_tangent : y_tangent;
  const SeriesVector& b = swapped ? y_tangent : z_tangent;
  return {SeriesVector::constant(base_point(model), truncation), parameterize(model, a.with_truncation(truncation)),
          parameterize(model, b.with_truncation(truncation))};
}

LimitType limit_type(const LimitConfig& cfg) {
  if (cfg.l && *cfg.l == 0) return LimitType::I;
  if (cfg.k >= 1) return LimitType::IIIorIV;
  const Vector& v0 = cfg.v.coefficient(0);
  if (is_zero(fubini_form(cfg.model, 2, {v0, v0}))) return LimitType::IIIorIV;
  const Rational l0 = cfg.lambda[0];
  if (l0 == 0 || l0 == 1) return LimitType::II;
  return LimitType::I;
}

LimitPlaneResult limit_plane(const LimitConfig& cfg, int threads, std::size_t initial) {
  return limit_plane_adaptive([&](std::size_t t) { return cfg.curves(t); }, threads, initial);
}

namespace {

const CominusculeModel& require_segre(const CominusculeModel& model) {
  if (model.kind() != CominusculeModel::Kind::Segre) throw std::invalid_argument("line_tangent_span needs a Segre model");
  return model;
}

std::vector<Vector> affine_tangent_space(const CominusculeModel& model, const Vector& at) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < model.tangent_dim(); ++j) {
    // phi(at + t e_j) to first order.
    SeriesVector curve(model.tangent_dim(), 2);
    curve.set_coefficient(0, at);
    Vector e(model.tangent_dim());
    e[j] = 1;
    curve.set_coefficient(1, e);
    const SeriesVector img = parameterize(model, curve);
    if (j == 0) out.push_back(img.coefficient(0));
    out.push_back(img.coefficient(1));
  }
  return out;
}

}  // namespace

std::size_t line_tangent_span(const CominusculeModel& segre, const Vector& direction) {
  require_segre(segre);
  check_tangent(segre, direction);
  std::optional<std::size_t> factor;
  for (std::size_t i = 0; i < direction.size(); ++i) {
    if (direction[i] == 0) continue;
    const std::size_t f = segre.factor_of(i);
    if (factor && *factor != f) throw std::invalid_argument("line direction is not contained in a single factor");
    factor = f;
  }
  if (!factor) throw std::invalid_argument("line direction is zero");
  std::vector<Vector> span = affine_tangent_space(segre, Vector(segre.tangent_dim()));
  const std::vector<Vector> other = affine_tangent_space(segre, direction);
  span.insert(span.end(), other.begin(), other.end());
  return rank_of(span);
}

std::size_t line_tangent_span(const CominusculeModel& segre, std::size_t factor) {
  require_segre(segre);
  if (factor >= segre.dims().size()) throw std::out_of_range("factor index out of range");
  Vector dir(segre.tangent_dim());
  std::size_t pos = 0;
  for (std::size_t f = 0; f < factor; ++f) pos += segre.dims()[f] - 1;
  dir[pos] = 1;
  return line_tangent_span(segre, dir);
}

std::size_t line_tangent_span_formula(const CominusculeModel& segre, std::size_t factor) {
  require_segre(segre);
  if (factor >= segre.dims().size()) throw std::out_of_range("factor index out of range");
  return 2 * segre.tangent_dim() + 2 - segre.dims()[factor];
}

}  // namespace border3

namespace border3 {

std::optional<LimitType> limit_type_of(const ClassificationReport& report) {
  if (report.border_rank_class != BorderRankClass::Three || !report.type_tag) return std::nullopt;
  switch (*report.type_tag) {
    case TypeTag::i:
      return LimitType::I;
    case TypeTag::ii:
      return LimitType::II;
    default:
      return LimitType::IIIorIV;
  }
}

std::string to_string(LimitRecipe r) {
  switch (r) {
    case LimitRecipe::HonestSecant:
      return "honest-secant";
    case LimitRecipe::PointPlusTangent:
      return "point-plus-tangent";
    case LimitRecipe::CoincidentPoints:
      return "coincident-points";
    case LimitRecipe::LineDirection:
      return "line-direction";
  }
  return "?";
}

LimitType expected_type(LimitRecipe r) {
  switch (r) {
    case LimitRecipe::HonestSecant:
      return LimitType::I;
    case LimitRecipe::PointPlusTangent:
      return LimitType::II;
    default:
      return LimitType::IIIorIV;
  }
}

namespace {

SeriesVector random_poly(Sampler& rng, std::size_t dim, std::size_t degree) {
  std::vector<Vector> c;
  for (std::size_t j = 0; j <= degree; ++j) c.push_back(rng.vector(dim));
  return SeriesVector::from_coefficients(dim, degree + 1, c);
}

// Rank of the factor-f parts of the given tangent vectors.
std::size_t factor_rank(const CominusculeModel& segre, const std::vector<Vector>& xs, std::size_t f) {
  std::vector<Vector> parts;
  for (const auto& x : xs) {
    Vector p;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (segre.factor_of(i) == f) p.push_back(x[i]);
    parts.push_back(std::move(p));
  }
  return rank_of(parts);
}

// Small random rationals hit the non-generic locus often; reject draws where
// the two directions spanning the limit fail to be independent in some factor.
bool generic_in_factors(const CominusculeModel& segre, const Vector& a, const Vector& b,
                        std::optional<std::size_t> line_factor = std::nullopt, const Vector& c = {}) {
  for (std::size_t f = 0; f < segre.dims().size(); ++f) {
    const std::size_t want = std::min<std::size_t>(2, segre.dims()[f] - 1);
    const Vector& first = (line_factor && *line_factor != f) ? c : a;
    if (factor_rank(segre, {first, b}, f) != want) return false;
  }
  return true;
}

Rational generic_scalar(Sampler& rng) {
  Rational x;
  do x = rng.nonzero_rational();
  while (x == 1);
  return x;
}

}  // namespace

LimitConfig limit_recipe(LimitRecipe r, const CominusculeModel& segre, Sampler& rng) {
  if (segre.kind() != CominusculeModel::Kind::Segre) throw std::invalid_argument("limit recipes are built on Segre models");
  const std::size_t dim = segre.tangent_dim();
  // Resample until the normalization reproduces the intended exponents (fails
  // only on the non-generic draws, e.g. w_0 parallel to v_0).
  for (int attempt = 0; attempt < 100; ++attempt) {
    try {
      switch (r) {
        case LimitRecipe::HonestSecant: {
          const SeriesVector v = random_poly(rng, dim, 2);
          const SeriesVector w = random_poly(rng, dim, 2);
          const Series lambda = Series::constant(1, rng.rational());
          if (!generic_in_factors(segre, v.coefficient(0), w.coefficient(0))) continue;
          return LimitConfig::from_data(segre, 0, 0, lambda, v, w);
        }
        case LimitRecipe::PointPlusTangent: {
          const std::size_t l = static_cast<std::size_t>(rng.integer(1, 2));
          const std::size_t m = l + static_cast<std::size_t>(rng.integer(0, 1));
          Series lambda(m + 1);
          lambda.set(0, rng.integer(0, 1));
          lambda.set(m, rng.nonzero_rational());
          const SeriesVector v = random_poly(rng, dim, 2);
          const SeriesVector w = random_poly(rng, dim, 1);
          if (is_zero(fubini_form(segre, 2, {v.coefficient(0), v.coefficient(0)}))) continue;
          if (!generic_in_factors(segre, v.coefficient(0), w.coefficient(0))) continue;
          return LimitConfig::from_data(segre, 0, l, lambda, v, w);
        }
        case LimitRecipe::CoincidentPoints: {
          const std::size_t k = static_cast<std::size_t>(rng.integer(1, 2));
          Series lambda(2);
          lambda.set(0, generic_scalar(rng));
          lambda.set(1, rng.rational());
          const SeriesVector v = random_poly(rng, dim, 2);
          const SeriesVector w = random_poly(rng, dim, 1);
          if (!generic_in_factors(segre, v.coefficient(0), w.coefficient(0))) continue;
          return LimitConfig::from_data(segre, k, 2 * k, lambda, v, w);
        }
        case LimitRecipe::LineDirection: {
          const std::size_t factor = static_cast<std::size_t>(rng.integer(0, static_cast<int>(segre.dims().size()) - 1));
          SeriesVector v = random_poly(rng, dim, 2);
          Vector v0 = v.coefficient(0);
          for (std::size_t i = 0; i < dim; ++i)
            if (segre.factor_of(i) != factor) v0[i] = 0;
          if (is_zero(v0)) continue;
          v.set_coefficient(0, v0);
          Series lambda(2);
          lambda.set(0, generic_scalar(rng));
          lambda.set(1, rng.rational());
          const SeriesVector w = random_poly(rng, dim, 1);
          if (!generic_in_factors(segre, v0, w.coefficient(0), factor, v.coefficient(1))) continue;
          return LimitConfig::from_data(segre, 0, 1, lambda, v, w);
        }
      }
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
  throw std::runtime_error("could not draw a generic configuration for recipe " + to_string(r));
}

}  // namespace border3
