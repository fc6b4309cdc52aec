#include "border3/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace border3 {

Series::Series(std::size_t truncation) : coeffs_(truncation) {
  if (truncation == 0) throw std::invalid_argument("series truncation must be positive");
}

Series::Series(std::size_t truncation, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (truncation == 0) throw std::invalid_argument("series truncation must be positive");
  // Coefficients beyond the truncation are unknown, not zero; drop them.
  coeffs_.resize(truncation);
}

Series Series::constant(std::size_t truncation, const Rational& c) {
  Series s(truncation);
  s.coeffs_[0] = c;
  return s;
}

Series Series::monomial(std::size_t truncation, std::size_t k, const Rational& c) {
  Series s(truncation);
  if (k < truncation) s.coeffs_[k] = c;
  return s;
}

Rational Series::operator[](std::size_t order) const { return order < coeffs_.size() ? coeffs_[order] : Rational(0); }

void Series::set(std::size_t order, const Rational& c) {
  if (order >= coeffs_.size()) throw std::out_of_range("series order beyond truncation");
  coeffs_[order] = c;
}

std::optional<std::size_t> Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return std::nullopt;
}

Series Series::shifted(std::size_t k) const {
  Series out(truncation());
  for (std::size_t i = 0; i + k < coeffs_.size(); ++i) out.coeffs_[i + k] = coeffs_[i];
  return out;
}

Series Series::divided_by_t(std::size_t k) const {
  if (k >= coeffs_.size()) throw std::invalid_argument("division by t^k leaves no known coefficients");
  for (std::size_t i = 0; i < k; ++i)
    if (coeffs_[i] != 0) throw std::invalid_argument("series is not divisible by t^k");
  return Series(coeffs_.size() - k, std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

Series Series::with_truncation(std::size_t truncation) const { return Series(truncation, coeffs_); }

Series Series::compose_scaled(const Series& u) const {
  const std::size_t n = std::min(truncation(), u.truncation());
  const Series tu = u.with_truncation(n).shifted(1);
  Series out = Series::constant(n, coeffs_[0]);
  Series power = Series::constant(n, 1);
  for (std::size_t i = 1; i < n; ++i) {
    power = power * tu;
    if (coeffs_[i] != 0) out += coeffs_[i] * power;
  }
  return out;
}

Series Series::inverse() const {
  if (coeffs_[0] == 0) throw std::domain_error("series with zero constant term is not invertible");
  const std::size_t n = truncation();
  Series out(n);
  out.coeffs_[0] = 1 / coeffs_[0];
  for (std::size_t i = 1; i < n; ++i) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= i; ++j) acc += coeffs_[j] * out.coeffs_[i - j];
    out.coeffs_[i] = -acc * out.coeffs_[0];
  }
  return out;
}

Series& Series::operator+=(const Series& o) {
  if (o.truncation() < truncation()) coeffs_.resize(o.truncation());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (o.truncation() < truncation()) coeffs_.resize(o.truncation());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }

Series operator-(Series a) {
  std::vector<Rational> c = a.coefficients();
  for (auto& x : c) x = -x;
  return Series(a.truncation(), std::move(c));
}

Series operator*(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.truncation(), b.truncation());
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (y[j] != 0) c[i + j] += x[i] * y[j];
  }
  return Series(n, std::move(c));
}

Series operator*(const Rational& c, Series a) {
  std::vector<Rational> v = a.coefficients();
  for (auto& x : v) x *= c;
  return Series(a.truncation(), std::move(v));
}

SeriesVector::SeriesVector(std::size_t dim, std::size_t truncation) : dim_(dim), coeffs_(truncation, Vector(dim)) {
  if (truncation == 0) throw std::invalid_argument("series truncation must be positive");
}

SeriesVector SeriesVector::from_components(const std::vector<Series>& comps) {
  if (comps.empty()) throw std::invalid_argument("series vector needs at least one component");
  std::size_t n = comps[0].truncation();
  for (const auto& c : comps) n = std::min(n, c.truncation());
  SeriesVector out(comps.size(), n);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) out.coeffs_[j][i] = comps[i].coefficients()[j];
  return out;
}

SeriesVector SeriesVector::from_coefficients(std::size_t dim, std::size_t truncation,
                                             const std::vector<Vector>& coeffs) {
  if (coeffs.size() > truncation) throw std::invalid_argument("more coefficients than the truncation allows");
  SeriesVector out(dim, truncation);
  for (std::size_t j = 0; j < coeffs.size(); ++j) out.set_coefficient(j, coeffs[j]);
  return out;
}

SeriesVector SeriesVector::constant(const Vector& v, std::size_t truncation) {
  SeriesVector out(v.size(), truncation);
  out.coeffs_[0] = v;
  return out;
}

void SeriesVector::set_coefficient(std::size_t order, Vector v) {
  if (v.size() != dim_) throw std::invalid_argument("coefficient vector length mismatch");
  coeffs_.at(order) = std::move(v);
}

Series SeriesVector::component(std::size_t i) const {
  if (i >= dim_) throw std::out_of_range("series vector component");
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j] = coeffs_[j][i];
  return Series(coeffs_.size(), std::move(c));
}

std::vector<Series> SeriesVector::components() const {
  std::vector<Series> out;
  out.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out.push_back(component(i));
  return out;
}

std::optional<std::size_t> SeriesVector::valuation() const {
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (!border3::is_zero(coeffs_[j])) return j;
  return std::nullopt;
}

std::size_t SeriesVector::support_end() const {
  for (std::size_t j = coeffs_.size(); j > 0; --j)
    if (!border3::is_zero(coeffs_[j - 1])) return j;
  return 0;
}

SeriesVector SeriesVector::shifted(std::size_t k) const {
  SeriesVector out(dim_, truncation());
  for (std::size_t j = 0; j + k < coeffs_.size(); ++j) out.coeffs_[j + k] = coeffs_[j];
  return out;
}

SeriesVector SeriesVector::divided_by_t(std::size_t k) const {
  if (k >= coeffs_.size()) throw std::invalid_argument("division by t^k leaves no known coefficients");
  for (std::size_t j = 0; j < k; ++j)
    if (!border3::is_zero(coeffs_[j])) throw std::invalid_argument("series vector is not divisible by t^k");
  SeriesVector out(dim_, coeffs_.size() - k);
  for (std::size_t j = k; j < coeffs_.size(); ++j) out.coeffs_[j - k] = coeffs_[j];
  return out;
}

SeriesVector SeriesVector::with_truncation(std::size_t truncation) const {
  SeriesVector out(dim_, truncation);
  for (std::size_t j = 0; j < std::min(truncation, coeffs_.size()); ++j) out.coeffs_[j] = coeffs_[j];
  return out;
}

SeriesVector SeriesVector::compose_scaled(const Series& u) const {
  std::vector<Series> comps = components();
  for (auto& c : comps) c = c.compose_scaled(u);
  return from_components(comps);
}

SeriesVector& SeriesVector::operator+=(const SeriesVector& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("series vector dimension mismatch");
  if (o.truncation() < truncation()) coeffs_.resize(o.truncation());
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    for (std::size_t i = 0; i < dim_; ++i) coeffs_[j][i] += o.coeffs_[j][i];
  return *this;
}

SeriesVector& SeriesVector::operator-=(const SeriesVector& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("series vector dimension mismatch");
  if (o.truncation() < truncation()) coeffs_.resize(o.truncation());
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    for (std::size_t i = 0; i < dim_; ++i) coeffs_[j][i] -= o.coeffs_[j][i];
  return *this;
}

SeriesVector operator+(SeriesVector a, const SeriesVector& b) { return a += b; }
SeriesVector operator-(SeriesVector a, const SeriesVector& b) { return a -= b; }

SeriesVector operator*(const Series& s, const SeriesVector& v) {
  const std::size_t n = std::min(s.truncation(), v.truncation());
  SeriesVector out(v.dim(), n);
  for (std::size_t a = 0; a < n; ++a) {
    if (s.coefficients()[a] == 0) continue;
    for (std::size_t b = 0; a + b < n; ++b) {
      Vector c = out.coefficient(a + b);
      for (std::size_t i = 0; i < v.dim(); ++i) c[i] += s.coefficients()[a] * v.coefficient(b)[i];
      out.set_coefficient(a + b, std::move(c));
    }
  }
  return out;
}

}  // namespace border3
