#pragma once

// Truncated formal power series in one parameter t over Q. A series with
// truncation T knows its coefficients of t^0 .. t^{T-1}; everything from t^T on
// is unknown, so products and compositions keep the smaller truncation.

#include "border3/algebra.hpp"
#include "border3/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace border3 {

class Series {
 public:
  explicit Series(std::size_t truncation = 1);
  Series(std::size_t truncation, std::vector<Rational> coeffs);
  static Series constant(std::size_t truncation, const Rational& c);
  // c * t^k.
  static Series monomial(std::size_t truncation, std::size_t k, const Rational& c = 1);

  std::size_t truncation() const { return coeffs_.size(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // Zero for orders at or beyond the truncation.
  Rational operator[](std::size_t order) const;
  void set(std::size_t order, const Rational& c);

  // Lowest order with a nonzero coefficient; nullopt if zero up to truncation.
  std::optional<std::size_t> valuation() const;
  bool is_zero() const { return !valuation(); }

  // t^k * s (truncation kept; coefficients pushed past it are dropped).
  Series shifted(std::size_t k) const;
  // s / t^k; requires the first k coefficients to vanish. Truncation drops by k.
  Series divided_by_t(std::size_t k) const;
  // Same coefficients with a different truncation; padding with zeros is only
  // meaningful when the series is known to be a polynomial.
  Series with_truncation(std::size_t truncation) const;
  // s(t * u(t)).
  Series compose_scaled(const Series& u) const;
  // 1 / s for s(0) != 0.
  Series inverse() const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);

  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator-(Series a);
Series operator*(const Series& a, const Series& b);
Series operator*(const Rational& c, Series a);

template <>
struct Ring<Series> {
  static Series one(const Series& zero) { return Series::constant(zero.truncation(), 1); }
};

// A curve in Q^dim: coefficient vector of t^j for j < truncation.
class SeriesVector {
 public:
  SeriesVector(std::size_t dim, std::size_t truncation);
  static SeriesVector from_components(const std::vector<Series>& comps);
  // coeffs[j] is the coefficient of t^j; truncation must be >= coeffs.size().
  static SeriesVector from_coefficients(std::size_t dim, std::size_t truncation, const std::vector<Vector>& coeffs);
  static SeriesVector constant(const Vector& v, std::size_t truncation);

  std::size_t dim() const { return dim_; }
  std::size_t truncation() const { return coeffs_.size(); }
  const Vector& coefficient(std::size_t order) const { return coeffs_.at(order); }
  void set_coefficient(std::size_t order, Vector v);
  Series component(std::size_t i) const;
  std::vector<Series> components() const;

  std::optional<std::size_t> valuation() const;
  bool is_zero() const { return !valuation(); }
  // Index of the last nonzero coefficient + 1 (0 for the zero curve).
  std::size_t support_end() const;

  SeriesVector shifted(std::size_t k) const;
  SeriesVector divided_by_t(std::size_t k) const;
  SeriesVector with_truncation(std::size_t truncation) const;
  SeriesVector compose_scaled(const Series& u) const;

  SeriesVector& operator+=(const SeriesVector& o);
  SeriesVector& operator-=(const SeriesVector& o);

  friend bool operator==(const SeriesVector& a, const SeriesVector& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Vector> coeffs_;
};

SeriesVector operator+(SeriesVector a, const SeriesVector& b);
SeriesVector operator-(SeriesVector a, const SeriesVector& b);
SeriesVector operator*(const Series& s, const SeriesVector& v);

}  // namespace border3
