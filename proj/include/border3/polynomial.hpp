#pragma once

#include "border3/algebra.hpp"
#include "border3/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace border3 {

using Exponents = std::vector<std::uint16_t>;

// Sparse polynomial in a fixed number of variables over Q. Terms with zero
// coefficient are never stored.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  Polynomial(std::size_t nvars, const Rational& c);

  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Exponents& e, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  // -1 for the zero polynomial.
  int total_degree() const;
  // Largest degree in the variables with mask[i] set; -1 for the zero polynomial.
  int max_degree_in(const std::vector<bool>& mask) const;
  bool homogeneous_in(const std::vector<bool>& mask, int degree) const;

  Polynomial derivative(std::size_t i) const;
  Rational evaluate(const Vector& point) const;
  // Replace each variable by a polynomial (all in the same target ring).
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, Polynomial a);

template <>
struct Ring<Polynomial> {
  static Polynomial one(const Polynomial& zero) { return Polynomial(zero.nvars(), Rational(1)); }
};

// All exponent vectors in `nvars` variables with total degree exactly d.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, int d);

}  // namespace border3
