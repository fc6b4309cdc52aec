#pragma once

#include "border3/polynomial.hpp"
#include "border3/tensor.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace border3 {

// Strassen's 27 quartics on C^3 (x) C^3 (x) C^3. With X, Y, Z the slices
// T(e_0^*), T(e_1^*), T(e_2^*) along mode 0:
//   values  0.. 8: Z adj(X) Y - Y adj(X) Z
//   values  9..17: X adj(Y) Z - Z adj(Y) X
//   values 18..26: Y adj(Z) X - X adj(Z) Y
// each block listing entries (s,t) row-major.
std::vector<Rational> strassen_equations(const Tensor& t);

// True when all 27 quartics vanish at t.
bool strassen_vanishes(const Tensor& t);

// The same 27 quartics as polynomials in the 27 entries (variable index = entry offset).
const std::vector<Polynomial>& strassen_polynomials();

std::size_t strassen_jacobian_rank(const Tensor& t);

bool subspace_membership(const Tensor& t, const std::vector<std::size_t>& bounds);

// Homogeneous cubic in (s,t,u).
class TernaryCubic {
 public:
  TernaryCubic() = default;
  // Throws unless p is a homogeneous cubic in 3 variables (or zero).
  explicit TernaryCubic(const Polynomial& p);

  const Rational& coeff(int i, int j, int k) const;
  void set(int i, int j, int k, const Rational& c);
  bool is_zero() const;
  Polynomial to_polynomial() const;
  std::string to_string() const;

  friend bool operator==(const TernaryCubic& a, const TernaryCubic& b) = default;

 private:
  static std::size_t slot(int i, int j, int k);
  std::array<Rational, 10> c_{};
};

enum class LinePattern { IdenticallyZero, TripleLine, DoubleLinePlusLine, Squarefree };

std::string to_string(LinePattern p);

// det(s S_0 + t S_1 + u S_2) for the three slices along `mode`.
TernaryCubic slice_det_cubic(const Tensor& t, std::size_t mode);

LinePattern cubic_line_pattern(const TernaryCubic& c);

// Squarefreeness of a nonzero homogeneous polynomial in 3 variables, decided by
// bivariate gcd(f, f_x, f_y) after dehomogenizing at a point where it is nonzero.
bool is_squarefree_ternary(const Polynomial& form);

}  // namespace border3
