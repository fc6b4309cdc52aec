#pragma once

#include "border3/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace border3 {

// Element of a small prime field F_q, q in {2, 3, 5}.
struct FieldElement {
  std::uint8_t value = 0;
  std::uint8_t prime = 2;

  static FieldElement reduce(const Rational& x, unsigned q);  // domain_error if q divides the denominator
  FieldElement operator+(FieldElement o) const;
  FieldElement operator-(FieldElement o) const;
  FieldElement operator*(FieldElement o) const;
  FieldElement inverse() const;  // domain_error on zero
  friend bool operator==(FieldElement, FieldElement) = default;
};

bool is_supported_prime(unsigned q);

using FqVector = std::vector<std::uint8_t>;

// Scales v so that its first nonzero coordinate is 1. Zero stays zero.
void normalize_projective(FqVector& v, unsigned q);

// Base-q integer code of a vector (caller guarantees it fits in 64 bits).
std::uint64_t encode(const FqVector& v, unsigned q);

// All vectors of F_q^d with first nonzero coordinate 1, in lexicographic order.
std::vector<FqVector> projective_points(std::size_t d, unsigned q);

// Incrementally built row-echelon basis over F_q.
class FqBasis {
 public:
  FqBasis(unsigned q, std::size_t dim) : q_(q), dim_(dim) {}

  // Adds v if it is independent of the current span; returns whether it was added.
  bool add(const FqVector& v);
  bool contains(const FqVector& v) const;
  std::size_t size() const { return rows_.size(); }
  const std::vector<FqVector>& rows() const { return rows_; }
  unsigned prime() const { return q_; }
  std::size_t dim() const { return dim_; }

 private:
  FqVector reduced(FqVector v) const;

  unsigned q_;
  std::size_t dim_;
  std::vector<FqVector> rows_;  // rows_[i] has a 1 at pivots_[i] and 0 at all other pivots
  std::vector<std::size_t> pivots_;
};

}  // namespace border3
