#pragma once

// Determinants, Pfaffians and minors over any commutative ring type R that
// supports +, -, * and copy. Expansion-based, intended for matrices of size <= 8.

#include "border3/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace border3 {

// Specialized next to each scalar type: `static R one(const R& zero)` returns
// the unit of the ring that `zero` lives in.
template <class R>
struct Ring;

template <>
struct Ring<Rational> {
  static Rational one(const Rational&) { return 1; }
};

// Row-major square matrix over R.
template <class R>
struct SquareOver {
  std::size_t n = 0;
  std::vector<R> a;
  const R& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

namespace detail {

template <class R>
R det_rows(const SquareOver<R>& m, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols, const R& zero) {
  const std::size_t k = rows.size();
  if (k == 0) return Ring<R>::one(zero);
  if (k == 1) return m(rows[0], cols[0]);
  if (k == 2) return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
  R acc = zero;
  const std::size_t r0 = rows.front();
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < k; ++j) {
    const R& x = m(r0, cols[j]);
    std::vector<std::size_t> sub_cols;
    sub_cols.reserve(k - 1);
    for (std::size_t c = 0; c < k; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    R minor = det_rows(m, sub_rows, sub_cols, zero);
    if (j % 2 == 0)
      acc = acc + x * minor;
    else
      acc = acc - x * minor;
  }
  return acc;
}

template <class R>
R pf_indices(const SquareOver<R>& m, const std::vector<std::size_t>& idx, const R& zero) {
  const std::size_t k = idx.size();
  if (k == 0) return Ring<R>::one(zero);
  if (k % 2 == 1) return zero;
  if (k == 2) return m(idx[0], idx[1]);
  R acc = zero;
  for (std::size_t j = 1; j < k; ++j) {
    std::vector<std::size_t> rest;
    rest.reserve(k - 2);
    for (std::size_t c = 1; c < k; ++c)
      if (c != j) rest.push_back(idx[c]);
    R term = m(idx[0], idx[j]) * pf_indices(m, rest, zero);
    if (j % 2 == 1)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

}  // namespace detail

// Minor with the given (sorted) row and column index sets.
template <class R>
R minor_of(const SquareOver<R>& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols, const R& zero) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor needs equally many rows and columns");
  return detail::det_rows(m, rows, cols, zero);
}

template <class R>
R det(const SquareOver<R>& m, const R& zero) {
  std::vector<std::size_t> idx(m.n);
  for (std::size_t i = 0; i < m.n; ++i) idx[i] = i;
  return detail::det_rows(m, idx, idx, zero);
}

// Pfaffian of the principal submatrix on `idx`; first-row expansion.
template <class R>
R pfaffian_on(const SquareOver<R>& m, const std::vector<std::size_t>& idx, const R& zero) {
  return detail::pf_indices(m, idx, zero);
}

template <class R>
R pfaffian(const SquareOver<R>& m, const R& zero) {
  std::vector<std::size_t> idx(m.n);
  for (std::size_t i = 0; i < m.n; ++i) idx[i] = i;
  return detail::pf_indices(m, idx, zero);
}

// Adjugate of a 3x3 matrix, row-major.
template <class R>
std::vector<R> adjugate3(const std::vector<R>& x) {
  auto e = [&](std::size_t i, std::size_t j) -> const R& { return x[i * 3 + j]; };
  std::vector<R> adj;
  adj.reserve(9);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t j = 0; j < 3; ++j) {
      // adj(X)_{kj} = cofactor C_{jk}: delete row j, column k.
      const std::size_t r0 = j == 0 ? 1 : 0, r1 = j == 2 ? 1 : 2;
      const std::size_t c0 = k == 0 ? 1 : 0, c1 = k == 2 ? 1 : 2;
      if ((j + k) % 2 == 0)
        adj.push_back(e(r0, c0) * e(r1, c1) - e(r0, c1) * e(r1, c0));
      else
        adj.push_back(e(r0, c1) * e(r1, c0) - e(r0, c0) * e(r1, c1));
    }
  return adj;
}

template <class R>
std::vector<R> mul3(const std::vector<R>& a, const std::vector<R>& b, const R& zero) {
  std::vector<R> c(9, zero);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t j = 0; j < 3; ++j) c[i * 3 + j] = c[i * 3 + j] + a[i * 3 + k] * b[k * 3 + j];
  return c;
}

// Z adj(X) Y - Y adj(X) Z, the commutator form of Strassen's quartics.
template <class R>
std::vector<R> strassen_block(const std::vector<R>& x, const std::vector<R>& y, const std::vector<R>& z,
                              const R& zero) {
  const std::vector<R> adj = adjugate3(x);
  const std::vector<R> a = mul3(mul3(z, adj, zero), y, zero);
  const std::vector<R> b = mul3(mul3(y, adj, zero), z, zero);
  std::vector<R> p(9, zero);
  for (std::size_t i = 0; i < 9; ++i) p[i] = a[i] - b[i];
  return p;
}

}  // namespace border3
