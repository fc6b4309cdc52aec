#pragma once

// Independent reference computations for the test suites. Deliberately written
// with different algorithms than the library (modular elimination, Leibniz
// expansion, explicit index formulas) so that agreement is meaningful.

#include "border3/linalg.hpp"
#include "border3/tensor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

using border3::Matrix;
using border3::Rational;
using border3::Tensor;

inline std::int64_t mod_reduce(const Rational& q, std::int64_t p) {
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw std::domain_error("denominator vanishes mod p");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
  mpz_class r = (num * inv) % p;
  if (r < 0) r += p;
  return r.get_si();
}

inline std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % p);
    b = static_cast<std::int64_t>((__int128)b * b % p);
    e >>= 1;
  }
  return r;
}

// Rank modulo a large prime. Equals the rational rank except on a thin set of
// matrices; used only on structured small-integer inputs.
inline std::size_t rank_mod_p(const Matrix& m, std::int64_t p = 1000000007) {
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = mod_reduce(m(i, j), p);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[r]);
    const std::int64_t inv = pow_mod(a[r][c], p - 2, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>((__int128)a[i][c] * inv % p);
      for (std::size_t j = c; j < m.cols(); ++j) {
        a[i][j] = static_cast<std::int64_t>((a[i][j] - (__int128)f * a[r][j]) % p);
        if (a[i][j] < 0) a[i][j] += p;
      }
    }
    ++r;
  }
  return r;
}

// Leibniz expansion over all permutations.
inline Rational det_leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Flattening built directly from the definition: row i is the contraction with e_i^*.
inline Matrix flatten_by_definition(const Tensor& t, std::size_t mode) {
  std::size_t cols = t.size() / t.dim(mode);
  Matrix m(t.dim(mode), cols);
  std::vector<std::size_t> counter(t.dim(mode), 0);
  for (std::size_t off = 0; off < t.size(); ++off) {
    const auto idx = t.index_of(off);
    std::size_t col = 0;
    for (std::size_t k = 0; k < t.order(); ++k)
      if (k != mode) col = col * t.dim(k) + idx[k];
    m(idx[mode], col) = t.at(off);
  }
  return m;
}

// P(T)^s_t = sum_{j,k} (-1)^{j+k} det(X without row j, col k) (Y^j_t Z^s_k - Y^s_k Z^j_t)
// written out with explicit 2x2 minors.
inline std::vector<Rational> strassen_by_index(const Matrix& x, const Matrix& y, const Matrix& z) {
  auto minor = [&](std::size_t j, std::size_t k) {
    std::size_t r[2], c[2], nr = 0, nc = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i != j) r[nr++] = i;
      if (i != k) c[nc++] = i;
    }
    return Rational(x(r[0], c[0]) * x(r[1], c[1]) - x(r[0], c[1]) * x(r[1], c[0]));
  };
  std::vector<Rational> out;
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t t = 0; t < 3; ++t) {
      Rational v = 0;
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          const Rational sign = (j + k) % 2 == 0 ? 1 : -1;
          v += sign * minor(j, k) * (y(j, t) * z(s, k) - y(s, k) * z(j, t));
        }
      out.push_back(v);
    }
  return out;
}

}  // namespace oracle
