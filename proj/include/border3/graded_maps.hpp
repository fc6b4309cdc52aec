#pragma once

// Local parameterizations of the homogeneous varieties around their base point,
// generic in the scalar ring so that the same code evaluates at rational points
// and on truncated power series. Every output coordinate has a fixed degree;
// `*_degrees` lists them.

#include "border3/algebra.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace border3 {

// All s x s minors of a rows x cols matrix (row-major), s = 0..min(rows, cols),
// grouped by s, row subsets lexicographic (outer) then column subsets (inner).
template <class R>
std::vector<R> minor_coordinates(const std::vector<R>& m, std::size_t rows, std::size_t cols, const R& zero) {
  if (m.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
  const std::size_t n = std::max(rows, cols);
  SquareOver<R> sq{n, std::vector<R>(n * n, zero)};
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) sq.a[i * n + j] = m[i * cols + j];
  std::vector<R> out;
  for (std::size_t s = 0; s <= std::min(rows, cols); ++s)
    for (const auto& r : combinations(rows, s))
      for (const auto& c : combinations(cols, s)) out.push_back(minor_of(sq, r, c, zero));
  return out;
}

std::vector<std::size_t> minor_degrees(std::size_t rows, std::size_t cols);

// (1, m_{ij} for i<j, Pf_4 on 4-subsets, Pf_6, ...) of a k x k skew matrix,
// subsets in lexicographic order.
template <class R>
std::vector<R> pfaffian_coordinates(const std::vector<R>& m, std::size_t k, const R& zero) {
  if (m.size() != k * k) throw std::invalid_argument("matrix entry count mismatch");
  SquareOver<R> sq{k, m};
  std::vector<R> out;
  for (std::size_t s = 0; 2 * s <= k; ++s)
    for (const auto& idx : combinations(k, 2 * s)) out.push_back(pfaffian_on(sq, idx, zero));
  return out;
}

std::vector<std::size_t> pfaffian_degrees(std::size_t k);

// (e_0 + v_0) (x) ... (x) (e_0 + v_{n-1}) where v_i lives in the span of
// e_1..e_{d_i - 1}; `tangent` concatenates those coordinates factor by factor.
template <class R>
std::vector<R> segre_coordinates(const std::vector<R>& tangent, const std::vector<std::size_t>& dims, const R& zero) {
  std::size_t need = 0;
  for (auto d : dims) need += d - 1;
  if (tangent.size() != need) throw std::invalid_argument("tangent vector length mismatch");
  std::vector<R> out{Ring<R>::one(zero)};
  std::size_t pos = 0;
  for (auto d : dims) {
    std::vector<R> factor{Ring<R>::one(zero)};
    for (std::size_t j = 1; j < d; ++j) factor.push_back(tangent[pos++]);
    std::vector<R> next;
    next.reserve(out.size() * d);
    for (const auto& a : out)
      for (const auto& b : factor) next.push_back(a * b);
    out = std::move(next);
  }
  return out;
}

std::vector<std::size_t> segre_degrees(const std::vector<std::size_t>& dims);

}  // namespace border3
