#pragma once

#include "border3/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace border3 {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Rational>& entries() const { return entries_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& c, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);

// Reduced row echelon form. `pivots[i]` is the pivot column of row i.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon rref(Matrix m);

std::size_t rank(const Matrix& m);
std::size_t rank_of(const std::vector<Vector>& vectors);

// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);

Rational determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

// Some solution of m x = b, free variables set to zero; nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Row-reduced basis of the span of the given vectors (all of one length).
std::vector<Vector> span_basis(const std::vector<Vector>& vectors);
bool in_span(const std::vector<Vector>& basis, const Vector& v);

}  // namespace border3
