#pragma once

#include "border3/linalg.hpp"
#include "border3/rational.hpp"

#include <cstddef>
#include <vector>

namespace border3 {

using Dims = std::vector<std::size_t>;
using Index = std::vector<std::size_t>;

inline constexpr std::size_t kMaxTensorEntries = 1'000'000;

// Dense tensor with exact entries, row-major (mode 0 slowest).
// Order-1 tensors are allowed internally (contractions of matrices); the
// public constructor make_tensor insists on order >= 2.
class Tensor {
 public:
  Tensor(Dims dims, std::vector<Rational> entries);
  static Tensor zeros(Dims dims);

  std::size_t order() const { return dims_.size(); }
  const Dims& dims() const { return dims_; }
  std::size_t dim(std::size_t mode) const { return dims_.at(mode); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Rational>& entries() const { return entries_; }

  std::size_t offset(const Index& index) const;
  Index index_of(std::size_t offset) const;
  const Rational& operator[](const Index& index) const { return entries_[offset(index)]; }
  const Rational& at(std::size_t offset) const { return entries_[offset]; }

  bool is_zero() const;

  friend bool operator==(const Tensor& a, const Tensor& b) = default;

 private:
  Dims dims_;
  std::vector<Rational> entries_;
};

Tensor operator+(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a, const Tensor& b);
Tensor operator*(const Rational& c, const Tensor& a);

Tensor make_tensor(Dims dims, std::vector<Rational> entries);

// Sum of coefficient * e_{i1} (x) ... (x) e_{in} over the listed index tuples.
Tensor tensor_from_terms(const Dims& dims, const std::vector<std::pair<Index, Rational>>& terms);

// a_1 (x) ... (x) a_n.
Tensor outer(const std::vector<Vector>& factors);

// dims[mode] x (prod of the others); columns lexicographic over the remaining modes.
Matrix flatten(const Tensor& t, std::size_t mode);

// Rows indexed by the modes in `row_modes` (in increasing order), columns by the rest.
Matrix flatten_modes(const Tensor& t, const std::vector<std::size_t>& row_modes);

std::vector<std::size_t> multilinear_rank(const Tensor& t);

// T = (U_0 (x) ... (x) U_{n-1}) core, with U_i of shape dims[i] x r_i and
// full column rank. U_i holds an echelon basis of the mode-i column space.
struct ConciseCore {
  Tensor core;
  std::vector<Matrix> bases;
};
ConciseCore concise_core(const Tensor& t);

// Multilinear image (M_0 (x) ... (x) M_{n-1}) t; M_i may be rectangular and singular.
Tensor apply_mode_maps(const Tensor& t, const std::vector<Matrix>& maps);

// Element of GL(A_1) x ... x GL(A_n).
class GLTuple {
 public:
  explicit GLTuple(std::vector<Matrix> mats);
  static GLTuple identity(const Dims& dims);

  const std::vector<Matrix>& mats() const { return mats_; }
  std::size_t size() const { return mats_.size(); }
  GLTuple inverse() const;

 private:
  std::vector<Matrix> mats_;
};

Tensor apply_gl(const Tensor& t, const GLTuple& g);

// Slice along `mode` against the covector; order drops by one.
Tensor contract(const Tensor& t, std::size_t mode, const Vector& covector);

// Slice against the i-th dual basis vector of `mode`, as a matrix (order-3 input only).
Matrix slice(const Tensor& t, std::size_t mode, std::size_t i);

// Result mode j is input mode perm[j].
Tensor permute_modes(const Tensor& t, const std::vector<std::size_t>& perm);

// Regroups modes into fewer factors: groups must partition the modes; within a
// group, the earlier mode is the slower index.
Tensor group_modes(const Tensor& t, const std::vector<std::vector<std::size_t>>& groups);

// Removes modes of size one (entries unchanged). At least one mode is kept.
Tensor drop_unit_modes(const Tensor& t);

}  // namespace border3
