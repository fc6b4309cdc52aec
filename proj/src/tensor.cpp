#include "border3/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace border3 {

namespace {

std::size_t checked_product(const Dims& dims) {
  std::size_t p = 1;
  for (auto d : dims) {
    if (d == 0) throw std::invalid_argument("tensor dimension 0");
    if (p > kMaxTensorEntries / d) throw std::invalid_argument("tensor exceeds 10^6 entries");
    p *= d;
  }
  return p;
}

// Strides for splitting a flat offset around `mode`: offset = (outer*d + i)*inner + rest.
struct Split {
  std::size_t outer = 1;
  std::size_t inner = 1;
};

Split split_at(const Dims& dims, std::size_t mode) {
  Split s;
  for (std::size_t k = 0; k < mode; ++k) s.outer *= dims[k];
  for (std::size_t k = mode + 1; k < dims.size(); ++k) s.inner *= dims[k];
  return s;
}

Tensor mode_product(const Tensor& t, std::size_t mode, const Matrix& m) {
  if (m.cols() != t.dim(mode)) throw std::invalid_argument("mode map shape mismatch in mode " + std::to_string(mode));
  Dims out_dims = t.dims();
  out_dims[mode] = m.rows();
  const Split s = split_at(t.dims(), mode);
  const std::size_t din = t.dim(mode);
  const std::size_t dout = m.rows();
  std::vector<Rational> out(s.outer * dout * s.inner);
  for (std::size_t o = 0; o < s.outer; ++o)
    for (std::size_t b = 0; b < din; ++b)
      for (std::size_t r = 0; r < s.inner; ++r) {
        const Rational& x = t.at((o * din + b) * s.inner + r);
        if (x == 0) continue;
        for (std::size_t a = 0; a < dout; ++a)
          if (m(a, b) != 0) out[(o * dout + a) * s.inner + r] += m(a, b) * x;
      }
  return Tensor(std::move(out_dims), std::move(out));
}

}  // namespace

Tensor::Tensor(Dims dims, std::vector<Rational> entries) : dims_(std::move(dims)), entries_(std::move(entries)) {
  if (dims_.empty()) throw std::invalid_argument("tensor needs at least one mode");
  if (entries_.size() != checked_product(dims_))
    throw std::invalid_argument("entry count " + std::to_string(entries_.size()) + " does not match dims");
}

Tensor Tensor::zeros(Dims dims) {
  const std::size_t n = checked_product(dims);
  return Tensor(std::move(dims), std::vector<Rational>(n));
}

std::size_t Tensor::offset(const Index& index) const {
  if (index.size() != dims_.size()) throw std::invalid_argument("index arity mismatch");
  std::size_t off = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (index[k] >= dims_[k]) throw std::out_of_range("tensor index out of range");
    off = off * dims_[k] + index[k];
  }
  return off;
}

Index Tensor::index_of(std::size_t offset) const {
  Index idx(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    idx[k] = offset % dims_[k];
    offset /= dims_[k];
  }
  return idx;
}

bool Tensor::is_zero() const { return border3::is_zero(entries_); }

Tensor operator+(const Tensor& a, const Tensor& b) {
  if (a.dims() != b.dims()) throw std::invalid_argument("tensor sum shape mismatch");
  std::vector<Rational> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.at(i);
  return Tensor(a.dims(), std::move(e));
}

Tensor operator-(const Tensor& a, const Tensor& b) { return a + Rational(-1) * b; }

Tensor operator*(const Rational& c, const Tensor& a) {
  std::vector<Rational> e(a.entries());
  for (auto& x : e) x *= c;
  return Tensor(a.dims(), std::move(e));
}

Tensor make_tensor(Dims dims, std::vector<Rational> entries) {
  if (dims.size() < 2) throw std::invalid_argument("tensor needs at least two modes");
  return Tensor(std::move(dims), std::move(entries));
}

Tensor tensor_from_terms(const Dims& dims, const std::vector<std::pair<Index, Rational>>& terms) {
  Tensor z = Tensor::zeros(dims);
  std::vector<Rational> e = z.entries();
  for (const auto& [idx, c] : terms) e[z.offset(idx)] += c;
  return Tensor(dims, std::move(e));
}

Tensor outer(const std::vector<Vector>& factors) {
  Dims dims;
  for (const auto& f : factors) dims.push_back(f.size());
  Tensor z = Tensor::zeros(dims);
  std::vector<Rational> e(z.size());
  for (std::size_t off = 0; off < e.size(); ++off) {
    const Index idx = z.index_of(off);
    Rational p = 1;
    for (std::size_t k = 0; k < factors.size() && p != 0; ++k) p *= factors[k][idx[k]];
    e[off] = p;
  }
  return Tensor(std::move(dims), std::move(e));
}

Matrix flatten(const Tensor& t, std::size_t mode) {
  if (mode >= t.order()) throw std::invalid_argument("flatten: mode out of range");
  const Split s = split_at(t.dims(), mode);
  const std::size_t d = t.dim(mode);
  Matrix m(d, s.outer * s.inner);
  for (std::size_t o = 0; o < s.outer; ++o)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t r = 0; r < s.inner; ++r) m(i, o * s.inner + r) = t.at((o * d + i) * s.inner + r);
  return m;
}

Matrix flatten_modes(const Tensor& t, const std::vector<std::size_t>& row_modes) {
  std::vector<bool> is_row(t.order(), false);
  for (auto m : row_modes) {
    if (m >= t.order()) throw std::invalid_argument("flatten_modes: mode out of range");
    is_row[m] = true;
  }
  std::vector<std::size_t> rows, cols;
  for (std::size_t m = 0; m < t.order(); ++m) (is_row[m] ? rows : cols).push_back(m);
  std::size_t nr = 1, nc = 1;
  for (auto m : rows) nr *= t.dim(m);
  for (auto m : cols) nc *= t.dim(m);
  Matrix out(nr, nc);
  for (std::size_t off = 0; off < t.size(); ++off) {
    if (t.at(off) == 0) continue;
    const Index idx = t.index_of(off);
    std::size_t r = 0, c = 0;
    for (auto m : rows) r = r * t.dim(m) + idx[m];
    for (auto m : cols) c = c * t.dim(m) + idx[m];
    out(r, c) = t.at(off);
  }
  return out;
}

std::vector<std::size_t> multilinear_rank(const Tensor& t) {
  std::vector<std::size_t> r;
  for (std::size_t m = 0; m < t.order(); ++m) r.push_back(rank(flatten(t, m)));
  return r;
}

ConciseCore concise_core(const Tensor& t) {
  if (t.is_zero()) throw std::invalid_argument("concise_core of the zero tensor");
  std::vector<Matrix> bases;
  std::vector<std::vector<std::size_t>> pivots;
  for (std::size_t m = 0; m < t.order(); ++m) {
    const Echelon e = rref(flatten(t, m).transpose());
    const std::size_t r = e.pivots.size();
    Matrix u(t.dim(m), r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < t.dim(m); ++i) u(i, j) = e.reduced(j, i);
    bases.push_back(std::move(u));
    pivots.push_back(e.pivots);
  }
  // Each basis is the identity on its pivot rows, so the core is T restricted
  // to the pivot coordinates.
  std::vector<Matrix> pickers;
  for (std::size_t m = 0; m < t.order(); ++m) {
    Matrix p(pivots[m].size(), t.dim(m));
    for (std::size_t j = 0; j < pivots[m].size(); ++j) p(j, pivots[m][j]) = 1;
    pickers.push_back(std::move(p));
  }
  return {apply_mode_maps(t, pickers), std::move(bases)};
}

Tensor apply_mode_maps(const Tensor& t, const std::vector<Matrix>& maps) {
  if (maps.size() != t.order()) throw std::invalid_argument("one map per mode required");
  Tensor out = t;
  for (std::size_t m = 0; m < maps.size(); ++m) out = mode_product(out, m, maps[m]);
  return out;
}

GLTuple::GLTuple(std::vector<Matrix> mats) : mats_(std::move(mats)) {
  for (const auto& m : mats_) {
    if (!m.is_square()) throw std::invalid_argument("GL tuple entries must be square");
    if (determinant(m) == 0) throw std::invalid_argument("GL tuple entry is singular");
  }
}

GLTuple GLTuple::identity(const Dims& dims) {
  std::vector<Matrix> mats;
  for (auto d : dims) mats.push_back(Matrix::identity(d));
  return GLTuple(std::move(mats));
}

GLTuple GLTuple::inverse() const {
  std::vector<Matrix> inv;
  for (const auto& m : mats_) inv.push_back(*border3::inverse(m));
  return GLTuple(std::move(inv));
}

Tensor apply_gl(const Tensor& t, const GLTuple& g) {
  if (g.size() != t.order()) throw std::invalid_argument("GL tuple arity does not match tensor order");
  for (std::size_t m = 0; m < t.order(); ++m)
    if (g.mats()[m].rows() != t.dim(m)) throw std::invalid_argument("GL tuple shape mismatch");
  return apply_mode_maps(t, g.mats());
}

Tensor contract(const Tensor& t, std::size_t mode, const Vector& covector) {
  if (mode >= t.order()) throw std::invalid_argument("contract: mode out of range");
  if (covector.size() != t.dim(mode)) throw std::invalid_argument("contract: covector length mismatch");
  if (t.order() == 1) throw std::invalid_argument("contract: cannot contract an order-1 tensor");
  Matrix row(1, covector.size(), covector);
  std::vector<Matrix> maps;
  for (std::size_t m = 0; m < t.order(); ++m) maps.push_back(m == mode ? row : Matrix::identity(t.dim(m)));
  const Tensor r = apply_mode_maps(t, maps);
  Dims dims = t.dims();
  dims.erase(dims.begin() + static_cast<std::ptrdiff_t>(mode));
  return Tensor(std::move(dims), r.entries());
}

Matrix slice(const Tensor& t, std::size_t mode, std::size_t i) {
  if (t.order() != 3) throw std::invalid_argument("slice: order-3 tensor expected");
  Vector e(t.dim(mode));
  e.at(i) = 1;
  const Tensor s = contract(t, mode, e);
  return Matrix(s.dim(0), s.dim(1), s.entries());
}

Tensor permute_modes(const Tensor& t, const std::vector<std::size_t>& perm) {
  if (perm.size() != t.order()) throw std::invalid_argument("permutation arity mismatch");
  std::vector<std::size_t> check = perm;
  std::sort(check.begin(), check.end());
  for (std::size_t k = 0; k < check.size(); ++k)
    if (check[k] != k) throw std::invalid_argument("not a permutation");
  Dims dims(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) dims[j] = t.dim(perm[j]);
  Tensor z = Tensor::zeros(dims);
  std::vector<Rational> e(z.size());
  Index out(perm.size());
  for (std::size_t off = 0; off < t.size(); ++off) {
    if (t.at(off) == 0) continue;
    const Index idx = t.index_of(off);
    for (std::size_t j = 0; j < perm.size(); ++j) out[j] = idx[perm[j]];
    e[z.offset(out)] = t.at(off);
  }
  return Tensor(std::move(dims), std::move(e));
}

Tensor group_modes(const Tensor& t, const std::vector<std::vector<std::size_t>>& groups) {
  std::vector<std::size_t> perm;
  Dims dims;
  for (const auto& g : groups) {
    if (g.empty()) throw std::invalid_argument("empty mode group");
    std::size_t d = 1;
    for (auto m : g) {
      perm.push_back(m);
      d *= t.dim(m);
    }
    dims.push_back(d);
  }
  const Tensor p = permute_modes(t, perm);
  return Tensor(std::move(dims), p.entries());
}

Tensor drop_unit_modes(const Tensor& t) {
  Dims dims;
  for (auto d : t.dims())
    if (d != 1) dims.push_back(d);
  if (dims.empty()) dims.push_back(1);
  return Tensor(std::move(dims), t.entries());
}

}  // namespace border3
