#include "border3/normal_forms.hpp"

#include "border3/algebra.hpp"
#include "border3/graded_maps.hpp"

#include <algorithm>
#include <stdexcept>

namespace border3 {

namespace {

Index basis_term(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> slots) {
  Index idx(n, 0);
  for (auto [pos, value] : slots) idx[pos] = value;
  return idx;
}

Tensor from_terms(const Dims& dims, const TermList& terms) {
  std::vector<std::pair<Index, Rational>> weighted;
  for (const auto& t : terms) {
    for (std::size_t k = 0; k < t.size(); ++k)
      if (t[k] >= dims[k]) throw std::invalid_argument("dims too small for the requested normal form");
    weighted.emplace_back(t, Rational(1));
  }
  return tensor_from_terms(dims, weighted);
}

std::vector<Rational> matrix_entries(const Matrix& m) { return m.entries(); }

}  // namespace

std::string to_string(TypeTag t) {
  switch (t) {
    case TypeTag::i: return "i";
    case TypeTag::ii: return "ii";
    case TypeTag::iii: return "iii";
    case TypeTag::iv: return "iv";
  }
  return "?";
}

TypeTag parse_type_tag(const std::string& s) {
  if (s == "i") return TypeTag::i;
  if (s == "ii") return TypeTag::ii;
  if (s == "iii") return TypeTag::iii;
  if (s == "iv") return TypeTag::iv;
  throw std::invalid_argument("unknown type tag '" + s + "'");
}

TermList sigma2_terms(std::size_t n, const std::vector<std::size_t>& J) {
  if (n < 2) throw std::invalid_argument("sigma2_point: n >= 2 required");
  if (J.empty()) throw std::invalid_argument("sigma2_point: J must be nonempty");
  std::vector<std::size_t> sorted = J;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("sigma2_point: repeated index in J");
  TermList terms;
  for (auto j : sorted) {
    if (j >= n) throw std::invalid_argument("sigma2_point: J index out of range");
    terms.push_back(basis_term(n, {{j, 1}}));
  }
  return terms;
}

Tensor sigma2_point(std::size_t n, const std::vector<std::size_t>& J, const Dims& dims) {
  if (dims.size() != n) throw std::invalid_argument("sigma2_point: dims must have n entries");
  return from_terms(dims, sigma2_terms(n, J));
}

TermList sigma3_terms(const SigmaThreeSpec& spec) {
  const std::size_t n = spec.n;
  if (n < 2 || (spec.type != TypeTag::i && n < 3))
    throw std::invalid_argument("sigma3_point: n >= 3 required for types ii-iv");
  TermList terms;
  switch (spec.type) {
    case TypeTag::i:
      for (std::size_t v = 0; v < 3; ++v) terms.push_back(Index(n, v));
      break;
    case TypeTag::ii:
      for (std::size_t i = 0; i < n; ++i) terms.push_back(basis_term(n, {{i, 1}}));
      terms.push_back(Index(n, 2));
      break;
    case TypeTag::iii:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) terms.push_back(basis_term(n, {{i, 1}, {j, 1}}));
      for (std::size_t i = 0; i < n; ++i) terms.push_back(basis_term(n, {{i, 2}}));
      break;
    case TypeTag::iv: {
      if (!spec.distinguished_factor) throw std::invalid_argument("sigma3_point: type iv needs a distinguished factor");
      const std::size_t f = *spec.distinguished_factor;
      if (f >= n) throw std::invalid_argument("sigma3_point: distinguished factor out of range");
      for (std::size_t s = 1; s < n; ++s) terms.push_back(basis_term(n, {{0, 1}, {s, 1}}));
      for (std::size_t i = 0; i < n; ++i) terms.push_back(basis_term(n, {{i, 2}}));
      // The distinguished role moves from factor 0 to factor f by swapping the two slots.
      for (auto& t : terms) std::swap(t[0], t[f]);
      break;
    }
  }
  return terms;
}

Tensor sigma3_point(const SigmaThreeSpec& spec) {
  Dims dims = spec.dims.empty() ? Dims(spec.n, 3) : spec.dims;
  if (dims.size() != spec.n) throw std::invalid_argument("sigma3_point: dims must have n entries");
  return from_terms(dims, sigma3_terms(spec));
}

TermList orbit_terms(int orbit_id) {
  switch (orbit_id) {
    case 34: return {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {2, 2, 0}, {2, 0, 2}};
    case 35: return {{0, 0, 1}, {0, 1, 0}, {0, 2, 2}, {1, 0, 0}, {2, 2, 0}};
    case 36: return {{0, 0, 1}, {0, 1, 0}, {0, 2, 2}, {1, 0, 0}, {2, 0, 2}};
    case 37: return {{0, 0, 2}, {0, 1, 1}, {0, 2, 0}, {1, 0, 1}, {1, 1, 0}, {2, 0, 0}};
    case 38: return {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {2, 2, 2}};
    case 39: return {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}};
    default: throw std::invalid_argument("orbit id must be in 34..39");
  }
}

Tensor orbit_representative(int orbit_id) { return from_terms({3, 3, 3}, orbit_terms(orbit_id)); }

const std::vector<OrbitInfo>& border_rank3_orbits() {
  static const std::vector<OrbitInfo> table = {
      {34, TypeTag::iv, 0, 5, 16}, {35, TypeTag::iv, 1, 5, 16},          {36, TypeTag::iv, 2, 5, 16},
      {37, TypeTag::iii, std::nullopt, 5, 18}, {38, TypeTag::ii, std::nullopt, 4, 19},
      {39, TypeTag::i, std::nullopt, 3, 20},
  };
  return table;
}

const OrbitInfo& orbit_info(int orbit_id) {
  for (const auto& o : border_rank3_orbits())
    if (o.id == orbit_id) return o;
  throw std::invalid_argument("orbit id must be in 34..39");
}

Vector grassmann_phi(const Matrix& m, std::size_t k, std::size_t n, bool symmetric) {
  if (symmetric) {
    if (m.rows() != k || m.cols() != k) throw std::invalid_argument("grassmann_phi: k x k symmetric matrix expected");
    if (!(m == m.transpose())) throw std::invalid_argument("grassmann_phi: matrix is not symmetric");
  } else {
    if (k == 0 || k >= n) throw std::invalid_argument("grassmann_phi: 1 <= k <= n-1 required");
    if (m.rows() != k || m.cols() != n - k) throw std::invalid_argument("grassmann_phi: k x (n-k) matrix expected");
  }
  return minor_coordinates(matrix_entries(m), m.rows(), m.cols(), Rational(0));
}

Vector spinor_phi(const Matrix& m, std::size_t k) {
  if (m.rows() != k || m.cols() != k) throw std::invalid_argument("spinor_phi: k x k matrix expected");
  if (!(m.transpose() == Rational(-1) * m)) throw std::invalid_argument("spinor_phi: matrix is not skew-symmetric");
  return pfaffian_coordinates(matrix_entries(m), k, Rational(0));
}

Rational pfaffian(const Matrix& skew) {
  if (!skew.is_square()) throw std::invalid_argument("pfaffian of a non-square matrix");
  return border3::pfaffian(SquareOver<Rational>{skew.rows(), skew.entries()}, Rational(0));
}

Matrix epsilon(std::size_t r, std::size_t rows, std::size_t cols) {
  if (r > std::min(rows, cols)) throw std::invalid_argument("epsilon: rank exceeds shape");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < r; ++i) m(i, i) = 1;
  return m;
}

Matrix epsilon_skew(std::size_t r, std::size_t k) {
  if (2 * r > k) throw std::invalid_argument("epsilon_skew: 2r <= k required");
  Matrix m(k, k);
  for (std::size_t i = 0; i < r; ++i) {
    m(i, r + i) = 1;
    m(r + i, i) = -1;
  }
  return m;
}

}  // namespace border3
