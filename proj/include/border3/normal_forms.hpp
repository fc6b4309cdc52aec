#pragma once

#include "border3/linalg.hpp"
#include "border3/tensor.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace border3 {

enum class TypeTag { i, ii, iii, iv };

std::string to_string(TypeTag t);
TypeTag parse_type_tag(const std::string& s);

// A normal form as a list of unit-coefficient basis terms e_{i_0} (x) ... (x) e_{i_{n-1}}.
using TermList = std::vector<Index>;

// sum over j in J of e_0 (x) ... (x) e_1 (slot j) (x) ... (x) e_0.
TermList sigma2_terms(std::size_t n, const std::vector<std::size_t>& J);
Tensor sigma2_point(std::size_t n, const std::vector<std::size_t>& J, const Dims& dims);

struct SigmaThreeSpec {
  TypeTag type = TypeTag::i;
  std::size_t n = 3;
  Dims dims;  // empty means all 3
  std::optional<std::size_t> distinguished_factor;
};

TermList sigma3_terms(const SigmaThreeSpec& spec);
Tensor sigma3_point(const SigmaThreeSpec& spec);

TermList orbit_terms(int orbit_id);
Tensor orbit_representative(int orbit_id);

// Border rank 3 orbit data: (type, distinguished factor for type iv, rank, projective orbit
// dimension at dims (3,3,3)).
struct OrbitInfo {
  int id;
  TypeTag type;
  std::optional<std::size_t> distinguished_factor;
  int rank;
  int orbit_dimension;
};
const std::vector<OrbitInfo>& border_rank3_orbits();
const OrbitInfo& orbit_info(int orbit_id);

// (1, M, minors of size 2, ..., size k) of a k x (n-k) matrix, or of a k x k
// symmetric matrix when `symmetric` is set.
Vector grassmann_phi(const Matrix& m, std::size_t k, std::size_t n, bool symmetric);

// (1, m_{ij} (i<j), Pf_4, Pf_6, ...) of a k x k skew-symmetric matrix.
Vector spinor_phi(const Matrix& m, std::size_t k);

Rational pfaffian(const Matrix& skew);

// The block matrices eps_r = diag(1,...,1,0,...,0) (k x cols) and the skew
// [[0, I_r, 0], [-I_r, 0, 0], [0, 0, 0]] (k x k).
Matrix epsilon(std::size_t r, std::size_t rows, std::size_t cols);
Matrix epsilon_skew(std::size_t r, std::size_t k);

}  // namespace border3
