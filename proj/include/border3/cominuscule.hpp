#pragma once

// Local graph parameterizations x -> phi(x) of the homogeneous varieties at the
// base point, in the standard coordinate splitting. Each ambient coordinate is a
// homogeneous polynomial in the tangent coordinates; its degree picks out which
// graded piece (base line, tangent space, normal pieces N_2, N_3, ...) it sits in.

#include "border3/algebra.hpp"
#include "border3/graded_maps.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace border3 {

class CominusculeModel {
 public:
  enum class Kind { Segre, Grassmannian, Lagrangian, Spinor };

  // Segre of P^{d_0 - 1} x ... ; tangent coordinates concatenate the factors.
  static CominusculeModel segre(std::vector<std::size_t> dims);
  // G(k, n); tangent = k x (n-k) matrix, row-major.
  static CominusculeModel grassmannian(std::size_t k, std::size_t n);
  // Lagrangian Grassmannian; tangent = symmetric k x k matrix, entries i <= j.
  static CominusculeModel lagrangian(std::size_t k);
  // Spinor variety; tangent = skew k x k matrix, entries i < j.
  static CominusculeModel spinor(std::size_t k);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t k() const { return k_; }
  std::size_t n() const { return n_; }

  std::size_t tangent_dim() const;
  std::size_t ambient_dim() const { return degrees_.size(); }
  const std::vector<std::size_t>& degrees() const { return degrees_; }
  std::size_t max_degree() const;

  // For Segre: which factor tangent coordinate i belongs to.
  std::size_t factor_of(std::size_t tangent_coordinate) const;

  std::string name() const;

  template <class R>
  std::vector<R> phi(const std::vector<R>& tangent, const R& zero) const;

  friend bool operator==(const CominusculeModel& a, const CominusculeModel& b) = default;

 private:
  CominusculeModel(Kind kind, std::vector<std::size_t> dims, std::size_t k, std::size_t n);

  Kind kind_;
  std::vector<std::size_t> dims_;
  std::size_t k_ = 0;
  std::size_t n_ = 0;
  std::vector<std::size_t> degrees_;
};

template <class R>
std::vector<R> CominusculeModel::phi(const std::vector<R>& tangent, const R& zero) const {
  if (tangent.size() != tangent_dim()) throw std::invalid_argument("tangent vector length does not match the model");
  switch (kind_) {
    case Kind::Segre:
      return segre_coordinates(tangent, dims_, zero);
    case Kind::Grassmannian:
      return minor_coordinates(tangent, k_, n_ - k_, zero);
    case Kind::Lagrangian: {
      std::vector<R> m(k_ * k_, zero);
      std::size_t pos = 0;
      for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = i; j < k_; ++j) {
          m[i * k_ + j] = tangent[pos];
          m[j * k_ + i] = tangent[pos];
          ++pos;
        }
      return minor_coordinates(m, k_, k_, zero);
    }
    case Kind::Spinor: {
      std::vector<R> m(k_ * k_, zero);
      std::size_t pos = 0;
      for (std::size_t i = 0; i < k_; ++i)
        for (std::size_t j = i + 1; j < k_; ++j) {
          m[i * k_ + j] = tangent[pos];
          m[j * k_ + i] = zero - tangent[pos];
          ++pos;
        }
      return pfaffian_coordinates(m, k_, zero);
    }
  }
  throw std::logic_error("unhandled model kind");
}

}  // namespace border3
