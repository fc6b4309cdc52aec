#include "border3/cominuscule.hpp"

#include <algorithm>

namespace border3 {

CominusculeModel::CominusculeModel(Kind kind, std::vector<std::size_t> dims, std::size_t k, std::size_t n)
    : kind_(kind), dims_(std::move(dims)), k_(k), n_(n) {
  switch (kind_) {
    case Kind::Segre:
      degrees_ = segre_degrees(dims_);
      break;
    case Kind::Grassmannian:
      degrees_ = minor_degrees(k_, n_ - k_);
      break;
    case Kind::Lagrangian:
      degrees_ = minor_degrees(k_, k_);
      break;
    case Kind::Spinor:
      degrees_ = pfaffian_degrees(k_);
      break;
  }
}

CominusculeModel CominusculeModel::segre(std::vector<std::size_t> dims) {
  if (dims.size() < 2) throw std::invalid_argument("Segre model needs at least two factors");
  for (auto d : dims)
    if (d < 2) throw std::invalid_argument("Segre factors must have dimension >= 2");
  return CominusculeModel(Kind::Segre, std::move(dims), 0, 0);
}

CominusculeModel CominusculeModel::grassmannian(std::size_t k, std::size_t n) {
  if (k < 1 || k + 1 > n) throw std::invalid_argument("Grassmannian needs 1 <= k <= n-1");
  return CominusculeModel(Kind::Grassmannian, {}, k, n);
}

CominusculeModel CominusculeModel::lagrangian(std::size_t k) {
  if (k < 1) throw std::invalid_argument("Lagrangian Grassmannian needs k >= 1");
  return CominusculeModel(Kind::Lagrangian, {}, k, 2 * k);
}

CominusculeModel CominusculeModel::spinor(std::size_t k) {
  if (k < 2) throw std::invalid_argument("spinor variety needs k >= 2");
  return CominusculeModel(Kind::Spinor, {}, k, 2 * k);
}

std::size_t CominusculeModel::tangent_dim() const {
  switch (kind_) {
    case Kind::Segre: {
      std::size_t s = 0;
      for (auto d : dims_) s += d - 1;
      return s;
    }
    case Kind::Grassmannian:
      return k_ * (n_ - k_);
    case Kind::Lagrangian:
      return k_ * (k_ + 1) / 2;
    case Kind::Spinor:
      return k_ * (k_ - 1) / 2;
  }
  return 0;
}

std::size_t CominusculeModel::max_degree() const { return *std::max_element(degrees_.begin(), degrees_.end()); }

std::size_t CominusculeModel::factor_of(std::size_t tangent_coordinate) const {
  if (kind_ != Kind::Segre) throw std::invalid_argument("factor_of is defined for Segre models only");
  std::size_t pos = 0;
  for (std::size_t f = 0; f < dims_.size(); ++f) {
    pos += dims_[f] - 1;
    if (tangent_coordinate < pos) return f;
  }
  throw std::out_of_range("tangent coordinate out of range");
}

std::string CominusculeModel::name() const {
  switch (kind_) {
    case Kind::Segre: {
      std::string s = "segre(";
      for (std::size_t i = 0; i < dims_.size(); ++i) s += (i ? "," : "") + std::to_string(dims_[i]);
      return s + ")";
    }
    case Kind::Grassmannian:
      return "grassmannian(" + std::to_string(k_) + "," + std::to_string(n_) + ")";
    case Kind::Lagrangian:
      return "lagrangian(" + std::to_string(k_) + ")";
    case Kind::Spinor:
      return "spinor(" + std::to_string(k_) + ")";
  }
  return "?";
}

}  // namespace border3
