#include "border3/random.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace border3 {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("BORDER3_SEED");
  if (raw == nullptr || *raw == '\0') return fallback;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(raw, &used, 10);
  } catch (const std::exception&) {
    throw std::invalid_argument("BORDER3_SEED must be a non-negative integer");
  }
  if (raw[used] != '\0') throw std::invalid_argument("BORDER3_SEED must be a non-negative integer");
  return v;
}

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Rational Sampler::rational(int bound, int max_den) {
  Rational r(integer(-bound, bound), integer(1, max_den));
  r.canonicalize();
  return r;
}

Rational Sampler::nonzero_rational(int bound, int max_den) {
  while (true) {
    Rational r = rational(bound, max_den);
    if (r != 0) return r;
  }
}

Vector Sampler::vector(std::size_t n, int bound, int max_den) {
  Vector v(n);
  for (auto& x : v) x = rational(bound, max_den);
  return v;
}

Matrix Sampler::matrix(std::size_t rows, std::size_t cols, int bound, int max_den) {
  return Matrix(rows, cols, vector(rows * cols, bound, max_den));
}

Matrix Sampler::invertible(std::size_t n, int bound) {
  while (true) {
    Matrix m = matrix(n, n, bound, 1);
    if (determinant(m) != 0) return m;
  }
}

GLTuple Sampler::gl_tuple(const Dims& dims, int bound) {
  std::vector<Matrix> mats;
  for (auto d : dims) mats.push_back(invertible(d, bound));
  return GLTuple(std::move(mats));
}

Tensor Sampler::tensor(const Dims& dims, int bound) {
  Tensor z = Tensor::zeros(dims);
  std::vector<Rational> e(z.size());
  for (auto& x : e) x = integer(-bound, bound);
  return Tensor(dims, std::move(e));
}

}  // namespace border3
