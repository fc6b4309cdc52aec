#pragma once

#include "border3/linalg.hpp"
#include "border3/tensor.hpp"

#include <cstdint>
#include <random>

namespace border3 {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

// Reads BORDER3_SEED; falls back to `fallback` when unset. Throws on garbage.
std::uint64_t seed_from_env(std::uint64_t fallback = kDefaultSeed);

// Deterministic source of small exact rationals.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  int integer(int lo, int hi);
  // p/q with |p| <= bound, 1 <= q <= max_den.
  Rational rational(int bound = 5, int max_den = 3);
  Rational nonzero_rational(int bound = 5, int max_den = 3);
  Vector vector(std::size_t n, int bound = 5, int max_den = 3);
  Matrix matrix(std::size_t rows, std::size_t cols, int bound = 5, int max_den = 3);
  Matrix invertible(std::size_t n, int bound = 3);
  GLTuple gl_tuple(const Dims& dims, int bound = 3);
  Tensor tensor(const Dims& dims, int bound = 9);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace border3
