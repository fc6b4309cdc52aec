#include "border3/graded_maps.hpp"

namespace border3 {

std::vector<std::size_t> minor_degrees(std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s <= std::min(rows, cols); ++s) {
    const std::size_t count = combinations(rows, s).size() * combinations(cols, s).size();
    out.insert(out.end(), count, s);
  }
  return out;
}

std::vector<std::size_t> pfaffian_degrees(std::size_t k) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; 2 * s <= k; ++s) out.insert(out.end(), combinations(k, 2 * s).size(), s);
  return out;
}

std::vector<std::size_t> segre_degrees(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> out{0};
  for (auto d : dims) {
    std::vector<std::size_t> next;
    for (auto a : out)
      for (std::size_t j = 0; j < d; ++j) next.push_back(a + (j == 0 ? 0 : 1));
    out = std::move(next);
  }
  return out;
}

}  // namespace border3
