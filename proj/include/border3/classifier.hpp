#pragma once

#include "border3/equations.hpp"
#include "border3/normal_forms.hpp"
#include "border3/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace border3 {

enum class BorderRankClass { Zero, One, Two, Three, GreaterThan3, Unknown };

std::string to_string(BorderRankClass c);

struct ClassificationReport {
  Dims dims;
  std::vector<std::size_t> multilinear_rank;
  BorderRankClass border_rank_class = BorderRankClass::Unknown;
  std::optional<TypeTag> type_tag;
  std::optional<std::size_t> distinguished_factor;
  std::optional<int> orbit_id;
  std::optional<int> rank;
  // Smallest subspace variety containing the tensor (equals the multilinear rank).
  std::vector<std::size_t> subspace_label;
  bool concise = false;
  // Set when the border rank is known but the rank is not determined here.
  bool rank_deferred = false;
  std::vector<std::string> witnesses;

  // Equality of everything except the witness trace.
  bool same_verdict(const ClassificationReport& other) const;
};

ClassificationReport classify(const Tensor& t);

// Cayley's hyperdeterminant of a 2x2x2 tensor.
Rational hyperdeterminant(const Tensor& t);

struct StabilizerDimension {
  std::size_t dimension = 0;
  // The zero tensor: every Gamma annihilates it.
  bool degenerate = false;
};

// dim { Gamma in gl(A_1) + ... + gl(A_n) : Gamma . T = 0 }.
StabilizerDimension stabilizer_dimension(const Tensor& t);

// Dimension of the orbit of [T] in projective space. Throws on the zero tensor.
std::size_t orbit_dimension(const Tensor& t);

enum class SchemeType { ThreeReducedPoints, DoublePlusReduced, CurvilinearTriple, FatTriple, NotFiniteOfDegreeThree };

std::string to_string(SchemeType s);

// Type of the rank <= 1 locus of the net of mode-0 slices of a 3x3x3 tensor.
// Throws when the slices do not span a 3-dimensional net.
SchemeType scheme_intersection_check(const Tensor& t);

}  // namespace border3
