#pragma once

// Curves on the homogeneous models through their local parameterization, Fubini
// forms, and limits of planes spanned by three curves.

#include "border3/classifier.hpp"
#include "border3/cominuscule.hpp"
#include "border3/random.hpp"
#include "border3/series.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace border3 {

// The base point phi(0) as an ambient vector.
Vector base_point(const CominusculeModel& model);
// Image of a tangent vector under the linear part of phi.
Vector tangent_to_ambient(const CominusculeModel& model, const Vector& x);
// Degree-s coordinates of phi(x); other coordinates zero.
Vector graded_piece(const CominusculeModel& model, std::size_t s, const Vector& x);

// phi applied to a curve in the tangent space.
SeriesVector parameterize(const CominusculeModel& model, const SeriesVector& tangent);

// Element of S^s T written as a combination of products x_1 ... x_s.
struct SymmetricProduct {
  Rational coefficient = 1;
  std::vector<Vector> factors;
};
using SymmetricElement = std::vector<SymmetricProduct>;

// Throws if the products have different degrees or the element is empty.
std::size_t degree_of(const SymmetricElement& f);
SymmetricElement operator*(const SymmetricElement& a, const SymmetricElement& b);

// The symmetric s-linear form F_s on x_1 ... x_s (polarization of the degree-s
// piece of phi), as an ambient vector. Zero when s exceeds the model's degree.
Vector fubini_form(const CominusculeModel& model, std::size_t s, const std::vector<Vector>& args);
Vector fubini_form(const CominusculeModel& model, const SymmetricElement& f);
// F_s(v(t)^s) along a tangent curve.
SeriesVector fubini_series(const CominusculeModel& model, std::size_t s, const SeriesVector& tangent);

// Basis of { f in S^s T : F_s(f) = 0 }, each element a combination of
// monomials in the coordinate basis of T.
std::vector<SymmetricElement> fubini_kernel_basis(const CominusculeModel& model, std::size_t s);

// Requires F_{deg f1}(f1) = 0 (throws std::invalid_argument otherwise) and
// reports whether F_{deg f1 + deg f2}(f1 f2) = 0.
bool prolongation_check(const CominusculeModel& model, const SymmetricElement& f1, const SymmetricElement& f2);

inline constexpr std::size_t kInitialTruncation = 8;
inline constexpr std::size_t kMaxTruncation = 64;
inline constexpr std::size_t kMaxWedgeAmbient = 64;

struct LimitPlaneResult {
  std::vector<Vector> plane;  // basis of the limit 3-plane
  std::size_t leading_order = 0;
  bool degenerate = false;     // wedge vanished below the truncation
  std::size_t truncation = 0;  // truncation the answer was found at
};

class TruncationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lowest-order coefficient of c1 ^ c2 ^ c3 and the plane it represents. threads
// > 1 runs the exterior-cube kernel in parallel.
LimitPlaneResult limit_plane(const SeriesVector& c1, const SeriesVector& c2, const SeriesVector& c3,
                             int threads = 1);

using CurveFamily = std::function<std::array<SeriesVector, 3>(std::size_t truncation)>;
// Starts at `initial` and doubles while the wedge is degenerate; throws
// TruncationCapExceeded past kMaxTruncation.
LimitPlaneResult limit_plane_adaptive(const CurveFamily& curves, int threads = 1,
                                      std::size_t initial = kInitialTruncation);

// sum_i c_i plane[i] with nonzero coefficients c_i = p/q, |p| <= 10^6, 1 <= q <= 97,
// drawn from a Sampler seeded with `seed`.
Vector sample_plane_point(const LimitPlaneResult& result, std::uint64_t seed);

enum class LimitType { I, II, IIIorIV };
std::string to_string(LimitType t);

// Three curves x = base point, y = phi(y_tangent), z = phi(z_tangent), with the
// normalization y_tangent = t^k v, z_tangent = t^k lambda v + t^l w, k <= l and l
// maximal. Tangent curves are exact polynomials in t.
struct LimitConfig {
  CominusculeModel model;
  SeriesVector y_tangent;
  SeriesVector z_tangent;
  bool swapped = false;  // y and z were exchanged to get k <= l
  std::size_t k = 0;
  std::optional<std::size_t> l;  // nullopt when w = 0
  std::optional<std::size_t> m;  // order of lambda - lambda_0 when lambda_0 is 0 or 1
  Series lambda;
  SeriesVector v;
  SeriesVector w;

  static LimitConfig from_curves(const CominusculeModel& model, const SeriesVector& y, const SeriesVector& z);
  // Builds y = t^k v, z = t^k lambda v + t^l w and checks that the normalization
  // returns the same k and l (throws std::invalid_argument otherwise).
  static LimitConfig from_data(const CominusculeModel& model, std::size_t k, std::optional<std::size_t> l,
                               const Series& lambda, const SeriesVector& v, const SeriesVector& w);

  // Ambient curves (x, y, z) at the given truncation.
  std::array<SeriesVector, 3> curves(std::size_t truncation) const;
};

LimitType limit_type(const LimitConfig& cfg);
LimitPlaneResult limit_plane(const LimitConfig& cfg, int threads = 1, std::size_t initial = kInitialTruncation);

// The limit type a classification corresponds to (types iii and iv merge);
// nullopt when the tensor is not of border rank exactly 3.
std::optional<LimitType> limit_type_of(const ClassificationReport& report);

// Random curve configurations realizing each branch of the case analysis:
//   HonestSecant      l = 0
//   PointPlusTangent  k = 0, lambda_0 in {0, 1}, l <= order of lambda - lambda_0
//   CoincidentPoints  k >= 1, l = 2k, lambda_0 not in {0, 1}
//   LineDirection     k = 0, v_0 inside a single Segre factor
enum class LimitRecipe { HonestSecant, PointPlusTangent, CoincidentPoints, LineDirection };
std::string to_string(LimitRecipe r);
LimitType expected_type(LimitRecipe r);
// Segre models only.
LimitConfig limit_recipe(LimitRecipe r, const CominusculeModel& segre, Sampler& rng);

// dim (T_xi X + T_eta X) for the line through the base point xi in the given
// tangent direction (which must lie in a single Segre factor), eta = phi(direction).
std::size_t line_tangent_span(const CominusculeModel& segre, const Vector& direction);
// Same with the direction e_1 of factor i.
std::size_t line_tangent_span(const CominusculeModel& segre, std::size_t factor);
// 2 dim X + 2 - dim A_i.
std::size_t line_tangent_span_formula(const CominusculeModel& segre, std::size_t factor);

}  // namespace border3
