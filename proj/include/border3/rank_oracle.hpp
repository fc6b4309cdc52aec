#pragma once

#include "border3/finite_field.hpp"
#include "border3/normal_forms.hpp"
#include "border3/polynomial.hpp"
#include "border3/tensor.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace border3 {

// The exhaustive search would exceed its encoding or enumeration limits.
class SearchSpaceOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxOracleRank = 6;

struct FieldRank {
  std::optional<std::size_t> rank;  // empty means rank > r_max
  std::size_t r_max = 0;
  unsigned q = 2;
  std::size_t rank_one_count = 0;  // projective rank-one elements searched
  std::string to_string() const;   // "5" or "GreaterThan(6)"
};

// Rank of T mod q: the fewest rank-one elements of the space of modes 1..n-1 whose
// span contains the mode-0 slices. jobs <= 1 runs the serial search.
FieldRank rank_over_field(const Tensor& t, unsigned q, std::size_t r_max, int jobs = 1);

struct RankOneTerm {
  Rational coefficient = 1;
  std::vector<Vector> factors;
};

struct Decomposition {
  Dims dims;
  std::vector<RankOneTerm> terms;

  std::size_t size() const { return terms.size(); }
  Tensor evaluate() const;
};

// Where a tensor came from: a normal form, optionally moved by a change of basis.
struct Provenance {
  enum class Kind { Orbit, Sigma2, Sigma3 };
  Kind kind = Kind::Orbit;
  int orbit_id = 0;
  std::size_t n = 3;
  std::vector<std::size_t> J;
  Dims dims;
  SigmaThreeSpec spec;
  std::optional<GLTuple> change_of_basis;

  static Provenance orbit(int id);
  static Provenance sigma2(std::size_t n, std::vector<std::size_t> J, Dims dims);
  static Provenance sigma3(SigmaThreeSpec spec);
  Provenance transported(const GLTuple& g) const;
};

// Explicit decomposition with the known number of terms. Throws std::invalid_argument
// when the tensor does not equal the normal form described by the provenance.
Decomposition rank_upper_bound(const Tensor& t, const Provenance& p);
// Recognizes the normal forms themselves (no change of basis); throws on anything else.
Decomposition rank_upper_bound(const Tensor& t);

struct MembershipResult {
  bool member = false;
  // A larger bound might still succeed (only possible when parameters exist).
  bool bound_limited = false;
  std::vector<Polynomial> multipliers;  // target = sum multipliers[i] * generators[i]
  std::size_t unknowns = 0;
  std::size_t equations = 0;
};

// Decides target in (generators) with multipliers whose main-variable degree matches and whose
// parameter degree is <= bound. parameter_mask[v] marks parameter variables (degree 0); target
// and generators must be homogeneous in the remaining variables. A positive answer carries a
// certificate that has been checked by substitution.
MembershipResult macaulay_membership(const Polynomial& target, const std::vector<Polynomial>& generators,
                                     const std::vector<bool>& parameter_mask, int coefficient_degree_bound);

// Smallest bound in [0, max_bound] at which membership is certified.
std::optional<int> minimal_membership_bound(const Polynomial& target, const std::vector<Polynomial>& generators,
                                            const std::vector<bool>& parameter_mask, int max_bound);

// 2x2 minors of [[t,s,u],[s,0,0],[u,0,0]] + x f g^T in variables
// (s, t, u, x, f1, f2, f3, g1, g2, g3); f and g are parameters.
struct MinorFamily {
  std::vector<Polynomial> generators;
  std::vector<bool> parameter_mask;
  std::vector<std::string> names;
};
MinorFamily pencil_plus_rank_one_minors();

}  // namespace border3
