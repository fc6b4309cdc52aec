#pragma once

// JSON encodings of tensors, reports and limit configurations.
//
// Tensor: {"dims": [d_0, ...], "entries": ["p/q", ...]}, entries row-major with
// mode 0 slowest. Integer JSON numbers are accepted for entries; floats are not.
//
// Limit configuration:
//   {"model": {"kind": "segre", "dims": [3,3,3]}      (or grassmannian k n,
//                                                      lagrangian k, spinor k)
//    "y": [[...], [...], ...],   coefficient of t^j in T as an exact vector
//    "z": [[...], ...],
//    "truncation": 8,            optional starting truncation
//    "seed": 7}                  optional seed for the sampled plane point

#include "border3/classifier.hpp"
#include "border3/limits.hpp"
#include "border3/rank_oracle.hpp"
#include "border3/tensor.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace border3 {

using Json = nlohmann::ordered_json;

// Input that does not follow the documented format.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json parse_json(std::string_view text);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);

Json to_json(const Tensor& t);
Tensor tensor_from_json(const Json& j);

Json to_json(const ClassificationReport& r);
Json to_json(const FieldRank& r);
Json to_json(const Decomposition& d);

Json to_json(const CominusculeModel& m);
CominusculeModel model_from_json(const Json& j);

struct LimitRequest {
  LimitConfig config;
  std::size_t truncation = kInitialTruncation;
  std::optional<std::uint64_t> seed;
};
LimitRequest limit_request_from_json(const Json& j);
Json to_json(const LimitPlaneResult& r);

}  // namespace border3
