#include "border3/io.hpp"

namespace border3 {

namespace {

[[noreturn]] void fail(const std::string& what) { throw FormatError(what); }

const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object()) fail("expected a JSON object");
  auto it = obj.find(name);
  if (it == obj.end()) fail(std::string("missing field \"") + name + "\"");
  return *it;
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> sizes_from_json(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& e : j) out.push_back(size_from_json(e, what));
  return out;
}

// Catches library argument errors and reports them as format errors.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  } catch (const std::out_of_range& e) {
    fail(e.what());
  } catch (const std::length_error& e) {
    fail(e.what());
  }
}

SeriesVector curve_from_json(const Json& j, std::size_t dim, const char* name) {
  if (!j.is_array() || j.empty()) fail(std::string("\"") + name + "\" must be a nonempty array of coefficient vectors");
  std::vector<Vector> coeffs;
  for (const auto& c : j) {
    Vector v = vector_from_json(c);
    if (v.size() != dim)
      fail(std::string("\"") + name + "\" coefficients must have length " + std::to_string(dim));
    coeffs.push_back(std::move(v));
  }
  return SeriesVector::from_coefficients(dim, coeffs.size(), coeffs);
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return guarded([&] { return parse_rational(j.get<std::string>()); });
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()));
  fail("rational entries must be strings \"p/q\" or integers");
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) fail("expected an array of rationals");
  Vector out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Json to_json(const Tensor& t) {
  Json out;
  out["dims"] = t.dims();
  Json entries = Json::array();
  for (const auto& e : t.entries()) entries.push_back(to_json(e));
  out["entries"] = std::move(entries);
  return out;
}

Tensor tensor_from_json(const Json& j) {
  Dims dims = sizes_from_json(field(j, "dims"), "dims");
  if (dims.size() < 2) fail("a tensor needs at least two modes");
  std::size_t total = 1;
  for (auto d : dims) {
    if (d == 0) fail("dims must be positive");
    if (total > kMaxTensorEntries / d) fail("tensor exceeds " + std::to_string(kMaxTensorEntries) + " entries");
    total *= d;
  }
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) fail("entries must be an array");
  if (entries.size() != total)
    fail("entries has " + std::to_string(entries.size()) + " values, dims require " + std::to_string(total));
  Vector e = vector_from_json(entries);
  return guarded([&] { return make_tensor(std::move(dims), std::move(e)); });
}

Json to_json(const ClassificationReport& r) {
  Json out;
  out["dims"] = r.dims;
  out["multilinear_rank"] = r.multilinear_rank;
  out["concise"] = r.concise;
  out["subspace_label"] = r.subspace_label;
  out["border_rank_class"] = to_string(r.border_rank_class);
  out["type_tag"] = r.type_tag ? Json(to_string(*r.type_tag)) : Json(nullptr);
  out["distinguished_factor"] = optional_json(r.distinguished_factor);
  out["orbit_id"] = optional_json(r.orbit_id);
  out["rank"] = optional_json(r.rank);
  out["rank_deferred"] = r.rank_deferred;
  out["witnesses"] = r.witnesses;
  return out;
}

Json to_json(const FieldRank& r) {
  Json out;
  out["field"] = r.q;
  out["rmax"] = r.r_max;
  out["rank"] = optional_json(r.rank);
  out["result"] = r.to_string();
  out["rank_one_count"] = r.rank_one_count;
  return out;
}

Json to_json(const Decomposition& d) {
  Json out;
  out["dims"] = d.dims;
  Json terms = Json::array();
  for (const auto& t : d.terms) {
    Json term;
    term["coefficient"] = to_json(t.coefficient);
    Json factors = Json::array();
    for (const auto& f : t.factors) factors.push_back(to_json(f));
    term["factors"] = std::move(factors);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const CominusculeModel& m) {
  Json out;
  switch (m.kind()) {
    case CominusculeModel::Kind::Segre:
      out["kind"] = "segre";
      out["dims"] = m.dims();
      break;
    case CominusculeModel::Kind::Grassmannian:
      out["kind"] = "grassmannian";
      out["k"] = m.k();
      out["n"] = m.n();
      break;
    case CominusculeModel::Kind::Lagrangian:
      out["kind"] = "lagrangian";
      out["k"] = m.k();
      break;
    case CominusculeModel::Kind::Spinor:
      out["kind"] = "spinor";
      out["k"] = m.k();
      break;
  }
  return out;
}

CominusculeModel model_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) fail("model kind must be a string");
  const std::string k = kind.get<std::string>();
  return guarded([&] {
    if (k == "segre") return CominusculeModel::segre(sizes_from_json(field(j, "dims"), "dims"));
    if (k == "grassmannian")
      return CominusculeModel::grassmannian(size_from_json(field(j, "k"), "k"), size_from_json(field(j, "n"), "n"));
    if (k == "lagrangian") return CominusculeModel::lagrangian(size_from_json(field(j, "k"), "k"));
    if (k == "spinor") return CominusculeModel::spinor(size_from_json(field(j, "k"), "k"));
    fail("unknown model kind \"" + k + "\"");
  });
}

LimitRequest limit_request_from_json(const Json& j) {
  const CominusculeModel model = model_from_json(field(j, "model"));
  if (model.ambient_dim() > kMaxWedgeAmbient)
    fail("model " + model.name() + " has ambient dimension " + std::to_string(model.ambient_dim()) + " > " +
         std::to_string(kMaxWedgeAmbient));
  const SeriesVector y = curve_from_json(field(j, "y"), model.tangent_dim(), "y");
  const SeriesVector z = curve_from_json(field(j, "z"), model.tangent_dim(), "z");
  std::size_t truncation = kInitialTruncation;
  if (j.contains("truncation")) {
    truncation = size_from_json(j["truncation"], "truncation");
    if (truncation < 1 || truncation > kMaxTruncation)
      fail("truncation must lie in [1, " + std::to_string(kMaxTruncation) + "]");
  }
  std::optional<std::uint64_t> seed;
  if (j.contains("seed")) seed = size_from_json(j["seed"], "seed");
  return guarded([&] { return LimitRequest{LimitConfig::from_curves(model, y, z), truncation, seed}; });
}

Json to_json(const LimitPlaneResult& r) {
  Json out;
  out["degenerate"] = r.degenerate;
  out["leading_order"] = r.leading_order;
  out["truncation"] = r.truncation;
  Json plane = Json::array();
  for (const auto& v : r.plane) plane.push_back(to_json(v));
  out["plane"] = std::move(plane);
  return out;
}

}  // namespace border3
