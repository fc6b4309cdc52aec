#include "cli.hpp"

#include "border3/classifier.hpp"
#include "border3/equations.hpp"
#include "border3/io.hpp"
#include "border3/limits.hpp"
#include "border3/normal_forms.hpp"
#include "border3/random.hpp"
#include "border3/rank_oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace border3::cli {

namespace {

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

Tensor read_tensor(const std::string& path, std::istream& in) { return tensor_from_json(parse_json(read_all(path, in))); }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct GenerateOptions {
  std::string type;
  std::size_t n = 3;
  std::vector<std::size_t> dims;
  std::optional<std::size_t> factor;
  std::optional<int> orbit;
  std::vector<std::size_t> J;
  bool random_basis = false;
};

Tensor generate(const GenerateOptions& o) {
  Tensor t = [&] {
    if (o.type == "orbit") {
      if (!o.orbit) throw FormatError("--type orbit needs --orbit");
      return orbit_representative(*o.orbit);
    }
    if (o.type == "sigma2") {
      std::vector<std::size_t> J = o.J;
      if (J.empty())
        for (std::size_t j = 0; j < o.n; ++j) J.push_back(j);
      return sigma2_point(o.n, J, o.dims.empty() ? Dims(o.n, 2) : o.dims);
    }
    SigmaThreeSpec spec;
    spec.type = parse_type_tag(o.type);
    spec.n = o.n;
    spec.dims = o.dims;
    spec.distinguished_factor = o.factor;
    if (spec.type == TypeTag::iv && !spec.distinguished_factor) spec.distinguished_factor = 0;
    return sigma3_point(spec);
  }();
  if (o.random_basis) {
    Sampler rng(seed_from_env());
    t = apply_gl(t, rng.gl_tuple(t.dims()));
  }
  return t;
}

int classify_exit(const ClassificationReport& r) {
  return r.border_rank_class == BorderRankClass::Unknown ? kExitUnknown : kExitOk;
}

int run_limit(const std::string& path, int jobs, std::istream& in, std::ostream& out) {
  const LimitRequest req = limit_request_from_json(parse_json(read_all(path, in)));
  const LimitConfig& cfg = req.config;
  const LimitPlaneResult res = limit_plane(cfg, jobs, req.truncation);

  Json j;
  j["model"] = to_json(cfg.model);
  Json norm;
  norm["swapped"] = cfg.swapped;
  norm["k"] = cfg.k;
  norm["l"] = cfg.l ? Json(*cfg.l) : Json(nullptr);
  norm["m"] = cfg.m ? Json(*cfg.m) : Json(nullptr);
  j["normalization"] = std::move(norm);
  j["predicted_type"] = to_string(limit_type(cfg));
  j["limit"] = to_json(res);

  const std::uint64_t seed = req.seed ? *req.seed : seed_from_env();
  const Vector point = sample_plane_point(res, seed);
  j["sample_seed"] = seed;
  int code = kExitOk;
  if (cfg.model.kind() == CominusculeModel::Kind::Segre) {
    const Tensor t = make_tensor(cfg.model.dims(), point);
    const ClassificationReport r = classify(t);
    j["sample_point"] = to_json(t);
    j["classification"] = to_json(r);
    const auto observed = limit_type_of(r);
    j["observed_type"] = observed ? Json(to_string(*observed)) : Json(nullptr);
    code = classify_exit(r);
  } else {
    j["sample_point"] = to_json(point);
    j["classification"] = nullptr;
    j["observed_type"] = nullptr;
  }
  emit(out, j);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Border rank <= 3 tensor toolkit"};
  app.require_subcommand(1);

  std::string file = "-";
  auto* classify_cmd = app.add_subcommand("classify", "Classify a tensor (border rank, type, orbit, rank)");
  classify_cmd->add_option("file", file, "Tensor JSON, - for stdin");

  GenerateOptions gen;
  auto* generate_cmd = app.add_subcommand("generate", "Emit a normal-form tensor");
  generate_cmd->add_option("--type", gen.type, "sigma2, i, ii, iii, iv or orbit")
      ->required()
      ->check(CLI::IsMember({"sigma2", "i", "ii", "iii", "iv", "orbit"}));
  generate_cmd->add_option("--n", gen.n, "Number of factors");
  generate_cmd->add_option("--dims", gen.dims, "Factor dimensions d,d,...")->delimiter(',');
  generate_cmd->add_option("--factor", gen.factor, "Distinguished factor (type iv)");
  generate_cmd->add_option("--orbit", gen.orbit, "Orbit id")->check(CLI::Range(34, 39));
  generate_cmd->add_option("--J", gen.J, "Modes J for sigma2 (default all)")->delimiter(',');
  generate_cmd->add_flag("--random-basis", gen.random_basis, "Apply a random change of basis (BORDER3_SEED)");

  bool jacobian = false;
  auto* strassen_cmd = app.add_subcommand("strassen", "Evaluate the 27 Strassen quartics of a 3x3x3 tensor");
  strassen_cmd->add_option("file", file, "Tensor JSON, - for stdin");
  strassen_cmd->add_flag("--jacobian", jacobian, "Also report the Jacobian rank");

  int jobs = 1;
  auto* limit_cmd = app.add_subcommand("limit", "Limit plane of three curves and the type of a sampled point");
  limit_cmd->add_option("file", file, "Limit configuration JSON, - for stdin");
  limit_cmd->add_option("--jobs", jobs, "Threads for the exterior-cube kernel")->check(CLI::PositiveNumber);

  unsigned field = 2;
  std::size_t rmax = 0;
  auto* rank_cmd = app.add_subcommand("rank", "Rank over a prime field by exhaustive search");
  rank_cmd->add_option("file", file, "Tensor JSON, - for stdin");
  rank_cmd->add_option("--field", field, "Prime q")->required();
  rank_cmd->add_option("--rmax", rmax, "Largest rank searched")->required();
  rank_cmd->add_option("--jobs", jobs, "Threads for the search")->check(CLI::PositiveNumber);

  auto* stabilizer_cmd = app.add_subcommand("stabilizer", "Stabilizer and orbit dimensions");
  stabilizer_cmd->add_option("file", file, "Tensor JSON, - for stdin");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream so, se;
    const int code = app.exit(e, so, se);
    out << so.str();
    err << se.str();
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (*classify_cmd) {
      const ClassificationReport r = classify(read_tensor(file, in));
      emit(out, to_json(r));
      return classify_exit(r);
    }
    if (*generate_cmd) {
      emit(out, to_json(generate(gen)));
      return kExitOk;
    }
    if (*strassen_cmd) {
      const Tensor t = read_tensor(file, in);
      Json j;
      Json values = Json::array();
      for (const auto& v : strassen_equations(t)) values.push_back(to_json(v));
      j["values"] = std::move(values);
      j["all_vanish"] = strassen_vanishes(t);
      if (jacobian) j["jacobian_rank"] = strassen_jacobian_rank(t);
      emit(out, j);
      return kExitOk;
    }
    if (*limit_cmd) return run_limit(file, jobs, in, out);
    if (*rank_cmd) {
      const FieldRank r = rank_over_field(read_tensor(file, in), field, rmax, jobs);
      emit(out, to_json(r));
      return kExitOk;
    }
    if (*stabilizer_cmd) {
      const Tensor t = read_tensor(file, in);
      const StabilizerDimension s = stabilizer_dimension(t);
      Json j;
      j["stabilizer_dimension"] = s.dimension;
      j["degenerate"] = s.degenerate;
      j["orbit_dimension"] = s.degenerate ? Json(nullptr) : Json(orbit_dimension(t));
      emit(out, j);
      return kExitOk;
    }
  } catch (const SearchSpaceOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kExitOverflow;
  } catch (const TruncationCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitOverflow;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMalformed;
  }
  return kExitMalformed;
}

}  // namespace border3::cli
