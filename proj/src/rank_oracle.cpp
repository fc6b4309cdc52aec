#include "border3/rank_oracle.hpp"

#include "border3/algebra.hpp"
#include "border3/kernels.hpp"

#include <cmath>
#include <map>

namespace border3 {

namespace {

// A priori limits on the exhaustive search.
constexpr std::size_t kMaxRankOnes = std::size_t{1} << 20;
constexpr long double kMaxSubsets = 5e8L;

long double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  long double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
  return r;
}

Vector unit(std::size_t d, std::size_t i) {
  Vector v(d);
  v[i] = 1;
  return v;
}

Decomposition from_terms(const Dims& dims, const TermList& terms) {
  Decomposition d{dims, {}};
  for (const auto& idx : terms) {
    RankOneTerm term;
    for (std::size_t m = 0; m < dims.size(); ++m) term.factors.push_back(unit(dims[m], idx[m]));
    d.terms.push_back(std::move(term));
  }
  return d;
}

Vector vec(std::initializer_list<Rational> v) { return Vector(v); }

// Five terms for the orbit whose mode-0 slices are [[u,t,s],[t,s,0],[s,0,0]]:
// diagonalize the slice pencil after a rank-one correction with eigenvalues 1, 2, 3.
Decomposition orbit37_decomposition() {
  Decomposition d{{3, 3, 3}, {}};
  const Rational half(1, 2);
  d.terms.push_back({1, {vec({1, 1, 0}), vec({1, 1, 1}), vec({half, Rational(-5, 2), 3})}});
  d.terms.push_back({1, {vec({1, 2, 0}), vec({1, 2, 4}), vec({-1, 4, -3})}});
  d.terms.push_back({1, {vec({1, 3, 0}), vec({1, 3, 9}), vec({half, Rational(-3, 2), 1})}});
  d.terms.push_back({-1, {vec({0, 1, 0}), vec({0, 0, 1}), vec({6, -11, 6})}});
  d.terms.push_back({1, {vec({0, 0, 1}), vec({1, 0, 0}), vec({1, 0, 0})}});
  return d;
}

Decomposition normal_form_decomposition(const Provenance& p) {
  switch (p.kind) {
    case Provenance::Kind::Orbit:
      if (p.orbit_id == 37) return orbit37_decomposition();
      return from_terms({3, 3, 3}, orbit_terms(p.orbit_id));
    case Provenance::Kind::Sigma2:
      return from_terms(p.dims, sigma2_terms(p.n, p.J));
    case Provenance::Kind::Sigma3: {
      const Dims dims = p.spec.dims.empty() ? Dims(p.spec.n, 3) : p.spec.dims;
      return from_terms(dims, sigma3_terms(p.spec));
    }
  }
  throw std::invalid_argument("unknown provenance");
}

Tensor normal_form(const Provenance& p) {
  switch (p.kind) {
    case Provenance::Kind::Orbit: return orbit_representative(p.orbit_id);
    case Provenance::Kind::Sigma2: return sigma2_point(p.n, p.J, p.dims);
    case Provenance::Kind::Sigma3: return sigma3_point(p.spec);
  }
  throw std::invalid_argument("unknown provenance");
}

std::vector<Provenance> candidate_normal_forms(const Dims& dims) {
  std::vector<Provenance> out;
  const std::size_t n = dims.size();
  if (dims == Dims{3, 3, 3})
    for (const auto& info : border_rank3_orbits()) out.push_back(Provenance::orbit(info.id));
  if (n >= 2 && n < 20)
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> J;
      bool ok = true;
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (std::size_t{1} << j)) {
          J.push_back(j);
          if (dims[j] < 2) ok = false;
        }
      if (ok) out.push_back(Provenance::sigma2(n, J, dims));
    }
  bool big = n >= 2;
  for (auto d : dims)
    if (d < 3) big = false;
  if (big) {
    for (TypeTag tag : {TypeTag::i, TypeTag::ii, TypeTag::iii})
      out.push_back(Provenance::sigma3({tag, n, dims, std::nullopt}));
    for (std::size_t f = 0; f < n; ++f) out.push_back(Provenance::sigma3({TypeTag::iv, n, dims, f}));
  }
  return out;
}

// ---- sparse exact elimination for the Macaulay system ----

struct SparseRow {
  std::map<std::size_t, Rational> entries;
  Rational rhs;
};

class SparseSolver {
 public:
  // False when the row reduces to 0 = nonzero.
  bool add(SparseRow row) {
    while (!row.entries.empty()) {
      const auto [lead, value] = *row.entries.begin();
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        const Rational inv = 1 / Rational(value);
        for (auto& [c, v] : row.entries) v *= inv;
        row.rhs *= inv;
        pivots_.emplace(lead, std::move(row));
        return true;
      }
      const Rational f = value;
      for (const auto& [c, v] : it->second.entries) {
        Rational& slot = row.entries[c];
        slot -= f * v;
        if (slot == 0) row.entries.erase(c);
      }
      row.rhs -= f * it->second.rhs;
    }
    return row.rhs == 0;
  }

  Vector solution(std::size_t unknowns) const {
    Vector x(unknowns);
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      Rational v = it->second.rhs;
      for (const auto& [c, a] : it->second.entries)
        if (c != it->first) v -= a * x[c];
      x[it->first] = v;
    }
    return x;
  }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

int main_degree(const Polynomial& p, const std::vector<bool>& main_mask, const char* what) {
  const int d = p.max_degree_in(main_mask);
  if (!p.homogeneous_in(main_mask, d))
    throw std::invalid_argument(std::string(what) + " is not homogeneous in the main variables");
  return d;
}

// Exponent vectors with main degree `main_deg` and parameter degree <= bound.
std::vector<Exponents> multiplier_monomials(const std::vector<bool>& param, int main_deg, int bound) {
  std::vector<std::size_t> main_vars, par_vars;
  for (std::size_t v = 0; v < param.size(); ++v) (param[v] ? par_vars : main_vars).push_back(v);
  std::vector<Exponents> par_monos;
  for (int k = 0; k <= bound; ++k) {
    if (par_vars.empty() && k > 0) break;
    for (auto& e : monomials_of_degree(par_vars.size(), k)) par_monos.push_back(e);
  }
  std::vector<Exponents> out;
  for (const auto& me : monomials_of_degree(main_vars.size(), main_deg))
    for (const auto& pe : par_monos) {
      Exponents e(param.size(), 0);
      for (std::size_t i = 0; i < main_vars.size(); ++i) e[main_vars[i]] = me[i];
      for (std::size_t i = 0; i < par_vars.size(); ++i) e[par_vars[i]] = pe[i];
      out.push_back(std::move(e));
    }
  return out;
}

}  // namespace

std::string FieldRank::to_string() const {
  return rank ? std::to_string(*rank) : "GreaterThan(" + std::to_string(r_max) + ")";
}

FieldRank rank_over_field(const Tensor& t, unsigned q, std::size_t r_max, int jobs) {
  if (!is_supported_prime(q)) throw std::invalid_argument("field size must be 2, 3 or 5");
  if (r_max > kMaxOracleRank) throw std::invalid_argument("r_max must be at most 6");
  if (t.order() < 2) throw std::invalid_argument("rank_over_field needs a tensor of order >= 2");

  std::size_t dim = 1;
  for (std::size_t m = 1; m < t.order(); ++m) dim *= t.dim(m);
  if (static_cast<double>(dim) * std::log2(static_cast<double>(q)) > 62)
    throw SearchSpaceOverflow("slice space too large to encode");

  FieldRank result;
  result.r_max = r_max;
  result.q = q;

  // Mode-0 slices mod q.
  std::vector<FqVector> base;
  FqBasis u(q, dim);
  for (std::size_t i = 0; i < t.dim(0); ++i) {
    FqVector v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = FieldElement::reduce(t.at(i * dim + j), q).value;
    if (u.add(v)) base.push_back(v);
  }
  const std::size_t d = base.size();
  if (d == 0) {
    result.rank = 0;
    return result;
  }

  long double count = 1;
  for (std::size_t m = 1; m < t.order(); ++m) count *= (std::pow(static_cast<long double>(q), t.dim(m)) - 1) / (q - 1);
  if (count > kMaxRankOnes) throw SearchSpaceOverflow("too many rank-one elements");

  // Outer products of projective points are again normalized.
  std::vector<FqVector> rank_ones{FqVector{1}};
  for (std::size_t m = 1; m < t.order(); ++m) {
    const auto pts = projective_points(t.dim(m), q);
    std::vector<FqVector> next;
    next.reserve(rank_ones.size() * pts.size());
    for (const auto& a : rank_ones)
      for (const auto& p : pts) {
        FqVector v;
        v.reserve(a.size() * p.size());
        for (auto x : a)
          for (auto y : p) v.push_back(static_cast<std::uint8_t>(x * y % q));
        next.push_back(std::move(v));
      }
    rank_ones = std::move(next);
  }
  result.rank_one_count = rank_ones.size();
  if (d > r_max) return result;

  long double subsets = 0;
  for (std::size_t k = 0; k + d <= r_max; ++k) subsets += binomial(rank_ones.size(), k);
  if (subsets > kMaxSubsets) throw SearchSpaceOverflow("subset enumeration exceeds the search limit");

  for (std::size_t r = d; r <= r_max; ++r) {
    const auto search = kernels::make_span_search(q, dim, base, rank_ones, r - d);
    const bool found = jobs > 1 ? kernels::span_search_parallel(search, jobs) : kernels::span_search_serial(search);
    if (found) {
      result.rank = r;
      return result;
    }
  }
  return result;
}

Tensor Decomposition::evaluate() const {
  Tensor sum = Tensor::zeros(dims);
  for (const auto& term : terms) sum = sum + term.coefficient * outer(term.factors);
  return sum;
}

Provenance Provenance::orbit(int id) {
  Provenance p;
  p.kind = Kind::Orbit;
  p.orbit_id = id;
  return p;
}

Provenance Provenance::sigma2(std::size_t n, std::vector<std::size_t> J, Dims dims) {
  Provenance p;
  p.kind = Kind::Sigma2;
  p.n = n;
  p.J = std::move(J);
  p.dims = std::move(dims);
  return p;
}

Provenance Provenance::sigma3(SigmaThreeSpec spec) {
  Provenance p;
  p.kind = Kind::Sigma3;
  p.n = spec.n;
  p.spec = std::move(spec);
  return p;
}

Provenance Provenance::transported(const GLTuple& g) const {
  Provenance p = *this;
  if (!p.change_of_basis) {
    p.change_of_basis = g;
    return p;
  }
  std::vector<Matrix> mats;
  for (std::size_t m = 0; m < g.size(); ++m) mats.push_back(g.mats()[m] * p.change_of_basis->mats()[m]);
  p.change_of_basis = GLTuple(std::move(mats));
  return p;
}

Decomposition rank_upper_bound(const Tensor& t, const Provenance& p) {
  Decomposition d = normal_form_decomposition(p);
  if (p.change_of_basis) {
    if (p.change_of_basis->size() != d.dims.size()) throw std::invalid_argument("change of basis has wrong arity");
    for (auto& term : d.terms)
      for (std::size_t m = 0; m < term.factors.size(); ++m) term.factors[m] = p.change_of_basis->mats()[m] * term.factors[m];
  }
  if (d.dims != t.dims() || !(d.evaluate() == t))
    throw std::invalid_argument("tensor does not match the normal form named by its provenance");
  return d;
}

Decomposition rank_upper_bound(const Tensor& t) {
  // Fewest terms first: several normal forms can coincide (for example rank-one sigma2 points).
  std::optional<Decomposition> best;
  for (const auto& p : candidate_normal_forms(t.dims())) {
    std::optional<Tensor> nf;
    try {
      nf = normal_form(p);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (!(*nf == t)) continue;
    Decomposition d = rank_upper_bound(t, p);
    if (!best || d.size() < best->size()) best = std::move(d);
  }
  if (!best) throw std::invalid_argument("unknown provenance: tensor is not a recognized normal form");
  return *best;
}

MembershipResult macaulay_membership(const Polynomial& target, const std::vector<Polynomial>& generators,
                                     const std::vector<bool>& parameter_mask, int coefficient_degree_bound) {
  const std::size_t nvars = target.nvars();
  if (parameter_mask.size() != nvars) throw std::invalid_argument("parameter mask has the wrong length");
  if (coefficient_degree_bound < 0) throw std::invalid_argument("coefficient degree bound must be >= 0");
  std::vector<bool> main_mask(nvars);
  bool has_params = false;
  for (std::size_t v = 0; v < nvars; ++v) {
    main_mask[v] = !parameter_mask[v];
    has_params = has_params || parameter_mask[v];
  }

  MembershipResult result;
  if (target.is_zero()) {
    result.member = true;
    result.multipliers.assign(generators.size(), Polynomial(nvars));
    return result;
  }
  const int dt = main_degree(target, main_mask, "target");

  // Unknown j is the coefficient of monomial mono[j] in the multiplier of generator gen_of[j].
  std::vector<std::size_t> gen_of;
  std::vector<Exponents> mono;
  std::map<Exponents, std::map<std::size_t, Rational>> rows;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Polynomial& g = generators[i];
    if (g.nvars() != nvars) throw std::invalid_argument("generator lives in a different ring");
    if (g.is_zero()) continue;
    const int dg = main_degree(g, main_mask, "generator");
    if (dg > dt) continue;
    for (const auto& e : multiplier_monomials(parameter_mask, dt - dg, coefficient_degree_bound)) {
      const std::size_t col = mono.size();
      gen_of.push_back(i);
      mono.push_back(e);
      for (const auto& [ge, c] : g.terms()) {
        Exponents prod = ge;
        for (std::size_t v = 0; v < nvars; ++v) prod[v] = static_cast<std::uint16_t>(prod[v] + e[v]);
        rows[prod][col] += c;
      }
    }
  }
  for (const auto& [e, c] : target.terms()) rows[e];  // target monomials outside every product

  result.unknowns = mono.size();
  result.equations = rows.size();
  SparseSolver solver;
  bool consistent = true;
  for (auto& [e, entries] : rows) {
    SparseRow row{std::move(entries), target.coefficient(e)};
    for (auto it = row.entries.begin(); it != row.entries.end();)
      it = it->second == 0 ? row.entries.erase(it) : std::next(it);
    if (!solver.add(std::move(row))) {
      consistent = false;
      break;
    }
  }
  if (!consistent) {
    result.bound_limited = has_params;
    return result;
  }

  const Vector x = solver.solution(mono.size());
  result.multipliers.assign(generators.size(), Polynomial(nvars));
  for (std::size_t j = 0; j < mono.size(); ++j)
    if (x[j] != 0) result.multipliers[gen_of[j]].add_term(mono[j], x[j]);
  Polynomial check(nvars);
  for (std::size_t i = 0; i < generators.size(); ++i) check += result.multipliers[i] * generators[i];
  if (!(check == target)) throw std::logic_error("membership certificate failed re-verification");
  result.member = true;
  return result;
}

std::optional<int> minimal_membership_bound(const Polynomial& target, const std::vector<Polynomial>& generators,
                                            const std::vector<bool>& parameter_mask, int max_bound) {
  for (int b = 0; b <= max_bound; ++b)
    if (macaulay_membership(target, generators, parameter_mask, b).member) return b;
  return std::nullopt;
}

MinorFamily pencil_plus_rank_one_minors() {
  constexpr std::size_t n = 10;
  auto var = [](std::size_t i) { return Polynomial::variable(n, i); };
  const Polynomial s = var(0), t = var(1), u = var(2), x = var(3), zero(n);
  const std::vector<Polynomial> base{t, s, u, s, zero, zero, u, zero, zero};
  std::vector<Polynomial> m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.push_back(base[i * 3 + j] + x * var(4 + i) * var(7 + j));
  MinorFamily fam;
  for (const auto& rows : combinations(3, 2))
    for (const auto& cols : combinations(3, 2))
      fam.generators.push_back(m[rows[0] * 3 + cols[0]] * m[rows[1] * 3 + cols[1]] -
                               m[rows[0] * 3 + cols[1]] * m[rows[1] * 3 + cols[0]]);
  fam.parameter_mask = {false, false, false, false, true, true, true, true, true, true};
  fam.names = {"s", "t", "u", "x", "f1", "f2", "f3", "g1", "g2", "g3"};
  return fam;
}

}  // namespace border3
