#include "border3/classifier.hpp"

#include "border3/algebra.hpp"
#include "border3/linalg.hpp"
#include "border3/random.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace border3 {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

BorderRankClass class_of(std::size_t r) {
  switch (r) {
    case 0: return BorderRankClass::Zero;
    case 1: return BorderRankClass::One;
    case 2: return BorderRankClass::Two;
    case 3: return BorderRankClass::Three;
    default: return BorderRankClass::GreaterThan3;
  }
}

// Matrix of the Leibniz action Gamma -> Gamma . T, columns ordered mode by mode,
// x_m(a,b) at column base_m + a*d_m + b.
Matrix action_matrix(const Tensor& t) {
  std::size_t cols = 0;
  for (auto d : t.dims()) cols += d * d;
  Matrix l(t.size(), cols);
  std::size_t base = 0;
  for (std::size_t m = 0; m < t.order(); ++m) {
    const std::size_t d = t.dim(m);
    for (std::size_t off = 0; off < t.size(); ++off) {
      Index idx = t.index_of(off);
      const std::size_t a = idx[m];
      for (std::size_t b = 0; b < d; ++b) {
        idx[m] = b;
        const Rational& v = t[idx];
        if (v != 0) l(off, base + a * d + b) += v;
      }
    }
    base += d * d;
  }
  return l;
}

// Bipartition flattenings of an order >= 3 tensor: all proper subsets containing mode 0.
std::size_t max_bipartition_rank(const Tensor& t, std::string* where) {
  const std::size_t n = t.order();
  std::size_t best = 0;
  for (std::size_t mask = 1; mask < (1u << n) - 1; mask += 2) {
    std::vector<std::size_t> rows;
    for (std::size_t m = 0; m < n; ++m)
      if (mask & (1u << m)) rows.push_back(m);
    const std::size_t r = rank(flatten_modes(t, rows));
    if (r > best) {
      best = r;
      if (where) *where = join(rows);
    }
  }
  return best;
}

// Contract all modes beyond the first three with fixed pseudorandom covectors.
Tensor generic_three_mode_contraction(const Tensor& t, Sampler& rng) {
  Tensor c = t;
  while (c.order() > 3) c = contract(c, c.order() - 1, rng.vector(c.dim(c.order() - 1), 7, 1));
  return c;
}

struct PatternVerdict {
  std::optional<int> orbit;
  std::string trace;
};

PatternVerdict orbit_from_patterns(const Tensor& core) {
  std::vector<LinePattern> p;
  std::ostringstream os;
  os << "slice cubic patterns:";
  for (std::size_t m = 0; m < 3; ++m) {
    const TernaryCubic c = slice_det_cubic(core, m);
    p.push_back(cubic_line_pattern(c));
    os << " mode " << m << " " << to_string(p.back()) << " [" << c.to_string() << "]";
  }
  auto all = [&](LinePattern q) { return std::all_of(p.begin(), p.end(), [&](auto x) { return x == q; }); };
  PatternVerdict v{std::nullopt, os.str()};
  if (all(LinePattern::Squarefree)) v.orbit = 39;
  if (all(LinePattern::DoubleLinePlusLine)) v.orbit = 38;
  if (all(LinePattern::TripleLine)) v.orbit = 37;
  const auto zeros = std::count(p.begin(), p.end(), LinePattern::IdenticallyZero);
  const auto triples = std::count(p.begin(), p.end(), LinePattern::TripleLine);
  if (zeros == 1 && triples == 2) {
    const auto pos = std::find(p.begin(), p.end(), LinePattern::IdenticallyZero) - p.begin();
    v.orbit = 34 + static_cast<int>(pos);
  }
  return v;
}

// Classification of an order-3 tensor whose three modes are all effective.
// `modes` maps local mode indices to the caller's mode indices.
void classify_three(const Tensor& core, const std::vector<std::size_t>& modes, ClassificationReport& r) {
  const Dims& d = core.dims();
  if (d != Dims{3, 3, 3}) {
    r.border_rank_class = BorderRankClass::Three;
    r.rank_deferred = true;
    r.witnesses.push_back("core " + join(d) + " lies in a subspace variety filled by sigma_3 and is not in sigma_2");
    r.witnesses.push_back("sub-orbits of this subspace variety are not distinguished; rank not determined");
    return;
  }
  if (!strassen_vanishes(core)) {
    r.border_rank_class = BorderRankClass::GreaterThan3;
    r.witnesses.push_back("concise 3x3x3 core: some Strassen quartic is nonzero");
    return;
  }
  r.witnesses.push_back("concise 3x3x3 core: all 27 Strassen quartics vanish");
  const PatternVerdict pv = orbit_from_patterns(core);
  r.witnesses.push_back(pv.trace);
  if (!pv.orbit) {
    r.border_rank_class = BorderRankClass::Unknown;
    r.witnesses.push_back("pattern triple matches no orbit of border rank 3");
    return;
  }
  const OrbitInfo& info = orbit_info(*pv.orbit);
  const std::size_t odim = orbit_dimension(core);
  if (odim != static_cast<std::size_t>(info.orbit_dimension)) {
    r.border_rank_class = BorderRankClass::Unknown;
    r.witnesses.push_back("orbit dimension " + std::to_string(odim) + " contradicts pattern orbit " +
                          std::to_string(info.id));
    return;
  }
  r.witnesses.push_back("orbit dimension " + std::to_string(odim) + " agrees with orbit " + std::to_string(info.id));
  r.border_rank_class = BorderRankClass::Three;
  r.orbit_id = info.id;
  r.type_tag = info.type;
  if (info.distinguished_factor) r.distinguished_factor = modes[*info.distinguished_factor];
  r.rank = info.rank;
}

// sigma_2 analysis of a core with all dims equal to 2 and at least 3 modes.
void classify_secant(const Tensor& core, ClassificationReport& r) {
  r.border_rank_class = BorderRankClass::Two;
  const std::size_t m = core.order();
  Sampler rng(0x5ec2);
  bool honest = false;
  const int tries = m == 3 ? 1 : 3;
  for (int k = 0; k < tries && !honest; ++k)
    honest = hyperdeterminant(generic_three_mode_contraction(core, rng)) != 0;
  if (honest) {
    r.rank = 2;
    r.witnesses.push_back("hyperdeterminant of a 2x2x2 reduction is nonzero: point on a secant line, rank 2");
  } else {
    r.rank = static_cast<int>(m);
    r.witnesses.push_back("hyperdeterminant vanishes: tangential point with |J| = " + std::to_string(m) +
                          ", rank " + std::to_string(m));
  }
}

struct GroupVerdict {
  std::size_t i, j;
  ClassificationReport report;
};

void classify_many(const Tensor& core, const std::vector<std::size_t>& modes, ClassificationReport& r) {
  const std::size_t m = core.order();
  std::string where;
  const std::size_t bip = max_bipartition_rank(core, &where);
  if (bip > 3) {
    r.border_rank_class = BorderRankClass::GreaterThan3;
    r.witnesses.push_back("flattening with row modes " + where + " has rank " + std::to_string(bip));
    return;
  }
  // Grouped three-factor views (i, j, rest); sigma_3 of the grouped Segre contains sigma_3.
  std::vector<GroupVerdict> groups;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k < m; ++k)
        if (k != i && k != j) rest.push_back(k);
      const Tensor g = group_modes(core, {{i}, {j}, rest});
      ClassificationReport gr = classify(g);
      if (gr.border_rank_class == BorderRankClass::GreaterThan3) {
        r.border_rank_class = BorderRankClass::GreaterThan3;
        r.witnesses.push_back("grouping (" + std::to_string(modes[i]) + "," + std::to_string(modes[j]) +
                              ",rest) has border rank > 3");
        return;
      }
      groups.push_back({i, j, std::move(gr)});
    }

  r.border_rank_class = BorderRankClass::Unknown;
  if (core.dims() != Dims(m, 3)) {
    r.witnesses.push_back("core " + join(core.dims()) + " with " + std::to_string(m) +
                          " factors: no decision rule (n >= 4 coverage is partial)");
    return;
  }
  std::map<int, int> orbit_count;
  for (const auto& g : groups)
    if (g.report.orbit_id) ++orbit_count[*g.report.orbit_id];
  const int total = static_cast<int>(groups.size());

  std::optional<TypeTag> type;
  std::optional<std::size_t> factor;
  if (orbit_count[39] == total) type = TypeTag::i;
  if (orbit_count[38] == total) type = TypeTag::ii;
  if (orbit_count[37] == total) type = TypeTag::iii;
  if (!type) {
    // Type iv: a factor f with grouping (i,j,rest) giving 34 when f = i, 35 when f = j, 36 otherwise.
    for (std::size_t f = 0; f < m && !type; ++f) {
      bool ok = true;
      for (const auto& g : groups) {
        const int want = g.i == f ? 34 : (g.j == f ? 35 : 36);
        if (g.report.orbit_id != want) ok = false;
      }
      if (ok) {
        type = TypeTag::iv;
        factor = f;
      }
    }
  }
  if (!type) {
    r.witnesses.push_back("grouped three-factor classifications match no normal form");
    return;
  }
  const std::size_t expected_stab = *type == TypeTag::i     ? 3 * m - 3
                                    : *type == TypeTag::ii  ? 3 * m - 2
                                    : *type == TypeTag::iii ? 3 * m - 1
                                                            : 3 * m + 1;
  const std::size_t stab = stabilizer_dimension(core).dimension;
  if (stab != expected_stab) {
    r.witnesses.push_back("stabilizer dimension " + std::to_string(stab) + " differs from " +
                          std::to_string(expected_stab) + " expected for type " + to_string(*type));
    return;
  }
  r.witnesses.push_back("all pair groupings consistent with type " + to_string(*type) + "; stabilizer dimension " +
                        std::to_string(stab));
  r.border_rank_class = BorderRankClass::Three;
  r.type_tag = type;
  if (factor) r.distinguished_factor = modes[*factor];
  if (*type == TypeTag::i) {
    r.rank = 3;
  } else {
    r.rank_deferred = true;
    r.witnesses.push_back("rank for this type with n >= 4 factors not determined");
  }
}

}  // namespace

std::string to_string(BorderRankClass c) {
  switch (c) {
    case BorderRankClass::Zero: return "0";
    case BorderRankClass::One: return "1";
    case BorderRankClass::Two: return "2";
    case BorderRankClass::Three: return "3";
    case BorderRankClass::GreaterThan3: return "GreaterThan3";
    case BorderRankClass::Unknown: return "Unknown";
  }
  return "?";
}

bool ClassificationReport::same_verdict(const ClassificationReport& o) const {
  return dims == o.dims && multilinear_rank == o.multilinear_rank && border_rank_class == o.border_rank_class &&
         type_tag == o.type_tag && distinguished_factor == o.distinguished_factor && orbit_id == o.orbit_id &&
         rank == o.rank && subspace_label == o.subspace_label && concise == o.concise &&
         rank_deferred == o.rank_deferred;
}

ClassificationReport classify(const Tensor& t) {
  ClassificationReport r;
  r.dims = t.dims();
  r.multilinear_rank = multilinear_rank(t);
  r.subspace_label = r.multilinear_rank;
  r.concise = r.multilinear_rank == r.dims;
  r.witnesses.push_back("multilinear rank " + join(r.multilinear_rank));

  if (t.is_zero()) {
    r.border_rank_class = BorderRankClass::Zero;
    r.rank = 0;
    r.witnesses.push_back("zero tensor");
    return r;
  }
  for (std::size_t m = 0; m < t.order(); ++m)
    if (r.multilinear_rank[m] > 3) {
      r.border_rank_class = BorderRankClass::GreaterThan3;
      r.witnesses.push_back("mode " + std::to_string(m) + " flattening has rank " +
                            std::to_string(r.multilinear_rank[m]) + " > 3");
      return r;
    }

  std::vector<std::size_t> modes;  // effective modes (flattening rank >= 2)
  for (std::size_t m = 0; m < t.order(); ++m)
    if (r.multilinear_rank[m] >= 2) modes.push_back(m);

  if (modes.empty()) {
    r.border_rank_class = BorderRankClass::One;
    r.rank = 1;
    r.witnesses.push_back("all flattenings have rank 1: rank-one tensor");
    return r;
  }
  if (modes.size() == 2) {
    const std::size_t mr = r.multilinear_rank[modes[0]];
    r.border_rank_class = class_of(mr);
    r.rank = static_cast<int>(mr);
    r.witnesses.push_back("only modes " + join(modes) + " are effective: a matrix of rank " + std::to_string(mr));
    return r;
  }

  const Tensor core = drop_unit_modes(concise_core(t).core);
  r.witnesses.push_back("concise core " + join(core.dims()) + " on modes " + join(modes));

  const bool all_two = std::all_of(core.dims().begin(), core.dims().end(), [](auto d) { return d == 2; });
  bool secant = all_two;
  if (secant && core.order() > 3) {
    std::string where;
    secant = max_bipartition_rank(core, &where) <= 2;
    if (!secant) r.witnesses.push_back("flattening with row modes " + where + " has rank > 2");
  }
  if (secant) {
    r.witnesses.push_back("all flattenings have rank <= 2: border rank 2");
    classify_secant(core, r);
    return r;
  }

  if (core.order() == 3)
    classify_three(core, modes, r);
  else
    classify_many(core, modes, r);
  return r;
}

Rational hyperdeterminant(const Tensor& t) {
  if (t.dims() != Dims{2, 2, 2}) throw std::invalid_argument("hyperdeterminant: 2x2x2 tensor expected");
  auto a = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& { return t[{i, j, k}]; };
  Rational d = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) + a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
               a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) + a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  Rational pairs = a(0, 0, 0) * a(1, 1, 1) * a(0, 0, 1) * a(1, 1, 0) + a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 0) * a(1, 0, 1) +
                   a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 0) * a(0, 1, 1) + a(0, 0, 1) * a(1, 1, 0) * a(0, 1, 0) * a(1, 0, 1) +
                   a(0, 0, 1) * a(1, 1, 0) * a(1, 0, 0) * a(0, 1, 1) + a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 0) * a(0, 1, 1);
  Rational quads = a(0, 0, 0) * a(0, 1, 1) * a(1, 0, 1) * a(1, 1, 0) + a(1, 1, 1) * a(1, 0, 0) * a(0, 1, 0) * a(0, 0, 1);
  return d - 2 * pairs + 4 * quads;
}

StabilizerDimension stabilizer_dimension(const Tensor& t) {
  std::size_t total = 0;
  for (auto d : t.dims()) total += d * d;
  if (t.is_zero()) return {total, true};
  return {total - rank(action_matrix(t)), false};
}

std::size_t orbit_dimension(const Tensor& t) {
  if (t.is_zero()) throw std::invalid_argument("orbit_dimension of the zero tensor");
  const Matrix l = action_matrix(t);
  // Unknowns (Gamma, c) with Gamma . T - c T = 0; c is determined by Gamma since T != 0.
  Matrix aug(l.rows(), l.cols() + 1);
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < l.cols(); ++j) aug(i, j) = l(i, j);
    aug(i, l.cols()) = -t.at(i);
  }
  const std::size_t line_stabilizer = aug.cols() - rank(aug);
  return l.cols() - line_stabilizer;
}

std::string to_string(SchemeType s) {
  switch (s) {
    case SchemeType::ThreeReducedPoints: return "three reduced points";
    case SchemeType::DoublePlusReduced: return "double point plus reduced point";
    case SchemeType::CurvilinearTriple: return "curvilinear triple point";
    case SchemeType::FatTriple: return "fat triple point";
    case SchemeType::NotFiniteOfDegreeThree: return "not a finite scheme of degree 3";
  }
  return "?";
}

SchemeType scheme_intersection_check(const Tensor& t) {
  if (t.dims() != Dims{3, 3, 3}) throw std::invalid_argument("scheme_intersection_check: 3x3x3 tensor expected");
  if (rank(flatten(t, 0)) != 3) throw std::invalid_argument("scheme_intersection_check: net not 3-dimensional");

  // Net M(s,t,u) and its nine 2x2 minors as quadrics.
  const Polynomial zero(3);
  std::vector<Polynomial> net(9, zero);
  for (std::size_t v = 0; v < 3; ++v) {
    const Matrix s = slice(t, 0, v);
    for (std::size_t i = 0; i < 9; ++i)
      if (s.entries()[i] != 0) net[i] += s.entries()[i] * Polynomial::variable(3, v);
  }
  const auto quad = monomials_of_degree(3, 2);
  const auto cubic = monomials_of_degree(3, 3);
  auto coords = [](const Polynomial& p, const std::vector<Exponents>& basis) {
    Vector v;
    for (const auto& e : basis) v.push_back(p.coefficient(e));
    return v;
  };
  std::vector<Vector> minors;
  std::vector<Polynomial> minor_polys;
  for (const auto& rows : combinations(3, 2))
    for (const auto& cols : combinations(3, 2)) {
      const Polynomial q = net[rows[0] * 3 + cols[0]] * net[rows[1] * 3 + cols[1]] -
                           net[rows[0] * 3 + cols[1]] * net[rows[1] * 3 + cols[0]];
      minor_polys.push_back(q);
      minors.push_back(coords(q, quad));
    }
  const Echelon i2 = rref(Matrix::from_rows(minors));
  if (i2.pivots.size() != 3) return SchemeType::NotFiniteOfDegreeThree;
  std::vector<Vector> i3;
  for (const auto& q : minor_polys)
    for (std::size_t v = 0; v < 3; ++v) i3.push_back(coords(Polynomial::variable(3, v) * q, cubic));
  if (cubic.size() - rank_of(i3) != 3) return SchemeType::NotFiniteOfDegreeThree;

  // Coordinates on S_2 / I_2: reduce by the echelon rows, read the free monomials.
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < quad.size(); ++c)
    if (std::find(i2.pivots.begin(), i2.pivots.end(), c) == i2.pivots.end()) free_cols.push_back(c);
  auto reduce = [&](const Polynomial& p) {
    Vector v = coords(p, quad);
    for (std::size_t r = 0; r < i2.pivots.size(); ++r) {
      const Rational f = v[i2.pivots[r]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < quad.size(); ++c) v[c] -= f * i2.reduced(r, c);
    }
    Vector out;
    for (auto c : free_cols) out.push_back(v[c]);
    return out;
  };
  // Multiplication S_1 -> S_2/I_2 by a linear form h, as a 3x3 matrix.
  auto mult = [&](const Vector& h) {
    Polynomial hp(3);
    for (std::size_t v = 0; v < 3; ++v) hp += h[v] * Polynomial::variable(3, v);
    std::vector<Vector> cols;
    for (std::size_t v = 0; v < 3; ++v) cols.push_back(reduce(hp * Polynomial::variable(3, v)));
    return Matrix::from_columns(cols);
  };

  std::optional<Matrix> ell_inv;
  for (int a = 0; a <= 3 && !ell_inv; ++a)
    for (int b = 0; b <= 3 && !ell_inv; ++b)
      for (int c = 1; c <= 3 && !ell_inv; ++c) ell_inv = inverse(mult({a, b, c}));
  if (!ell_inv) return SchemeType::NotFiniteOfDegreeThree;

  std::vector<Matrix> ops;  // multiplication by s/l, t/l, u/l on the 3-dim coordinate ring
  for (std::size_t v = 0; v < 3; ++v) {
    Vector h(3);
    h[v] = 1;
    ops.push_back(*ell_inv * mult(h));
  }
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b)
      if (!(ops[a] * ops[b] == ops[b] * ops[a])) return SchemeType::NotFiniteOfDegreeThree;

  // Number of support points = number of distinct eigenvalues of a generic combination.
  auto distinct_roots = [](const Matrix& m) {
    // Characteristic polynomial x^3 + c2 x^2 + c1 x + c0.
    const Rational tr = m(0, 0) + m(1, 1) + m(2, 2);
    const Rational c1 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                        m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    const Rational c0 = -determinant(m);
    const std::vector<Rational> p{c0, c1, -tr, 1};
    const std::vector<Rational> dp{c1, -2 * tr, 3};
    // gcd(p, p') by Euclid.
    std::vector<Rational> a = p, b = dp;
    auto trimv = [](std::vector<Rational>& v) {
      while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trimv(b);
    while (!b.empty()) {
      while (a.size() >= b.size()) {
        const Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        trimv(a);
        if (a.empty()) break;
      }
      std::swap(a, b);
    }
    return 3 - (static_cast<int>(a.size()) - 1);
  };
  int points = 0;
  for (const Vector& w : std::vector<Vector>{{1, 3, 7}, {2, -5, 11}, {13, 1, -4}}) {
    Matrix g = w[0] * ops[0] + w[1] * ops[1] + w[2] * ops[2];
    points = std::max(points, distinct_roots(g));
  }
  if (points == 3) return SchemeType::ThreeReducedPoints;
  if (points == 2) return SchemeType::DoublePlusReduced;
  // One point: the maximal ideal is spanned by the nilpotent parts; fat iff it squares to zero.
  std::vector<Matrix> nil;
  for (const auto& op : ops) {
    const Rational lambda = (op(0, 0) + op(1, 1) + op(2, 2)) / 3;
    nil.push_back(op - lambda * Matrix::identity(3));
  }
  for (const auto& a : nil)
    for (const auto& b : nil)
      if (!(a * b == Matrix(3, 3))) return SchemeType::CurvilinearTriple;
  return SchemeType::FatTriple;
}

}  // namespace border3
