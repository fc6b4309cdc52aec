#include "border3/equations.hpp"

#include "border3/algebra.hpp"
#include "border3/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace border3 {

namespace {

void require_333(const Tensor& t, const char* what) {
  if (t.dims() != Dims{3, 3, 3}) throw std::invalid_argument(std::string(what) + ": dims (3,3,3) required");
}

template <class R>
std::vector<R> all_blocks(const std::vector<R>& x, const std::vector<R>& y, const std::vector<R>& z, const R& zero) {
  std::vector<R> out = strassen_block(x, y, z, zero);
  std::vector<R> b = strassen_block(y, z, x, zero);
  out.insert(out.end(), b.begin(), b.end());
  b = strassen_block(z, x, y, zero);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// ---- univariate and bivariate polynomials over Q for the squarefree test ----

using UPoly = std::vector<Rational>;  // coefficient of y^i
using BPoly = std::vector<UPoly>;     // coefficient of x^i

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
void trim(BPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}
int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }
int deg(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (deg(a) >= deg(b)) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly monic(UPoly p) {
  if (p.empty()) return p;
  const Rational lc = p.back();
  for (auto& c : p) c /= lc;
  return p;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

UPoly content(const BPoly& p) {
  UPoly g;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

BPoly primitive(const BPoly& p) {
  const UPoly c = content(p);
  BPoly r;
  for (const auto& co : p) r.push_back(co.empty() ? UPoly{} : divmod(co, c).first);
  trim(r);
  return r;
}

BPoly pseudo_remainder(BPoly r, const BPoly& b) {
  const UPoly lb = b.back();
  while (!r.empty() && deg(r) >= deg(b)) {
    const UPoly lr = r.back();
    const std::size_t shift = r.size() - b.size();
    for (auto& c : r) c = mul(c, lb);
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] = sub(r[i + shift], mul(lr, b[i]));
    trim(r);
  }
  return r;
}

BPoly gcd(BPoly a, BPoly b) {
  if (a.empty()) std::swap(a, b);
  if (b.empty()) {
    const UPoly lc = content(a);
    BPoly g = primitive(a);
    for (auto& co : g) co = mul(co, lc);
    return g;
  }
  const UPoly c = gcd(content(a), content(b));
  a = primitive(a);
  b = primitive(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    BPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.empty() ? BPoly{} : primitive(r);
  }
  BPoly g = primitive(a);
  for (auto& co : g) co = mul(co, c);
  return g;
}

bool is_constant(const BPoly& p) { return p.size() == 1 && p[0].size() == 1; }

BPoly to_bivariate(const Polynomial& p) {
  BPoly b;
  for (const auto& [e, c] : p.terms()) {
    if (b.size() <= e[0]) b.resize(e[0] + 1u);
    if (b[e[0]].size() <= e[1]) b[e[0]].resize(e[1] + 1u);
    b[e[0]][e[1]] += c;
  }
  for (auto& co : b) trim(co);
  trim(b);
  return b;
}

// Invertible A such that the line {A (0, x, y)} is not a component of `form`.
// Setting the first new variable to 1 then keeps every linear factor visible.
Matrix affine_chart(const Polynomial& form) {
  const int vals[] = {0, 1, -1, 2};
  for (int a : vals)
    for (int b : vals)
      for (int c : vals) {
        Matrix m(3, 3, {1, a, b, c, 1, 0, 0, b, 1});
        if (determinant(m) == 0) continue;
        std::vector<Polynomial> at_infinity;
        for (std::size_t i = 0; i < 3; ++i)
          at_infinity.push_back(m(i, 1) * Polynomial::variable(2, 0) + m(i, 2) * Polynomial::variable(2, 1));
        if (!form.substitute(at_infinity).is_zero()) return m;
      }
  throw std::domain_error("no affine chart found");
}

}  // namespace

std::vector<Rational> strassen_equations(const Tensor& t) {
  require_333(t, "strassen_equations");
  const auto& e = t.entries();
  const std::vector<Rational> x(e.begin(), e.begin() + 9), y(e.begin() + 9, e.begin() + 18), z(e.begin() + 18, e.end());
  return all_blocks(x, y, z, Rational(0));
}

bool strassen_vanishes(const Tensor& t) {
  for (const auto& v : strassen_equations(t))
    if (v != 0) return false;
  return true;
}

const std::vector<Polynomial>& strassen_polynomials() {
  static const std::vector<Polynomial> polys = [] {
    std::vector<Polynomial> x, y, z;
    for (std::size_t i = 0; i < 9; ++i) {
      x.push_back(Polynomial::variable(27, i));
      y.push_back(Polynomial::variable(27, 9 + i));
      z.push_back(Polynomial::variable(27, 18 + i));
    }
    return all_blocks(x, y, z, Polynomial(27));
  }();
  return polys;
}

std::size_t strassen_jacobian_rank(const Tensor& t) {
  require_333(t, "strassen_jacobian_rank");
  static const std::vector<std::vector<Polynomial>> partials = [] {
    std::vector<std::vector<Polynomial>> d;
    for (const auto& p : strassen_polynomials()) {
      std::vector<Polynomial> row;
      for (std::size_t v = 0; v < 27; ++v) row.push_back(p.derivative(v));
      d.push_back(std::move(row));
    }
    return d;
  }();
  Matrix j(27, 27);
  for (std::size_t r = 0; r < 27; ++r)
    for (std::size_t v = 0; v < 27; ++v) j(r, v) = partials[r][v].evaluate(t.entries());
  return rank(j);
}

bool subspace_membership(const Tensor& t, const std::vector<std::size_t>& bounds) {
  if (bounds.size() != t.order()) throw std::invalid_argument("subspace_membership: one bound per mode required");
  const auto r = multilinear_rank(t);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] > bounds[i]) return false;
  return true;
}

TernaryCubic::TernaryCubic(const Polynomial& p) {
  if (p.nvars() != 3) throw std::invalid_argument("ternary cubic needs 3 variables");
  for (const auto& [e, c] : p.terms()) {
    if (e[0] + e[1] + e[2] != 3) throw std::invalid_argument("not a homogeneous cubic");
    set(e[0], e[1], e[2], c);
  }
}

std::size_t TernaryCubic::slot(int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0 || i + j + k != 3) throw std::invalid_argument("exponent triple must have degree 3");
  // Order: s^3, s^2t, s^2u, st^2, stu, su^2, t^3, t^2u, tu^2, u^3.
  static constexpr int base[4] = {0, 1, 3, 6};  // first slot for s-degree 3,2,1,0
  const int sdeg = i;
  const int start = base[3 - sdeg];
  return static_cast<std::size_t>(start + (3 - sdeg - j));
}

const Rational& TernaryCubic::coeff(int i, int j, int k) const { return c_[slot(i, j, k)]; }
void TernaryCubic::set(int i, int j, int k, const Rational& c) { c_[slot(i, j, k)] = c; }

bool TernaryCubic::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

Polynomial TernaryCubic::to_polynomial() const {
  Polynomial p(3);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) {
      const int k = 3 - i - j;
      p.add_term({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j), static_cast<std::uint16_t>(k)},
                 coeff(i, j, k));
    }
  return p;
}

std::string TernaryCubic::to_string() const { return to_polynomial().to_string({"s", "t", "u"}); }

std::string to_string(LinePattern p) {
  switch (p) {
    case LinePattern::IdenticallyZero: return "IdenticallyZero";
    case LinePattern::TripleLine: return "TripleLine";
    case LinePattern::DoubleLinePlusLine: return "DoubleLinePlusLine";
    case LinePattern::Squarefree: return "Squarefree";
  }
  return "?";
}

TernaryCubic slice_det_cubic(const Tensor& t, std::size_t mode) {
  require_333(t, "slice_det_cubic");
  if (mode > 2) throw std::invalid_argument("slice_det_cubic: mode out of range");
  const Polynomial zero(3);
  SquareOver<Polynomial> net{3, std::vector<Polynomial>(9, zero)};
  for (std::size_t v = 0; v < 3; ++v) {
    const Matrix s = slice(t, mode, v);
    const Polynomial var = Polynomial::variable(3, v);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        if (s(a, b) != 0) net.a[a * 3 + b] += s(a, b) * var;
  }
  return TernaryCubic(det(net, zero));
}

bool is_squarefree_ternary(const Polynomial& form) {
  if (form.nvars() != 3 || form.is_zero()) throw std::invalid_argument("nonzero ternary form expected");
  const Matrix a = affine_chart(form);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < 3; ++i) {
    Polynomial img(2, a(i, 0));
    img += a(i, 1) * Polynomial::variable(2, 0);
    img += a(i, 2) * Polynomial::variable(2, 1);
    images.push_back(img);
  }
  const Polynomial f = form.substitute(images);
  const BPoly g = gcd(gcd(to_bivariate(f), to_bivariate(f.derivative(0))), to_bivariate(f.derivative(1)));
  return is_constant(g);
}

LinePattern cubic_line_pattern(const TernaryCubic& c) {
  if (c.is_zero()) return LinePattern::IdenticallyZero;
  const Polynomial f = c.to_polynomial();
  std::vector<Vector> partials;
  const auto quad = monomials_of_degree(3, 2);
  for (std::size_t v = 0; v < 3; ++v) {
    const Polynomial d = f.derivative(v);
    Vector coeffs;
    for (const auto& e : quad) coeffs.push_back(d.coefficient(e));
    partials.push_back(std::move(coeffs));
  }
  if (rank_of(partials) == 1) return LinePattern::TripleLine;
  return is_squarefree_ternary(f) ? LinePattern::Squarefree : LinePattern::DoubleLinePlusLine;
}

}  // namespace border3
