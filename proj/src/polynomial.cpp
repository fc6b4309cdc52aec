#include "border3/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace border3 {

Polynomial::Polynomial(std::size_t nvars, const Rational& c) : nvars_(nvars) {
  if (c != 0) terms_.emplace(Exponents(nvars, 0), c);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::invalid_argument("variable index out of range");
  Exponents e(nvars, 0);
  e[i] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int Polynomial::max_degree_in(const std::vector<bool>& mask) const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (mask[i]) s += e[i];
    d = std::max(d, s);
  }
  return d;
}

bool Polynomial::homogeneous_in(const std::vector<bool>& mask, int degree) const {
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (mask[i]) s += e[i];
    if (s != degree) return false;
  }
  return true;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial d(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents f = e;
    --f[i];
    d.add_term(f, c * e[i]);
  }
  return d;
}

Rational Polynomial::evaluate(const Vector& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point arity mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < nvars_ && v != 0; ++i)
      for (int k = 0; k < e[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw std::invalid_argument("substitution arity mismatch");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term(target, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) term = term * images[i];
    out += term;
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial ring mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial ring mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (constant || mag != 1) os << border3::to_string(mag);
    bool need_star = !constant && mag != 1;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial ring mismatch");
  Polynomial p(a.nvars());
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      p.add_term(e, ca * cb);
    }
  return p;
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents e(nvars, 0);
  // Enumerate compositions of d into nvars parts, lexicographically descending in e[0].
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = static_cast<std::uint16_t>(left);
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = static_cast<std::uint16_t>(k);
      self(self, i + 1, left - k);
    }
  };
  if (d >= 0) rec(rec, 0, d);
  return out;
}

}  // namespace border3
