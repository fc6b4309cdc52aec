#include "border3/finite_field.hpp"

#include <stdexcept>

namespace border3 {

namespace {

unsigned inv_mod(unsigned a, unsigned q) {
  for (unsigned b = 1; b < q; ++b)
    if (a * b % q == 1) return b;
  throw std::domain_error("zero has no inverse");
}

}  // namespace

bool is_supported_prime(unsigned q) { return q == 2 || q == 3 || q == 5; }

FieldElement FieldElement::reduce(const Rational& x, unsigned q) {
  if (!is_supported_prime(q)) throw std::invalid_argument("field size must be 2, 3 or 5");
  const mpz_class mq(q);
  mpz_class den = x.get_den() % mq;
  if (den == 0) throw std::domain_error("denominator of " + to_string(x) + " vanishes mod " + std::to_string(q));
  mpz_class num = x.get_num() % mq;
  if (num < 0) num += mq;
  const unsigned v = static_cast<unsigned>(num.get_ui()) * inv_mod(static_cast<unsigned>(den.get_ui()), q) % q;
  return {static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(q)};
}

FieldElement FieldElement::operator+(FieldElement o) const {
  return {static_cast<std::uint8_t>((value + o.value) % prime), prime};
}
FieldElement FieldElement::operator-(FieldElement o) const {
  return {static_cast<std::uint8_t>((value + prime - o.value) % prime), prime};
}
FieldElement FieldElement::operator*(FieldElement o) const {
  return {static_cast<std::uint8_t>(value * o.value % prime), prime};
}
FieldElement FieldElement::inverse() const {
  return {static_cast<std::uint8_t>(inv_mod(value, prime)), prime};
}

void normalize_projective(FqVector& v, unsigned q) {
  for (auto x : v)
    if (x != 0) {
      const unsigned s = inv_mod(x, q);
      for (auto& y : v) y = static_cast<std::uint8_t>(y * s % q);
      return;
    }
}

std::uint64_t encode(const FqVector& v, unsigned q) {
  std::uint64_t c = 0;
  for (auto x : v) c = c * q + x;
  return c;
}

std::vector<FqVector> projective_points(std::size_t d, unsigned q) {
  std::vector<FqVector> out;
  for (std::size_t lead = 0; lead < d; ++lead) {
    std::uint64_t count = 1;
    for (std::size_t i = lead + 1; i < d; ++i) count *= q;
    for (std::uint64_t c = 0; c < count; ++c) {
      FqVector v(d, 0);
      v[lead] = 1;
      std::uint64_t rest = c;
      for (std::size_t i = d; i-- > lead + 1;) {
        v[i] = static_cast<std::uint8_t>(rest % q);
        rest /= q;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

FqVector FqBasis::reduced(FqVector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const unsigned f = v[pivots_[i]];
    if (f == 0) continue;
    const FqVector& r = rows_[i];
    for (std::size_t c = 0; c < dim_; ++c)
      if (r[c]) v[c] = static_cast<std::uint8_t>((v[c] + q_ * q_ - f * r[c]) % q_);
  }
  return v;
}

bool FqBasis::contains(const FqVector& v) const {
  const FqVector r = reduced(v);
  for (auto x : r)
    if (x) return false;
  return true;
}

bool FqBasis::add(const FqVector& v) {
  FqVector r = reduced(v);
  std::size_t p = 0;
  while (p < dim_ && r[p] == 0) ++p;
  if (p == dim_) return false;
  normalize_projective(r, q_);
  for (auto& row : rows_) {
    const unsigned f = row[p];
    if (f == 0) continue;
    for (std::size_t c = 0; c < dim_; ++c)
      if (r[c]) row[c] = static_cast<std::uint8_t>((row[c] + q_ * q_ - f * r[c]) % q_);
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

}  // namespace border3
