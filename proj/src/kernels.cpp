#include "border3/kernels.hpp"

#include "border3/equations.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace border3::kernels {

namespace {

bool is_rank_one(const SpanSearch& s, FqVector v) {
  normalize_projective(v, s.q);
  return std::binary_search(s.codes.begin(), s.codes.end(), encode(v, s.q));
}

// Walks the projective points of span(w) and collects rank-one ones until they span w.
bool spanned_by_rank_ones(const SpanSearch& s, const FqBasis& w) {
  const std::size_t r = w.size();
  if (r == 0) return true;
  FqBasis found(s.q, s.dim);
  std::vector<std::uint8_t> coef(r, 0);
  for (std::size_t lead = 0; lead < r; ++lead) {
    std::uint64_t count = 1;
    for (std::size_t i = lead + 1; i < r; ++i) count *= s.q;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::fill(coef.begin(), coef.end(), 0);
      coef[lead] = 1;
      std::uint64_t rest = code;
      for (std::size_t i = r; i-- > lead + 1;) {
        coef[i] = static_cast<std::uint8_t>(rest % s.q);
        rest /= s.q;
      }
      FqVector v(s.dim, 0);
      for (std::size_t i = lead; i < r; ++i)
        if (coef[i])
          for (std::size_t c = 0; c < s.dim; ++c) v[c] = static_cast<std::uint8_t>((v[c] + coef[i] * w.rows()[i][c]) % s.q);
      if (is_rank_one(s, v) && found.add(v) && found.size() == r) return true;
    }
  }
  return false;
}

// Chooses `remaining` more elements with indices below `limit`, largest first.
bool extend(const SpanSearch& s, const FqBasis& cur, std::size_t limit, std::size_t remaining,
            const std::atomic<bool>* stop) {
  if (remaining == 0) return spanned_by_rank_ones(s, cur);
  for (std::size_t m = limit; m-- > remaining - 1;) {
    if (stop && stop->load(std::memory_order_relaxed)) return false;
    FqBasis next = cur;
    if (!next.add(s.rank_ones[m])) continue;
    if (extend(s, next, m, remaining - 1, stop)) return true;
  }
  return false;
}

FqBasis base_span(const SpanSearch& s) {
  FqBasis b(s.q, s.dim);
  for (const auto& v : s.base)
    if (!b.add(v)) throw std::invalid_argument("span search: base vectors are dependent");
  return b;
}

}  // namespace

SpanSearch make_span_search(unsigned q, std::size_t dim, std::vector<FqVector> base, std::vector<FqVector> rank_ones,
                            std::size_t extra) {
  SpanSearch s{q, dim, std::move(base), std::move(rank_ones), {}, extra};
  for (auto& v : s.rank_ones) {
    normalize_projective(v, q);
    s.codes.push_back(encode(v, q));
  }
  std::sort(s.codes.begin(), s.codes.end());
  return s;
}

bool span_search_serial(const SpanSearch& s) {
  const FqBasis b = base_span(s);
  if (s.extra == 0) return spanned_by_rank_ones(s, b);
  // Colex order: the outer loop fixes the largest element.
  for (std::size_t top = s.extra - 1; top < s.rank_ones.size(); ++top) {
    FqBasis next = b;
    if (!next.add(s.rank_ones[top])) continue;
    if (extend(s, next, top, s.extra - 1, nullptr)) return true;
  }
  return false;
}

bool span_search_parallel(const SpanSearch& s, int threads) {
  const FqBasis b = base_span(s);
  if (s.extra == 0) return spanned_by_rank_ones(s, b);
  std::atomic<bool> found{false};
  const long n = static_cast<long>(s.rank_ones.size());
  const long first = static_cast<long>(s.extra) - 1;
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (long top = first; top < n; ++top) {
    if (found.load(std::memory_order_relaxed)) continue;
    FqBasis next = b;
    if (!next.add(s.rank_ones[static_cast<std::size_t>(top)])) continue;
    if (extend(s, next, static_cast<std::size_t>(top), s.extra - 1, &found)) found.store(true);
  }
  return found.load();
}

std::vector<char> strassen_batch_serial(const std::vector<Tensor>& batch) {
  std::vector<char> out(batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) out[i] = strassen_vanishes(batch[i]);
  return out;
}

std::vector<char> strassen_batch_parallel(const std::vector<Tensor>& batch, int threads) {
  std::vector<char> out(batch.size());
  const long n = static_cast<long>(batch.size());
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = strassen_vanishes(batch[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace border3::kernels

namespace border3::kernels {

std::size_t pair_count(std::size_t dim) { return dim * (dim - 1) / 2; }
std::size_t triple_count(std::size_t dim) { return dim < 3 ? 0 : dim * (dim - 1) * (dim - 2) / 6; }

std::size_t pair_index(std::size_t p, std::size_t q, std::size_t dim) {
  // Pairs with first element < p, then the offset of q.
  return p * (2 * dim - p - 1) / 2 + (q - p - 1);
}

namespace {

// Number of triples whose first element is < p.
std::size_t triples_before(std::size_t p, std::size_t dim) { return triple_count(dim) - triple_count(dim - p); }

}  // namespace

std::size_t triple_index(std::size_t p, std::size_t q, std::size_t r, std::size_t dim) {
  const std::size_t m = dim - p - 1;  // elements after p
  return triples_before(p, dim) + pair_index(q - p - 1, r - p - 1, m);
}

void wedge2_accumulate(std::vector<Rational>& out, const Vector& a, const Vector& b) {
  const std::size_t d = a.size();
  if (b.size() != d || out.size() != pair_count(d)) throw std::invalid_argument("wedge2: size mismatch");
  std::size_t idx = 0;
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = p + 1; q < d; ++q, ++idx) {
      if (a[p] != 0 && b[q] != 0) out[idx] += a[p] * b[q];
      if (a[q] != 0 && b[p] != 0) out[idx] -= a[q] * b[p];
    }
}

namespace {

void wedge3_row(std::vector<Rational>& out, const std::vector<Rational>& w, const Vector& c, std::size_t p) {
  const std::size_t d = c.size();
  std::size_t idx = triples_before(p, d);
  for (std::size_t q = p + 1; q < d; ++q) {
    const Rational& wpq = w[pair_index(p, q, d)];
    for (std::size_t r = q + 1; r < d; ++r, ++idx) {
      if (wpq != 0 && c[r] != 0) out[idx] += wpq * c[r];
      const Rational& wpr = w[pair_index(p, r, d)];
      if (wpr != 0 && c[q] != 0) out[idx] -= wpr * c[q];
      const Rational& wqr = w[pair_index(q, r, d)];
      if (wqr != 0 && c[p] != 0) out[idx] += wqr * c[p];
    }
  }
}

void check_wedge3(const std::vector<Rational>& out, const std::vector<Rational>& w, const Vector& c) {
  const std::size_t d = c.size();
  if (w.size() != pair_count(d) || out.size() != triple_count(d)) throw std::invalid_argument("wedge3: size mismatch");
}

}  // namespace

void wedge3_accumulate_serial(std::vector<Rational>& out, const std::vector<Rational>& w, const Vector& c) {
  check_wedge3(out, w, c);
  for (std::size_t p = 0; p + 2 < c.size(); ++p) wedge3_row(out, w, c, p);
}

void wedge3_accumulate_parallel(std::vector<Rational>& out, const std::vector<Rational>& w, const Vector& c,
                                int threads) {
  check_wedge3(out, w, c);
  const long rows = static_cast<long>(c.size()) - 2;
  const int nt = threads > 0 ? threads : omp_get_max_threads();
  // Rows write disjoint slices of `out`.
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (long p = 0; p < rows; ++p) wedge3_row(out, w, c, static_cast<std::size_t>(p));
}

}  // namespace border3::kernels
