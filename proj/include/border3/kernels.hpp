#pragma once

// Data-parallel kernels. Each has a serial reference and an OpenMP version that
// must return identical results.

#include "border3/finite_field.hpp"
#include "border3/tensor.hpp"

#include <cstdint>
#include <vector>

namespace border3::kernels {

// Is there a set P of `extra` rank-one elements such that W = span(base) + span(P)
// has dimension |base| + extra and is spanned by the rank-one elements it contains?
struct SpanSearch {
  unsigned q = 2;
  std::size_t dim = 0;
  std::vector<FqVector> base;       // independent
  std::vector<FqVector> rank_ones;  // projective representatives
  std::vector<std::uint64_t> codes;  // sorted codes of rank_ones
  std::size_t extra = 0;
};

SpanSearch make_span_search(unsigned q, std::size_t dim, std::vector<FqVector> base, std::vector<FqVector> rank_ones,
                            std::size_t extra);

bool span_search_serial(const SpanSearch& s);
// threads <= 0 uses the OpenMP default.
bool span_search_parallel(const SpanSearch& s, int threads = 0);

// Strassen vanishing for a batch of 3x3x3 tensors.
std::vector<char> strassen_batch_serial(const std::vector<Tensor>& batch);
std::vector<char> strassen_batch_parallel(const std::vector<Tensor>& batch, int threads = 0);

// Exterior powers of Q^dim, packed: pairs p<q and triples p<q<r in
// lexicographic order.
std::size_t pair_index(std::size_t p, std::size_t q, std::size_t dim);
std::size_t triple_index(std::size_t p, std::size_t q, std::size_t r, std::size_t dim);
std::size_t pair_count(std::size_t dim);
std::size_t triple_count(std::size_t dim);

// out += a ^ b.
void wedge2_accumulate(std::vector<Rational>& out, const Vector& a, const Vector& b);
// out += w ^ c for a packed 2-vector w.
void wedge3_accumulate_serial(std::vector<Rational>& out, const std::vector<Rational>& w, const Vector& c);
void wedge3_accumulate_parallel(std::vector<Rational>& out, const std::vector<Rational>& w, const Vector& c,
                                int threads = 0);

}  // namespace border3::kernels
