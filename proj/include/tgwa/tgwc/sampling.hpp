#pragma once

#include <cstdint>
#include <random>

#include "tgwa/tgwc/datum.hpp"
#include "tgwa/tgwc/element.hpp"

namespace tgwa {

// Deterministic generator for the sampled checks. Bounded draws use rng() % n so
// streams are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  int uniform(int lo, int hi);  // inclusive
  bool coin() { return uniform(0, 1) == 1; }

  // Nonzero Gaussian rational with small numerator/denominator.
  Gaussian small_gaussian(bool allow_imaginary = true);
  // Nonzero scalar, optionally a signed power of one of the given parameters
  // times a small rational.
  Ratfun nonzero_scalar(const std::vector<Symbol>& params = {});
  Ratfun ring_element(const std::vector<Symbol>& vars, int max_degree = 2);
  Word word(std::size_t rank, std::size_t max_len = 4);
  // Random word of degree alpha: the letters of alpha shuffled, padded with
  // cancelling pairs up to max_len.
  Word word_of_degree(const Degree& alpha, std::size_t max_len = 4);
  Degree degree(std::size_t rank, int radius);

  TgwcElement element(const Tgwd& d, int max_terms = 3, std::size_t max_len = 4, int max_degree = 2);
  TgwcElement homogeneous(const Tgwd& d, const Degree& alpha, int max_terms = 2, std::size_t max_len = 4,
                          int max_degree = 2);

 private:
  std::mt19937_64 rng_;
};

}  // namespace tgwa
