#pragma once

#include <vector>

#include "tgwa/exact/ring_map.hpp"
#include "tgwa/tgwc/word.hpp"

namespace tgwa {

// (R, sigma, t): R = K[variables], sigma_i automorphisms with inverse images,
// t_i elements of R.
struct Tgwd {
  std::vector<Symbol> variables;
  std::vector<RingMap> sigma;
  std::vector<Ratfun> t;

  Tgwd() = default;
  Tgwd(std::vector<Symbol> variables, std::vector<RingMap> sigma, std::vector<Ratfun> t);
  std::size_t rank() const { return t.size(); }
};

// n x n scalars, 0-based; the diagonal is unused and kept at 1.
class ParameterMatrix {
 public:
  explicit ParameterMatrix(std::size_t n = 0);
  static ParameterMatrix ones(std::size_t n) { return ParameterMatrix(n); }

  std::size_t size() const { return n_; }
  const Ratfun& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }
  void set(std::size_t i, std::size_t j, Ratfun value);

  friend bool operator==(const ParameterMatrix& a, const ParameterMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const ParameterMatrix& a, const ParameterMatrix& b) { return !(a == b); }
  std::string to_string() const;

 private:
  std::size_t n_;
  std::vector<Ratfun> entries_;
};

// sigma^alpha(p), negative exponents through the inverse images.
Ratfun sigma_power(const Tgwd& d, const Degree& alpha, const Ratfun& p);

CheckReport check_regular(const Tgwd& d);
// Both consistency families as exact identities, one item per index tuple.
CheckReport check_consistency(const Tgwd& d, const ParameterMatrix& mu);
// Automorphism certificates for every sigma_i and pairwise commutation.
CheckReport certify_datum(const Tgwd& d);

}  // namespace tgwa
