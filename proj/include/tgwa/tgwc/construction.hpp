#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "tgwa/tgwc/datum.hpp"
#include "tgwa/tgwc/element.hpp"

namespace tgwa {

enum class Strategy { leftmost, rightmost };

// The construction C_mu(R, sigma, t) as a rewrite system.
//
// Rules (coefficients are twisted through the prefix by sigma^d(prefix)):
//   (+i,-i) -> sigma_i(t_i)          (-i,+i) -> t_i
//   (+i,-j) -> mu_ij (-j,+i)
// and, for regular data, the sorting rules that hold after inverting the t's:
//   (+j,+i), j>i -> mu_ji^-1 sigma_i sigma_j(t_i)/sigma_i(t_i) (+i,+j)
//   (-j,-i), j>i -> mu_ij sigma_j^-1(t_i)/t_i (-i,-j)
// plus cancellation of an index present in both sign blocks of a sorted word.
// Irreducible words are exactly canonical_word(degree), so coefficients live in
// Frac(R).
class Construction {
 public:
  Construction(Tgwd datum, ParameterMatrix mu);

  const Tgwd& datum() const { return datum_; }
  const ParameterMatrix& mu() const { return mu_; }
  std::size_t rank() const { return datum_.rank(); }
  bool localizable() const { return regular_; }

  // sigma^alpha through a cached composite map.
  Ratfun sigma(const Degree& alpha, const Ratfun& p) const;

  // Reduces coeff * X_w to a single term (or zero).
  std::pair<Ratfun, Word> reduce_term(Ratfun coeff, Word w, Strategy s = Strategy::leftmost) const;
  TgwcElement normal_form(const TgwcElement& e, Strategy s = Strategy::leftmost) const;
  TgwcElement multiply(const TgwcElement& a, const TgwcElement& b) const;

 private:
  Ratfun twisted(const Word& w, std::size_t prefix_len, const Ratfun& f) const;
  bool sorting_step(Ratfun& coeff, Word& w) const;

  Tgwd datum_;
  ParameterMatrix mu_;
  bool regular_ = false;
  std::vector<Ratfun> sigma_t_;  // sigma_i(t_i)
  // kappa_plus_[a*n+b], a>b: X_a^+ X_b^+ = kappa X_b^+ X_a^+; kappa_minus_ likewise.
  std::vector<Ratfun> kappa_plus_;
  std::vector<Ratfun> kappa_minus_;

  struct PowerCache {
    std::mutex mutex;
    std::map<Degree, std::shared_ptr<const RingMap>> maps;
  };
  std::shared_ptr<PowerCache> cache_;
};

TgwcElement normal_form(const Construction& c, const TgwcElement& e, Strategy s = Strategy::leftmost);
TgwcElement multiply(const Construction& c, const TgwcElement& a, const TgwcElement& b);

}  // namespace tgwa
