#pragma once

#include <map>
#include <memory>
#include <utility>

#include "tgwa/tgwc/construction.hpp"
#include "tgwa/tgwc/sampling.hpp"
#include "tgwa/twisting/qsystem.hpp"

namespace tgwa {

// Extensions of the automorphisms of each factor to the ring R (x) S.
struct TensorExtension {
  std::vector<RingMap> rho_on_r;    // rho_i on R, one per generator of B
  std::vector<RingMap> sigma_on_s;  // sigma_j on S, one per generator of A
  static TensorExtension trivial(const Tgwd& a, const Tgwd& b);
  bool is_trivial() const;
};

// r X_u (x) s Y_v with r in Frac(R), s in Frac(S); words are unreduced.
struct PureTensor {
  Ratfun r;
  Word u;
  Ratfun s;
  Word v;
};

// Sum of c (X_u (x) 1)(1 (x) Y_v) with c in Frac(R (x) S). The pure tensor
// r X_u (x) s Y_v has coefficient r sigma^{d(u)}(s).
class TensorElement {
 public:
  using Key = std::pair<Word, Word>;
  TensorElement() = default;
  static TensorElement term(Ratfun c, Word u, Word v);
  static TensorElement one() { return term(Ratfun(1), {}, {}); }

  const std::map<Key, Ratfun>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Ratfun& c, const Key& k);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Ratfun& c, const TensorElement& x);
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

  // "c*Xp1*Ym1": X letters from A, Y letters from B.
  std::string to_string() const;

 private:
  std::map<Key, Ratfun> terms_;
};

std::string tensor_word_to_string(const Word& u, const Word& v);

// The data (T, pi, w, eta) of the twisted tensor product, with T = R (x) S and
// the generators of A first.
struct TensorData {
  Tgwd datum;
  ParameterMatrix eta;
};

class TwistedTensor {
 public:
  TwistedTensor(Construction a, Construction b, QSystem q, TensorExtension ext);

  const Construction& a() const { return a_; }
  const Construction& b() const { return b_; }
  const QSystem& q() const { return q_; }
  const TensorExtension& ext() const { return ext_; }
  const TensorData& data() const { return data_; }
  const Construction& total() const { return *total_; }
  std::size_t m() const { return a_.rank(); }
  std::size_t n() const { return b_.rank(); }

  // pi^{(alpha, beta)} on Frac(R (x) S).
  Ratfun pi(const Degree& alpha, const Degree& beta, const Ratfun& f) const;

  // tau(s Y_v (x) r X_u), a single pure tensor.
  PureTensor tau(const Ratfun& s, const Word& v, const Ratfun& r, const Word& u) const;
  TensorElement from_pure(const PureTensor& p) const;
  TensorElement normalize(const TensorElement& x) const;
  TensorElement multiply(const TensorElement& x, const TensorElement& y) const;

  // Word of T: u followed by v with indices shifted by m.
  Word total_word(const Word& u, const Word& v) const;
  TgwcElement to_total(const TensorElement& x) const;

 private:
  Construction a_, b_;
  QSystem q_;
  TensorExtension ext_;
  TensorData data_;
  std::shared_ptr<Construction> total_;
};

// Random element of degree (alpha, beta) with coefficients in R (x) S, normalized.
TensorElement random_tensor(Sampler& rng, const TwistedTensor& tt, const Degree& alpha, const Degree& beta,
                            int max_terms = 2);

TensorElement apply_tau(const TwistedTensor& tt, const Ratfun& s, const Word& v, const Ratfun& r, const Word& u);
TensorElement tensor_multiply(const TwistedTensor& tt, const TensorElement& x, const TensorElement& y);

// rho_i(t_j) = q^{+-} q^{++} t_j, sigma_j(h_i) = q^{--} q^{+-} h_i, and the
// four-scalar identity.
CheckReport check_exchange_compat(const TwistedTensor& tt);
// Extension maps are automorphisms and all of pi commutes.
CheckReport check_extension(const TwistedTensor& tt);

constexpr int default_samples = 100;

// Compares tau after multiplying in each factor with the four-step composite
// through single exchanges, on constructed and seeded random quadruples.
CheckReport check_hexagon(const TwistedTensor& tt, int samples = default_samples, std::uint64_t seed = 0);

// Builds (T, pi, w, eta) and asserts regularity and eta-consistency.
struct TensorBuild {
  TensorData data;
  CheckReport report;  // preconditions and post-assertions
};
TensorBuild build_tensor_data(const TwistedTensor& tt);

}  // namespace tgwa
