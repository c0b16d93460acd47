#pragma once

#include <optional>

#include "tgwa/tgwc/cartan.hpp"
#include "tgwa/twisting/tensor.hpp"

namespace tgwa {

// chi_{e_i}(X_j^+-) = q_ij^{(+,+-)} X_j^+-, chi_{-e_i}(X_j^+-) = q_ij^{(-,+-)} X_j^+-,
// chi_alpha identity on R. Construction rejects q unless chi_{-e_i} = chi_{e_i}^-1
// and chi_{e_i} fixes every t_j, i.e. q^{-+}q^{++} = q^{--}q^{+-} = q^{++}q^{+-} = 1.
class TwistingSystemSpec {
 public:
  explicit TwistingSystemSpec(QSystem q);
  static TwistingSystemSpec trivial(std::size_t m) { return TwistingSystemSpec(QSystem(m, m)); }
  // pp = mm = a_ij, pm = mp = a_ij^-1.
  static TwistingSystemSpec from_matrix(const ParameterMatrix& a);

  const QSystem& q() const { return q_; }
  std::size_t rank() const { return q_.rows(); }
  TwistingSystemSpec inverse() const;

  // chi_alpha(X_w) = scalar * X_w.
  Ratfun chi_scalar(const Degree& alpha, const Word& w) const;
  TgwcElement chi(const Degree& alpha, const TgwcElement& e) const;

 private:
  QSystem q_;
};

struct GradedTwist {
  ParameterMatrix nu;
  Tgwd datum;
  CheckReport report;  // post-assertions
};

// nu_ij = mu_ij q_ji^{(-,+)} q_ij^{(-,-)}; the twisted datum is (R, chi^-1 sigma, t),
// which equals (R, sigma, t) since chi fixes R.
GradedTwist build_graded_twist(const Construction& a, const TwistingSystemSpec& spec);

// a * b = chi_beta(a) b, split into homogeneous parts of b.
TgwcElement star_multiply(const Construction& a, const TwistingSystemSpec& spec, const TgwcElement& x,
                          const TgwcElement& y);

// The relations of C_nu(R, sigma, t) for the star-product generators.
CheckReport check_star_relations(const Construction& a, const TwistingSystemSpec& spec, const ParameterMatrix& nu);

// Bicharacter ct(alpha, beta) = prod c_ij^{alpha_i beta_j}, diagonal included.
class CocycleSpec {
 public:
  explicit CocycleSpec(std::vector<std::vector<Ratfun>> c);
  static CocycleSpec trivial(std::size_t m);
  std::size_t rank() const { return c_.size(); }
  const std::vector<std::vector<Ratfun>>& matrix() const { return c_; }
  Ratfun operator()(const Degree& alpha, const Degree& beta) const;

 private:
  std::vector<std::vector<Ratfun>> c_;
};

// chi_alpha(x) = ct(beta, alpha) x for x of degree beta.
TwistingSystemSpec cocycle_to_spec(const CocycleSpec& c);

struct CocycleEquivalence {
  bool equivalent = false;
  std::optional<TwistingSystemSpec> witness;
  CheckReport report;
};
CocycleEquivalence check_cocycle_equiv(const ParameterMatrix& mu, const ParameterMatrix& nu);

// a * b = ct(alpha, beta) ab.
TgwcElement cocycle_multiply(const Construction& a, const CocycleSpec& c, const TgwcElement& x, const TgwcElement& y);

// Star product on lt(A (x) B) under chi_{(alpha,beta)} against the tau product.
CheckReport compare_products(const TwistedTensor& tt, int samples = default_samples, std::uint64_t seed = 0);
// The twisting system of the plain tensor product induced by q (rank m + n).
TwistingSystemSpec tensor_twisting_spec(const QSystem& q, std::size_t m, std::size_t n);
void require_collapse(const TwistedTensor& tt);

}  // namespace tgwa
