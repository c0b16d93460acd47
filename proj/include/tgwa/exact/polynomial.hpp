#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgwa/exact/gaussian.hpp"
#include "tgwa/exact/symbol.hpp"

namespace tgwa {

// Power product, factors sorted by symbol id.
class Monomial {
 public:
  using Factor = std::pair<Symbol, unsigned>;

  Monomial() = default;
  explicit Monomial(Symbol s, unsigned e = 1);
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  unsigned exponent(Symbol s) const;
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires o.divides(*this)
  Monomial without(Symbol s) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  // Graded lex: total degree first, then lex with lower ids larger.
  friend int compare(const Monomial& a, const Monomial& b);
  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

struct Term {
  Monomial mono;
  Gaussian coeff;
};

// Sparse polynomial over Q(i); terms strictly descending, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Gaussian c);  // NOLINT(implicit)
  Polynomial(long c) : Polynomial(Gaussian(c)) {}  // NOLINT(implicit)
  explicit Polynomial(Symbol s);
  static Polynomial monomial(Gaussian c, Monomial m);
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one(); }
  Gaussian constant_value() const;  // requires is_constant()
  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const;
  unsigned degree_in(Symbol s) const;
  std::vector<Symbol> symbols() const;
  bool has_variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Gaussian& c);
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Gaussian& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string() const;
  // True when the rendering is not a single factor (needs parentheses in a product).
  bool is_compound() const;

 private:
  std::vector<Term> terms_;
};

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace tgwa
