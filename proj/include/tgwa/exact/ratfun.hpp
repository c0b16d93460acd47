#pragma once

#include <functional>
#include <string>

#include "tgwa/exact/polynomial.hpp"

namespace tgwa {

// Reduced fraction of polynomials over Q(i). Denominator is monic under the
// graded-lex order; zero is 0/1. Used for scalars (parameters only), ring
// elements, and the localized coefficients of the rewrite engine.
class Ratfun {
 public:
  Ratfun() : den_(1) {}
  Ratfun(long c) : num_(c), den_(1) {}  // NOLINT(implicit)
  Ratfun(Gaussian c) : num_(std::move(c)), den_(1) {}  // NOLINT(implicit)
  Ratfun(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(implicit)
  explicit Ratfun(Symbol s) : num_(s), den_(1) {}
  static Ratfun fraction(Polynomial num, Polynomial den);
  static Ratfun i() { return Ratfun(Gaussian::i()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  // Free of ring variables: an element of the coefficient field K.
  bool is_scalar() const { return !num_.has_variables() && !den_.has_variables(); }
  std::vector<Symbol> symbols() const;

  Ratfun operator-() const;
  Ratfun inverse() const;
  Ratfun pow(long e) const;
  Ratfun& operator+=(const Ratfun& o);
  Ratfun& operator-=(const Ratfun& o);
  Ratfun& operator*=(const Ratfun& o);
  Ratfun& operator/=(const Ratfun& o);

  friend Ratfun operator+(Ratfun a, const Ratfun& b) { return a += b; }
  friend Ratfun operator-(Ratfun a, const Ratfun& b) { return a -= b; }
  friend Ratfun operator*(Ratfun a, const Ratfun& b) { return a *= b; }
  friend Ratfun operator/(Ratfun a, const Ratfun& b) { return a /= b; }
  friend bool operator==(const Ratfun& a, const Ratfun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Ratfun& a, const Ratfun& b) { return !(a == b); }

  // Parseable rendering: "t - 1", "(q)/(q - 1)".
  std::string to_string() const;
  bool is_compound() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

using Scalar = Ratfun;
using RingElement = Ratfun;

enum class ArithOp { add, sub, mul, div };
Ratfun scalar_arith(const Ratfun& a, const Ratfun& b, ArithOp op);

// Substitutes images for symbols; symbols mapped to nullptr stay fixed.
using ImageLookup = std::function<const Ratfun*(Symbol)>;
Ratfun substitute(const Ratfun& f, const ImageLookup& image);

}  // namespace tgwa
