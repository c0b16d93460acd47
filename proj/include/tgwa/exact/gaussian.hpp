#pragma once

#include <gmpxx.h>

#include <string>

namespace tgwa {

// Element of Q(i): re + im*i with exact rationals.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long n) : re_(n) {}  // NOLINT(implicit)
  Gaussian(mpq_class re, mpq_class im);
  explicit Gaussian(mpq_class re) : Gaussian(std::move(re), 0) {}

  static Gaussian i() { return Gaussian(0, 1); }
  static Gaussian fraction(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_integer() const { return is_real() && re_.get_den() == 1; }

  Gaussian operator-() const { return Gaussian(-re_, -im_); }
  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);
  Gaussian inverse() const;
  Gaussian pow(long e) const;

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

  // Plain rendering: "3/2", "-i", "1/2*i", "1 + 2*i".
  std::string to_string() const;
  // True when to_string() would need parentheses inside a product.
  bool is_compound() const { return sgn(re_) != 0 && sgn(im_) != 0; }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace tgwa
