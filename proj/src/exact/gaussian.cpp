#include "tgwa/exact/gaussian.hpp"

#include "tgwa/exact/errors.hpp"

namespace tgwa {

Gaussian::Gaussian(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Gaussian Gaussian::fraction(long num, long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return Gaussian(q, 0);
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian Gaussian::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (sgn(im_) == 0) return Gaussian(1 / re_, 0);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Gaussian(re_ / norm, -im_ / norm);
}

Gaussian& Gaussian::operator/=(const Gaussian& o) { return *this *= o.inverse(); }

Gaussian Gaussian::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Gaussian result(1);
  Gaussian base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Gaussian::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string im;
  if (im_ == 1) {
    im = "i";
  } else if (im_ == -1) {
    im = "-i";
  } else {
    im = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return im;
  if (sgn(im_) < 0) return re_.get_str() + " - " + im.substr(1);
  return re_.get_str() + " + " + im;
}

}  // namespace tgwa
