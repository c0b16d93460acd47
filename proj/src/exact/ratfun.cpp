#include "tgwa/exact/ratfun.hpp"

#include <algorithm>
#include <map>

#include "tgwa/exact/errors.hpp"

namespace tgwa {
namespace {

Polynomial quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_one()) return a;
  auto q = divide_exact(a, b);
  if (!q) throw Error("internal: inexact division in fraction reduction");
  return *q;
}

}  // namespace

Ratfun Ratfun::fraction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero();
  Ratfun r;
  if (num.is_zero()) return r;
  if (!den.is_constant()) {
    Polynomial g = gcd(num, den);
    if (!g.is_one()) {
      num = quotient(num, g);
      den = quotient(den, g);
    }
  }
  Gaussian lc = den.leading().coeff;
  if (!lc.is_one()) {
    Gaussian inv = lc.inverse();
    num *= inv;
    den *= inv;
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

std::vector<Symbol> Ratfun::symbols() const {
  std::vector<Symbol> a = num_.symbols();
  std::vector<Symbol> b = den_.symbols();
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

Ratfun Ratfun::operator-() const {
  Ratfun r = *this;
  r.num_ = -r.num_;
  return r;
}

Ratfun Ratfun::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Ratfun r;
  Gaussian inv = num_.leading().coeff.inverse();
  r.num_ = den_ * inv;
  r.den_ = num_ * inv;
  return r;
}

Ratfun Ratfun::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Ratfun r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;
}

Ratfun& Ratfun::operator+=(const Ratfun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    Polynomial n = num_ + o.num_;
    if (den_.is_one()) {
      num_ = std::move(n);
      return *this;
    }
    return *this = fraction(std::move(n), den_);
  }
  // Henrici: only the common part g of the denominators can cancel.
  Polynomial g = gcd(den_, o.den_);
  Polynomial d1 = quotient(o.den_, g);
  Polynomial d2 = quotient(den_, g);
  Polynomial n = num_ * d1 + o.num_ * d2;
  if (n.is_zero()) return *this = Ratfun();
  Polynomial d = den_ * d1;
  if (!g.is_one()) {
    Polynomial h = gcd(n, g);
    if (!h.is_one()) {
      n = quotient(n, h);
      d = quotient(d, h);
    }
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

Ratfun& Ratfun::operator-=(const Ratfun& o) { return *this += -o; }

Ratfun& Ratfun::operator*=(const Ratfun& o) {
  if (is_zero() || o.is_zero()) return *this = Ratfun();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  Polynomial g1 = gcd(num_, o.den_);
  Polynomial g2 = gcd(o.num_, den_);
  Polynomial n = quotient(num_, g1) * quotient(o.num_, g2);
  Polynomial d = quotient(den_, g2) * quotient(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

Ratfun& Ratfun::operator/=(const Ratfun& o) { return *this *= o.inverse(); }

bool Ratfun::is_compound() const {
  if (!den_.is_one()) return true;
  return num_.is_compound();
}

std::string Ratfun::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Ratfun scalar_arith(const Ratfun& a, const Ratfun& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw Error("unknown arithmetic operation");
}

namespace {

struct Substituter {
  const ImageLookup& image;
  std::map<std::pair<std::uint32_t, unsigned>, Polynomial> num_pow;
  std::map<std::pair<std::uint32_t, unsigned>, Polynomial> den_pow;

  const Polynomial& power(bool numerator, Symbol s, const Polynomial& base, unsigned e) {
    auto& cache = numerator ? num_pow : den_pow;
    auto key = std::make_pair(s.id(), e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Polynomial p = e == 1 ? base : power(numerator, s, base, e - 1) * base;
    return cache.emplace(key, std::move(p)).first->second;
  }

  Ratfun apply(const Polynomial& p) {
    // Common denominator: each fractional image's denominator to its max exponent.
    std::map<Symbol, unsigned> max_exp;
    for (const auto& t : p.terms()) {
      for (const auto& [s, e] : t.mono.factors()) {
        const Ratfun* img = image(s);
        if (img && !img->is_polynomial()) {
          unsigned& m = max_exp[s];
          m = std::max(m, e);
        }
      }
    }
    Polynomial total;
    for (const auto& t : p.terms()) {
      std::vector<Monomial::Factor> fixed;
      Polynomial prod(t.coeff);
      for (const auto& [s, e] : t.mono.factors()) {
        const Ratfun* img = image(s);
        if (!img) {
          fixed.emplace_back(s, e);
          continue;
        }
        prod *= power(true, s, img->num(), e);
      }
      for (const auto& [s, m] : max_exp) {
        unsigned e = t.mono.exponent(s);
        if (m > e) prod *= power(false, s, image(s)->den(), m - e);
      }
      if (!fixed.empty()) prod *= Polynomial::monomial(Gaussian(1), Monomial::from_factors(std::move(fixed)));
      total += prod;
    }
    if (max_exp.empty()) return Ratfun(std::move(total));
    Polynomial den(1);
    for (const auto& [s, m] : max_exp) den *= power(false, s, image(s)->den(), m);
    return Ratfun::fraction(std::move(total), std::move(den));
  }
};

}  // namespace

Ratfun substitute(const Ratfun& f, const ImageLookup& image) {
  Substituter sub{image, {}, {}};
  Ratfun n = sub.apply(f.num());
  if (f.is_polynomial()) return n;
  return n / sub.apply(f.den());
}

}  // namespace tgwa
