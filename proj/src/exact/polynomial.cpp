#include "tgwa/exact/polynomial.hpp"

#include <algorithm>
#include <map>

#include "tgwa/exact/errors.hpp"

namespace tgwa {

Monomial::Monomial(Symbol s, unsigned e) {
  if (e > 0) {
    factors_.emplace_back(s, e);
    degree_ = e;
  }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [s, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == s) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(s, e);
    }
    m.degree_ += e;
  }
  return m;
}

unsigned Monomial::exponent(Symbol s) const {
  for (const auto& [x, e] : factors_) {
    if (x == s) return e;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      m.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      m.factors_.push_back(*b++);
    } else {
      m.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  m.degree_ = degree_ + o.degree_;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  auto b = o.factors_.begin();
  for (const auto& [s, e] : factors_) {
    while (b != o.factors_.end() && b->first < s) ++b;
    if (b == o.factors_.end() || b->first != s || b->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  auto b = o.factors_.begin();
  for (const auto& [s, e] : factors_) {
    unsigned sub = 0;
    if (b != o.factors_.end() && b->first == s) sub = (b++)->second;
    if (e > sub) m.factors_.emplace_back(s, e - sub);
  }
  m.degree_ = degree_ - o.degree_;
  return m;
}

Monomial Monomial::without(Symbol s) const {
  Monomial m;
  for (const auto& f : factors_) {
    if (f.first == s) continue;
    m.factors_.push_back(f);
    m.degree_ += f.second;
  }
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto j = b.factors_.begin();
  for (const auto& [s, e] : a.factors_) {
    while (j != b.factors_.end() && j->first < s) ++j;
    if (j != b.factors_.end() && j->first == s) {
      unsigned k = std::min(e, j->second);
      m.factors_.emplace_back(s, k);
      m.degree_ += k;
    }
  }
  return m;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [s, e] : factors_) {
    if (!out.empty()) out += '*';
    out += s.name();
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

int compare(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
  std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& fa = a.factors_[k];
    const auto& fb = b.factors_[k];
    if (fa.first != fb.first) return fa.first < fb.first ? 1 : -1;
    if (fa.second != fb.second) return fa.second < fb.second ? -1 : 1;
  }
  return 0;
}

// ---- Polynomial ----

Polynomial::Polynomial(Gaussian c) {
  if (!c.is_zero()) terms_.push_back({Monomial(), std::move(c)});
}

Polynomial::Polynomial(Symbol s) { terms_.push_back({Monomial(s), Gaussian(1)}); }

Polynomial Polynomial::monomial(Gaussian c, Monomial m) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Gaussian Polynomial::constant_value() const {
  if (terms_.empty()) return Gaussian(0);
  if (!is_constant()) throw DomainError("polynomial is not constant: " + to_string());
  return terms_[0].coeff;
}

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_[0].mono.degree(); }

unsigned Polynomial::degree_in(Symbol s) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(s));
  return d;
}

std::vector<Symbol> Polynomial::symbols() const {
  std::vector<Symbol> out;
  for (const auto& t : terms_) {
    for (const auto& f : t.mono.factors()) out.push_back(f.first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Polynomial::has_variables() const {
  for (const auto& t : terms_) {
    for (const auto& f : t.mono.factors()) {
      if (f.first.is_variable()) return true;
    }
  }
  return false;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    int c = (i == a.end()) ? -1 : (j == b.end()) ? 1 : compare(i->mono, j->mono);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back({j->mono, subtract ? -j->coeff : j->coeff});
      ++j;
    } else {
      Gaussian s = subtract ? i->coeff - j->coeff : i->coeff + j->coeff;
      if (!s.is_zero()) out.push_back({i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a * b.constant_value();
  if (a.is_constant()) return b * a.constant_value();
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back({x.mono * y.mono, x.coeff * y.coeff});
  }
  return Polynomial::from_terms(std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Gaussian& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_[0].coeff.is_one()) return *this;
  return *this * terms_[0].coeff.inverse();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].mono != b.terms_[k].mono || a.terms_[k].coeff != b.terms_[k].coeff) return false;
  }
  return true;
}

bool Polynomial::is_compound() const {
  if (terms_.size() > 1) return true;
  if (terms_.empty()) return false;
  const Term& t = terms_[0];
  if (t.mono.is_one()) return t.coeff.is_compound();
  return false;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Gaussian c = t.coeff;
    bool negative = false;
    if (!c.is_compound()) {
      negative = c.is_real() ? sgn(c.re()) < 0 : sgn(c.im()) < 0;
      if (negative) c = -c;
    }
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string cs = c.to_string();
    if (c.is_compound() && (terms_.size() > 1 || !t.mono.is_one())) cs = "(" + cs + ")";
    if (t.mono.is_one()) {
      out += cs;
    } else if (c.is_one()) {
      out += t.mono.to_string();
    } else {
      out += cs + "*" + t.mono.to_string();
    }
  }
  return out;
}

// ---- division and gcd ----

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return Polynomial();
  if (b.is_constant()) return a * b.constant_value().inverse();
  Polynomial r = a;
  std::vector<Term> q;
  const Term& lb = b.leading();
  Gaussian lb_inv = lb.coeff.inverse();
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Term t{lr.mono / lb.mono, lr.coeff * lb_inv};
    r -= Polynomial::monomial(t.coeff, t.mono) * b;
    q.push_back(std::move(t));
  }
  return Polynomial::from_terms(std::move(q));
}

namespace {

Polynomial exact(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error("internal: inexact division " + a.to_string() + " / " + b.to_string());
  return *q;
}

// Coefficients of p viewed in x, keyed by exponent.
std::map<unsigned, Polynomial> coefficients_in(const Polynomial& p, Symbol x) {
  std::map<unsigned, std::vector<Term>> buckets;
  for (const auto& t : p.terms()) buckets[t.mono.exponent(x)].push_back({t.mono.without(x), t.coeff});
  std::map<unsigned, Polynomial> out;
  for (auto& [e, ts] : buckets) out.emplace(e, Polynomial::from_terms(std::move(ts)));
  return out;
}

Polynomial leading_coefficient_in(const Polynomial& p, Symbol x, unsigned& degree) {
  degree = p.degree_in(x);
  std::vector<Term> ts;
  for (const auto& t : p.terms()) {
    if (t.mono.exponent(x) == degree) ts.push_back({t.mono.without(x), t.coeff});
  }
  return Polynomial::from_terms(std::move(ts));
}

Polynomial content_in(const Polynomial& p, Symbol x) {
  Polynomial g;
  for (const auto& [e, c] : coefficients_in(p, x)) {
    g = gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Polynomial pseudo_remainder(Polynomial r, const Polynomial& b, Symbol x) {
  unsigned db = 0;
  Polynomial lcb = leading_coefficient_in(b, x, db);
  while (!r.is_zero()) {
    unsigned dr = 0;
    Polynomial lcr = leading_coefficient_in(r, x, dr);
    if (dr < db) break;
    r = lcb * r - lcr * Polynomial::monomial(Gaussian(1), Monomial(x, dr - db)) * b;
  }
  return r;
}

Polynomial primitive_part(const Polynomial& p, Symbol x) { return exact(p, content_in(p, x)); }

Polynomial monomial_content(const Polynomial& p) {
  Monomial m = p.leading().mono;
  for (const auto& t : p.terms()) m = Monomial::gcd(m, t.mono);
  return Polynomial::monomial(Gaussian(1), m);
}


// Dense univariate image over Q(i), lowest degree first.
using Dense = std::vector<Gaussian>;

void trim(Dense& d) {
  while (!d.empty() && d.back().is_zero()) d.pop_back();
}

Dense dense_remainder(Dense a, const Dense& b) {
  Gaussian inv = b.back().inverse();
  while (a.size() >= b.size()) {
    Gaussian f = a.back() * inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

std::size_t dense_gcd_degree(Dense a, Dense b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return std::max(a.size(), b.size()) - 1;
  while (!b.empty()) {
    Dense r = dense_remainder(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() - 1;
}

Gaussian evaluation_point(Symbol s, unsigned attempt) {
  return Gaussian(static_cast<long>((s.id() * 7919u + attempt * 104729u + 13u) % 89u) + 2);
}

// Image of p in Q(i)[x] with every other symbol evaluated.
Dense univariate_image(const Polynomial& p, Symbol x, unsigned attempt) {
  Dense d(p.degree_in(x) + 1);
  for (const auto& t : p.terms()) {
    Gaussian c = t.coeff;
    unsigned ex = 0;
    for (const auto& [s, e] : t.mono.factors()) {
      if (s == x) {
        ex = e;
      } else {
        c *= evaluation_point(s, attempt).pow(e);
      }
    }
    d[ex] += c;
  }
  return d;
}

// Certifies deg_x gcd(a, b) == 0 through one univariate image whose leading
// coefficient survives the evaluation.
bool gcd_free_of(const Polynomial& a, const Polynomial& b, Symbol x) {
  unsigned da = a.degree_in(x);
  for (unsigned attempt = 0; attempt < 3; ++attempt) {
    Dense ia = univariate_image(a, x, attempt);
    if (ia.size() != da + 1 || ia.back().is_zero()) continue;
    return dense_gcd_degree(std::move(ia), univariate_image(b, x, attempt)) == 0;
  }
  return false;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a.size() == 1 || b.size() == 1) {
    Monomial m = Monomial::gcd(monomial_content(a).leading().mono, monomial_content(b).leading().mono);
    return Polynomial::monomial(Gaussian(1), m);
  }
  Polynomial am = a.monic();
  Polynomial bm = b.monic();
  if (am == bm) return am;

  std::vector<Symbol> sa = a.symbols();
  std::vector<Symbol> sb = b.symbols();
  for (Symbol s : sa) {
    if (!std::binary_search(sb.begin(), sb.end(), s)) return gcd(content_in(a, s), b);
  }
  for (Symbol s : sb) {
    if (!std::binary_search(sa.begin(), sa.end(), s)) return gcd(a, content_in(b, s));
  }
  std::vector<Symbol> busy;
  for (Symbol s : sa) {
    if (!gcd_free_of(a, b, s)) busy.push_back(s);
  }
  if (busy.empty()) return Polynomial(1);
  Symbol x = busy.front();
  Polynomial ca = content_in(a, x);
  Polynomial cb = content_in(b, x);
  Polynomial c = gcd(ca, cb);
  Polynomial p = exact(a, ca);
  Polynomial q = exact(b, cb);
  if (p.degree_in(x) < q.degree_in(x)) std::swap(p, q);
  while (true) {
    Polynomial r = pseudo_remainder(p, q, x);
    if (r.is_zero()) break;
    if (r.degree_in(x) == 0) {
      q = Polynomial(1);
      break;
    }
    p = std::move(q);
    q = primitive_part(r, x);
  }
  return (c * q).monic();
}

}  // namespace tgwa
