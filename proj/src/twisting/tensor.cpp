#include "tgwa/twisting/tensor.hpp"

#include <algorithm>

#include "tgwa/exact/errors.hpp"
#include "tgwa/tgwc/sampling.hpp"

namespace tgwa {

TensorExtension TensorExtension::trivial(const Tgwd& a, const Tgwd& b) {
  TensorExtension ext;
  ext.rho_on_r.assign(b.rank(), RingMap::identity(a.variables));
  ext.sigma_on_s.assign(a.rank(), RingMap::identity(b.variables));
  return ext;
}

bool TensorExtension::is_trivial() const {
  auto id = [](const RingMap& f) { return f.is_identity(); };
  return std::all_of(rho_on_r.begin(), rho_on_r.end(), id) && std::all_of(sigma_on_s.begin(), sigma_on_s.end(), id);
}

TensorElement TensorElement::term(Ratfun c, Word u, Word v) {
  TensorElement x;
  x.add_term(c, {std::move(u), std::move(v)});
  return x;
}

void TensorElement::add_term(const Ratfun& c, const Key& k) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(c, k);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(-c, k);
  return *this;
}

TensorElement operator*(const Ratfun& c, const TensorElement& x) {
  TensorElement out;
  for (const auto& [k, d] : x.terms_) out.add_term(c * d, k);
  return out;
}

std::string tensor_word_to_string(const Word& u, const Word& v) {
  if (u.empty() && v.empty()) return "1";
  std::string out;
  for (int l : u) out += (out.empty() ? "" : "*") + letter_to_string(l);
  for (int l : v) out += (out.empty() ? "Y" : "*Y") + letter_to_string(l).substr(1);
  return out;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    bool unit = k.first.empty() && k.second.empty();
    out += render_term(c, unit ? std::string() : tensor_word_to_string(k.first, k.second), first);
    first = false;
  }
  return out;
}

namespace {

Degree concat(const Degree& a, const Degree& b) {
  Degree out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

TwistedTensor::TwistedTensor(Construction a, Construction b, QSystem q, TensorExtension ext)
    : a_(std::move(a)), b_(std::move(b)), q_(std::move(q)), ext_(std::move(ext)) {
  std::size_t m = a_.rank(), n = b_.rank();
  if (q_.rows() != n || q_.cols() != m) throw DomainError("tensor: q-system must be rank(B) x rank(A)");
  if (ext_.rho_on_r.size() != n || ext_.sigma_on_s.size() != m) throw DomainError("tensor: extension size mismatch");
  const Tgwd& A = a_.datum();
  const Tgwd& B = b_.datum();
  for (Symbol x : B.variables) {
    if (std::find(A.variables.begin(), A.variables.end(), x) != A.variables.end()) {
      throw DomainError("tensor: factors share the variable '" + x.name() + "'");
    }
  }
  auto same_domain = [](const RingMap& f, std::vector<Symbol> vars) {
    std::vector<Symbol> d = f.domain();
    std::sort(d.begin(), d.end());
    std::sort(vars.begin(), vars.end());
    return d == vars;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!same_domain(ext_.rho_on_r[i], A.variables)) {
      throw DomainError("tensor: rho" + std::to_string(i + 1) + " extension must act on the variables of A");
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (!same_domain(ext_.sigma_on_s[j], B.variables)) {
      throw DomainError("tensor: sigma" + std::to_string(j + 1) + " extension must act on the variables of B");
    }
  }
  std::vector<Symbol> vars = A.variables;
  vars.insert(vars.end(), B.variables.begin(), B.variables.end());
  std::vector<RingMap> pi;
  for (std::size_t j = 0; j < m; ++j) pi.push_back(RingMap::join(A.sigma[j], ext_.sigma_on_s[j]));
  for (std::size_t i = 0; i < n; ++i) pi.push_back(RingMap::join(ext_.rho_on_r[i], B.sigma[i]));
  std::vector<Ratfun> w = A.t;
  w.insert(w.end(), B.t.begin(), B.t.end());
  data_.datum = Tgwd(vars, pi, w);

  data_.eta = ParameterMatrix(m + n);
  for (std::size_t i = 0; i < m + n; ++i) {
    for (std::size_t j = 0; j < m + n; ++j) {
      if (i == j) continue;
      if (i < m && j < m) {
        data_.eta.set(i, j, a_.mu()(i, j));
      } else if (i < m) {
        data_.eta.set(i, j, q_(j - m, i).mp.inverse());
      } else if (j < m) {
        data_.eta.set(i, j, q_(i - m, j).pm);
      } else {
        data_.eta.set(i, j, b_.mu()(i - m, j - m));
      }
    }
  }
  total_ = std::make_shared<Construction>(data_.datum, data_.eta);
}

Ratfun TwistedTensor::pi(const Degree& alpha, const Degree& beta, const Ratfun& f) const {
  return total_->sigma(concat(alpha, beta), f);
}

PureTensor TwistedTensor::tau(const Ratfun& s, const Word& v, const Ratfun& r, const Word& u) const {
  Degree du = degree(u, m()), dv = degree(v, n());
  return {q_word_scalar(q_, v, u) * pi(zero_degree(m()), dv, r), u, pi(negate(du), zero_degree(n()), s), v};
}

TensorElement TwistedTensor::from_pure(const PureTensor& p) const {
  TensorElement x;
  x.add_term(p.r * pi(degree(p.u, m()), zero_degree(n()), p.s), {p.u, p.v});
  return normalize(x);
}

TensorElement TwistedTensor::normalize(const TensorElement& x) const {
  TensorElement out;
  for (const auto& [k, c] : x.terms()) {
    auto [f, w] = a_.reduce_term(Ratfun(1), k.first);
    if (f.is_zero()) continue;
    auto [g, w2] = b_.reduce_term(Ratfun(1), k.second);
    if (g.is_zero()) continue;
    out.add_term(c * f * pi(degree(w, m()), zero_degree(n()), g), {w, w2});
  }
  return out;
}

TensorElement TwistedTensor::multiply(const TensorElement& x, const TensorElement& y) const {
  TensorElement raw;
  for (const auto& [k, c] : x.terms()) {
    Degree du = degree(k.first, m()), dv = degree(k.second, n());
    for (const auto& [k2, c2] : y.terms()) {
      Word u = k.first, v = k.second;
      u.insert(u.end(), k2.first.begin(), k2.first.end());
      v.insert(v.end(), k2.second.begin(), k2.second.end());
      raw.add_term(c * pi(du, dv, c2) * q_word_scalar(q_, k.second, k2.first), {u, v});
    }
  }
  return normalize(raw);
}

Word TwistedTensor::total_word(const Word& u, const Word& v) const {
  Word w = u;
  for (int l : v) w.push_back(l > 0 ? l + static_cast<int>(m()) : l - static_cast<int>(m()));
  return w;
}

TgwcElement TwistedTensor::to_total(const TensorElement& x) const {
  TgwcElement out;
  for (const auto& [k, c] : x.terms()) out.add_term(c, total_word(k.first, k.second));
  return total_->normal_form(out);
}

TensorElement random_tensor(Sampler& rng, const TwistedTensor& tt, const Degree& alpha, const Degree& beta,
                            int max_terms) {
  TensorElement x;
  int terms = rng.uniform(1, max_terms);
  for (int k = 0; k < terms; ++k) {
    x.add_term(rng.ring_element(tt.data().datum.variables), {rng.word_of_degree(alpha), rng.word_of_degree(beta)});
  }
  return tt.normalize(x);
}

TensorElement apply_tau(const TwistedTensor& tt, const Ratfun& s, const Word& v, const Ratfun& r, const Word& u) {
  return tt.from_pure(tt.tau(s, v, r, u));
}

TensorElement tensor_multiply(const TwistedTensor& tt, const TensorElement& x, const TensorElement& y) {
  return tt.multiply(x, y);
}

CheckReport check_exchange_compat(const TwistedTensor& tt) {
  CheckReport report;
  report.title = "exchange compatibility";
  const Tgwd& A = tt.a().datum();
  const Tgwd& B = tt.b().datum();
  for (std::size_t i = 0; i < tt.n(); ++i) {
    for (std::size_t j = 0; j < tt.m(); ++j) {
      const QEntry& e = tt.q()(i, j);
      std::vector<int> idx{static_cast<int>(i + 1), static_cast<int>(j + 1)};
      report.add(compare_item("rho_i(t_j) = q+-*q++*t_j", idx, tt.ext().rho_on_r[i].apply(A.t[j]), e.pm * e.pp * A.t[j]));
      report.add(compare_item("sigma_j(h_i) = q--*q+-*h_i", idx, tt.ext().sigma_on_s[j].apply(B.t[i]),
                              e.mm * e.pm * B.t[i]));
    }
  }
  report.merge(check_four_scalar(tt.q()));
  return report;
}

CheckReport check_extension(const TwistedTensor& tt) {
  CheckReport report;
  report.title = "extensions";
  for (std::size_t i = 0; i < tt.n(); ++i) {
    CheckReport r = verify_automorphism(tt.ext().rho_on_r[i]);
    r.title = "rho" + std::to_string(i + 1) + " on R";
    report.merge(r);
  }
  for (std::size_t j = 0; j < tt.m(); ++j) {
    CheckReport r = verify_automorphism(tt.ext().sigma_on_s[j]);
    r.title = "sigma" + std::to_string(j + 1) + " on S";
    report.merge(r);
  }
  report.merge(certify_datum(tt.data().datum));
  return report;
}

namespace {

struct Quadruple {
  Ratfun s;
  Word v;
  Ratfun s2;
  Word v2;
  Ratfun r;
  Word u;
  Ratfun r2;
  Word u2;
};

// tau((s Y_v)(s' Y_v') (x) (r X_u)(r' X_u')) with both products reduced first.
TensorElement hexagon_path_products(const TwistedTensor& tt, const Quadruple& x) {
  Word vv = x.v, uu = x.u;
  vv.insert(vv.end(), x.v2.begin(), x.v2.end());
  uu.insert(uu.end(), x.u2.begin(), x.u2.end());
  auto [s, w2] = tt.b().reduce_term(x.s * tt.b().sigma(degree(x.v, tt.n()), x.s2), vv);
  auto [r, w] = tt.a().reduce_term(x.r * tt.a().sigma(degree(x.u, tt.m()), x.r2), uu);
  if (s.is_zero() || r.is_zero()) return {};
  return tt.from_pure(tt.tau(s, w2, r, w));
}

// (mu (x) mu)(id (x) tau (x) id)(tau (x) tau)(id (x) tau (x) id) on raw words.
TensorElement hexagon_path_exchanges(const TwistedTensor& tt, const Quadruple& x) {
  PureTensor p1 = tt.tau(x.s2, x.v2, x.r, x.u);
  PureTensor p2 = tt.tau(x.s, x.v, p1.r, p1.u);
  PureTensor p3 = tt.tau(p1.s, p1.v, x.r2, x.u2);
  PureTensor p4 = tt.tau(p2.s, p2.v, p3.r, p3.u);
  PureTensor out;
  out.u = p2.u;
  out.u.insert(out.u.end(), p4.u.begin(), p4.u.end());
  out.r = p2.r * tt.a().sigma(degree(p2.u, tt.m()), p4.r);
  out.v = p4.v;
  out.v.insert(out.v.end(), p3.v.begin(), p3.v.end());
  out.s = p4.s * tt.b().sigma(degree(p4.v, tt.n()), p3.s);
  return tt.from_pure(out);
}

void compare_paths(CheckReport& report, const TwistedTensor& tt, const Quadruple& x, std::string name,
                   std::vector<int> idx) {
  TensorElement lhs = hexagon_path_products(tt, x);
  TensorElement rhs = hexagon_path_exchanges(tt, x);
  CheckItem item;
  item.name = std::move(name);
  item.indices = std::move(idx);
  if (lhs != rhs) {
    item.status = Status::fail;
    item.detail = "Y_v=" + tensor_word_to_string({}, x.v) + ", Y_v'=" + tensor_word_to_string({}, x.v2) +
                  ", X_u=" + word_to_string(x.u) + ", X_u'=" + word_to_string(x.u2);
    item.lhs = lhs.to_string();
    item.rhs = rhs.to_string();
  }
  report.add(std::move(item));
}

}  // namespace

CheckReport check_hexagon(const TwistedTensor& tt, int samples, std::uint64_t seed) {
  CheckReport report;
  report.title = "hexagon";
  // Cancelling pairs on both sides: these detect an ill-defined tau.
  for (std::size_t i = 0; i < tt.n(); ++i) {
    for (std::size_t j = 0; j < tt.m(); ++j) {
      int b = static_cast<int>(i + 1), a = static_cast<int>(j + 1);
      for (int sb : {1, -1}) {
        for (int sa : {1, -1}) {
          Quadruple x{Ratfun(1), {sb * b}, Ratfun(1), {-sb * b}, Ratfun(1), {sa * a}, Ratfun(1), {-sa * a}};
          compare_paths(report, tt, x, "constructed", {b, a});
        }
      }
    }
  }
  Sampler rng(seed);
  const Tgwd& A = tt.a().datum();
  const Tgwd& B = tt.b().datum();
  for (int k = 0; k < samples; ++k) {
    Quadruple x{rng.ring_element(B.variables), rng.word(tt.n()), rng.ring_element(B.variables), rng.word(tt.n()),
                rng.ring_element(A.variables), rng.word(tt.m()), rng.ring_element(A.variables), rng.word(tt.m())};
    compare_paths(report, tt, x, "sample " + std::to_string(k + 1), {});
  }
  return report;
}

TensorBuild build_tensor_data(const TwistedTensor& tt) {
  TensorBuild out;
  CheckReport pre;
  pre.title = "preconditions";
  for (const Construction* f : {&tt.a(), &tt.b()}) {
    std::string side = f == &tt.a() ? "A " : "B ";
    CheckReport r = check_regular(f->datum());
    r.title = side + r.title;
    pre.merge(r);
    CheckReport c = check_consistency(f->datum(), f->mu());
    c.title = side + c.title;
    pre.merge(c);
  }
  pre.merge(check_exchange_compat(tt));
  pre.merge(check_extension(tt));
  if (!pre.passed()) throw PreconditionError("tensor: " + pre.summary());
  out.report = pre;
  CheckReport reg = check_regular(tt.data().datum);
  reg.title = "T " + reg.title;
  CheckReport cons = check_consistency(tt.data().datum, tt.data().eta);
  cons.title = "T " + cons.title;
  out.report.merge(reg);
  out.report.merge(cons);
  out.data = tt.data();
  return out;
}

}  // namespace tgwa
