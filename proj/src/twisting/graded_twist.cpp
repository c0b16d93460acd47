#include "tgwa/twisting/graded_twist.hpp"

#include "tgwa/exact/errors.hpp"

namespace tgwa {

TwistingSystemSpec::TwistingSystemSpec(QSystem q) : q_(std::move(q)) {
  if (q_.rows() != q_.cols()) throw DomainError("twisting system: q table must be square");
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) {
      const QEntry& e = q_(i, j);
      std::string at = " at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (!(e.mp * e.pp).is_one() || !(e.mm * e.pm).is_one()) {
        throw DomainError("twisting system: chi_{-e_i} is not the inverse of chi_{e_i}" + at);
      }
      if (!(e.pp * e.pm).is_one()) throw DomainError("twisting system: chi_{e_i} does not fix t_j" + at);
    }
  }
}

TwistingSystemSpec TwistingSystemSpec::from_matrix(const ParameterMatrix& a) {
  QSystem q(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      const Ratfun& x = a(i, j);
      q.set(i, j, {x, x.inverse(), x.inverse(), x});
    }
  }
  return TwistingSystemSpec(std::move(q));
}

TwistingSystemSpec TwistingSystemSpec::inverse() const {
  QSystem q(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) {
      const QEntry& e = q_(i, j);
      q.set(i, j, {e.pp.inverse(), e.pm.inverse(), e.mp.inverse(), e.mm.inverse()});
    }
  }
  return TwistingSystemSpec(std::move(q));
}

Ratfun TwistingSystemSpec::chi_scalar(const Degree& alpha, const Word& w) const {
  if (alpha.size() != rank()) throw DomainError("twisting system: degree rank mismatch");
  Ratfun out(1);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (alpha[i] == 0) continue;
    int sign = alpha[i] > 0 ? 1 : -1;
    Ratfun f(1);
    for (int l : w) f *= q_(i, letter_index(l)).get(sign, letter_sign(l));
    out *= f.pow(std::abs(alpha[i]));
  }
  return out;
}

TgwcElement TwistingSystemSpec::chi(const Degree& alpha, const TgwcElement& e) const {
  TgwcElement out;
  for (const auto& [w, c] : e.terms()) out.add_term(chi_scalar(alpha, w) * c, w);
  return out;
}

TgwcElement star_multiply(const Construction& a, const TwistingSystemSpec& spec, const TgwcElement& x,
                          const TgwcElement& y) {
  TgwcElement out;
  for (const auto& [beta, part] : homogeneous_components(y, a.rank())) out += a.multiply(spec.chi(beta, x), part);
  return out;
}

CheckReport check_star_relations(const Construction& a, const TwistingSystemSpec& spec, const ParameterMatrix& nu) {
  const Tgwd& d = a.datum();
  std::size_t m = d.rank();
  CheckReport report;
  report.title = "star relations";
  auto star = [&](const TgwcElement& x, const TgwcElement& y) { return star_multiply(a, spec, x, y); };
  // Generators X_i^+ and (X_i^-)' = q_ii^{(-,-)} X_i^-.
  auto plus = [&](std::size_t i) { return TgwcElement::letter(static_cast<int>(i + 1)); };
  auto minus = [&](std::size_t i) { return spec.q()(i, i).mm * TgwcElement::letter(-static_cast<int>(i + 1)); };
  auto check = [&](std::string name, std::vector<int> idx, const TgwcElement& lhs, const TgwcElement& rhs) {
    CheckItem item;
    item.name = std::move(name);
    item.indices = std::move(idx);
    TgwcElement l = a.normal_form(lhs), r = a.normal_form(rhs);
    if (l != r) {
      item.status = Status::fail;
      item.lhs = l.to_string();
      item.rhs = r.to_string();
    }
    report.add(std::move(item));
  };
  for (std::size_t i = 0; i < m; ++i) {
    int p = static_cast<int>(i + 1);
    RingMap inv = d.sigma[i].inverse();
    for (Symbol x : d.variables) {
      TgwcElement r = TgwcElement::scalar(Ratfun(x));
      check("Xp*r = sigma(r)*Xp", {p}, star(plus(i), r), star(TgwcElement::scalar(d.sigma[i].apply(Ratfun(x))), plus(i)));
      check("Xm'*r = sigma^-1(r)*Xm'", {p}, star(minus(i), r), star(TgwcElement::scalar(inv.apply(Ratfun(x))), minus(i)));
    }
    check("Xm'*Xp = t", {p}, star(minus(i), plus(i)), TgwcElement::scalar(d.t[i]));
    check("Xp*Xm' = sigma(t)", {p}, star(plus(i), minus(i)), TgwcElement::scalar(d.sigma[i].apply(d.t[i])));
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      check("Xp_i*Xm'_j = nu_ij*Xm'_j*Xp_i", {p, static_cast<int>(j + 1)}, star(plus(i), minus(j)),
            nu(i, j) * star(minus(j), plus(i)));
    }
  }
  return report;
}

namespace {

bool same_cartan(const CartanData& x, const CartanData& y) {
  if (x.matrix != y.matrix || x.label != y.label || x.pairs.size() != y.pairs.size()) return false;
  for (const auto& [k, v] : x.pairs) {
    auto it = y.pairs.find(k);
    if (it == y.pairs.end() || !(it->second.min_poly == v.min_poly) || it->second.basis != v.basis) return false;
  }
  return true;
}

}  // namespace

GradedTwist build_graded_twist(const Construction& a, const TwistingSystemSpec& spec) {
  std::size_t m = a.rank();
  if (spec.rank() != m) throw DomainError("graded twist: spec rank does not match the datum");
  GradedTwist out{ParameterMatrix(m), a.datum(), {}};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j) out.nu.set(i, j, a.mu()(i, j) * spec.q()(j, i).mp * spec.q()(i, j).mm);
    }
  }
  CheckReport& report = out.report;
  report.title = "graded twist";
  report.merge(check_regular(out.datum));
  report.merge(check_consistency(out.datum, out.nu));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      report.add(compare_item("nu_ij*nu_ji = mu_ij*mu_ji", {static_cast<int>(i + 1), static_cast<int>(j + 1)},
                              out.nu(i, j) * out.nu(j, i), a.mu()(i, j) * a.mu()(j, i)));
    }
  }
  CheckItem cartan;
  cartan.name = "same Cartan data";
  try {
    CartanData before = cartan_matrix(a.datum());
    CartanData after = cartan_matrix(out.datum);
    if (!same_cartan(before, after)) {
      cartan.status = Status::fail;
      cartan.lhs = cartan_to_string(before.matrix);
      cartan.rhs = cartan_to_string(after.matrix);
    }
  } catch (const NotFinitistic& e) {
    cartan.detail = std::string("both not finitistic: ") + e.what();
  }
  report.add(cartan);
  report.merge(check_star_relations(a, spec, out.nu));
  return out;
}

CocycleSpec::CocycleSpec(std::vector<std::vector<Ratfun>> c) : c_(std::move(c)) {
  for (const auto& row : c_) {
    if (row.size() != c_.size()) throw DomainError("cocycle: matrix must be square");
    for (const auto& x : row) {
      if (x.is_zero() || !x.is_scalar()) throw DomainError("cocycle: entries must be nonzero scalars");
    }
  }
}

CocycleSpec CocycleSpec::trivial(std::size_t m) {
  return CocycleSpec(std::vector<std::vector<Ratfun>>(m, std::vector<Ratfun>(m, Ratfun(1))));
}

Ratfun CocycleSpec::operator()(const Degree& alpha, const Degree& beta) const {
  if (alpha.size() != rank() || beta.size() != rank()) throw DomainError("cocycle: degree rank mismatch");
  Ratfun out(1);
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) {
      long e = static_cast<long>(alpha[i]) * beta[j];
      if (e != 0) out *= c_[i][j].pow(e);
    }
  }
  return out;
}

TwistingSystemSpec cocycle_to_spec(const CocycleSpec& c) {
  std::size_t m = c.rank();
  QSystem q(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Ratfun& x = c.matrix()[j][i];
      q.set(i, j, {x, x.inverse(), x.inverse(), x});
    }
  }
  return TwistingSystemSpec(std::move(q));
}

TgwcElement cocycle_multiply(const Construction& a, const CocycleSpec& c, const TgwcElement& x, const TgwcElement& y) {
  TgwcElement out;
  auto xs = homogeneous_components(x, a.rank());
  auto ys = homogeneous_components(y, a.rank());
  for (const auto& [alpha, xa] : xs) {
    for (const auto& [beta, yb] : ys) out += c(alpha, beta) * a.multiply(xa, yb);
  }
  return out;
}

CocycleEquivalence check_cocycle_equiv(const ParameterMatrix& mu, const ParameterMatrix& nu) {
  if (mu.size() != nu.size()) throw DomainError("cocycle equivalence: rank mismatch");
  std::size_t m = mu.size();
  CocycleEquivalence out;
  out.report.title = "cocycle equivalence";
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      out.report.add(compare_item("nu_ij*nu_ji = mu_ij*mu_ji", {static_cast<int>(i + 1), static_cast<int>(j + 1)},
                                  nu(i, j) * nu(j, i), mu(i, j) * mu(j, i)));
    }
  }
  out.equivalent = out.report.passed();
  if (!out.equivalent) return out;
  ParameterMatrix a(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) a.set(i, j, nu(i, j) / mu(i, j));
  }
  out.witness = TwistingSystemSpec::from_matrix(a);
  return out;
}

TwistingSystemSpec tensor_twisting_spec(const QSystem& q, std::size_t m, std::size_t n) {
  QSystem chi(m + n, m + n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Ratfun& x = q(i, j).pp;
      chi.set(j, m + i, {x, x.inverse(), x.inverse(), x});
    }
  }
  return TwistingSystemSpec(std::move(chi));
}

void require_collapse(const TwistedTensor& tt) {
  if (!tt.ext().is_trivial()) throw PreconditionError("compare-products: automorphisms must be extended trivially");
  for (std::size_t i = 0; i < tt.n(); ++i) {
    for (std::size_t j = 0; j < tt.m(); ++j) {
      const QEntry& e = tt.q()(i, j);
      if (e.mm != e.pp || e.pm != e.pp.inverse() || e.mp != e.pp.inverse()) {
        throw PreconditionError("compare-products: q does not satisfy q++ = q-- = (q+-)^-1 = (q-+)^-1 at (" +
                                std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
}

CheckReport compare_products(const TwistedTensor& tt, int samples, std::uint64_t seed) {
  require_collapse(tt);
  std::size_t m = tt.m(), n = tt.n();
  TwistedTensor plain(tt.a(), tt.b(), QSystem(n, m), tt.ext());
  TwistingSystemSpec spec = tensor_twisting_spec(tt.q(), m, n);
  CheckReport report;
  report.title = "twist = tensor";
  Sampler rng(seed);
  for (int k = 0; k < samples; ++k) {
    Degree a1 = rng.degree(m, 2), b1 = rng.degree(n, 2), a2 = rng.degree(m, 2), b2 = rng.degree(n, 2);
    TensorElement x = random_tensor(rng, tt, a1, b1), y = random_tensor(rng, tt, a2, b2);
    Degree total = a2;
    total.insert(total.end(), b2.begin(), b2.end());
    TensorElement chi_x;
    for (const auto& [key, c] : x.terms()) chi_x.add_term(spec.chi_scalar(total, tt.total_word(key.first, key.second)) * c, key);
    TensorElement star = plain.multiply(chi_x, y);
    TensorElement twisted = tt.multiply(x, y);
    CheckItem item;
    item.name = "sample " + std::to_string(k + 1);
    if (star != twisted) {
      item.status = Status::fail;
      item.detail = "x of degree " + degree_to_string(a1) + degree_to_string(b1) + ", y of degree " +
                    degree_to_string(a2) + degree_to_string(b2);
      item.lhs = star.to_string();
      item.rhs = twisted.to_string();
    }
    report.add(std::move(item));
  }
  return report;
}

}  // namespace tgwa
