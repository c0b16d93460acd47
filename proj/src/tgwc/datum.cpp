#include "tgwa/tgwc/datum.hpp"

#include <algorithm>

#include "tgwa/exact/errors.hpp"

namespace tgwa {

Tgwd::Tgwd(std::vector<Symbol> vars, std::vector<RingMap> autos, std::vector<Ratfun> central)
    : variables(std::move(vars)), sigma(std::move(autos)), t(std::move(central)) {
  if (sigma.size() != t.size()) throw DomainError("datum: need one automorphism per central element");
  auto sorted = [](std::vector<Symbol> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<Symbol> vs = sorted(variables);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sorted(sigma[i].domain()) != vs) {
      throw DomainError("datum: sigma" + std::to_string(i + 1) + " does not act on the declared variables");
    }
    if (!sigma[i].has_inverse()) {
      throw DomainError("datum: sigma" + std::to_string(i + 1) + " lacks inverse images");
    }
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (Symbol s : t[i].symbols()) {
      if (s.is_variable() && !std::binary_search(vs.begin(), vs.end(), s)) {
        throw DomainError("datum: t" + std::to_string(i + 1) + " uses undeclared variable '" + s.name() + "'");
      }
    }
    if (!t[i].is_polynomial() && t[i].den().has_variables()) {
      throw DomainError("datum: t" + std::to_string(i + 1) + " is not a polynomial");
    }
  }
}

ParameterMatrix::ParameterMatrix(std::size_t n) : n_(n), entries_(n * n, Ratfun(1)) {}

void ParameterMatrix::set(std::size_t i, std::size_t j, Ratfun value) {
  if (i >= n_ || j >= n_) throw DomainError("parameter matrix index out of range");
  if (value.is_zero()) throw DomainError("parameter matrix entries must be nonzero");
  if (!value.is_scalar()) throw DomainError("parameter matrix entries must be scalars");
  if (i == j) return;
  entries_[i * n_ + j] = std::move(value);
}

std::string ParameterMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

Ratfun sigma_power(const Tgwd& d, const Degree& alpha, const Ratfun& p) {
  if (alpha.size() != d.rank()) throw DomainError("sigma_power: degree rank mismatch");
  Ratfun r = p;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    RingMap f = alpha[i] > 0 ? d.sigma[i] : d.sigma[i].inverse();
    for (int k = 0; k < std::abs(alpha[i]); ++k) r = f.apply(r);
  }
  return r;
}

CheckReport check_regular(const Tgwd& d) {
  CheckReport report;
  report.title = "regularity";
  for (std::size_t i = 0; i < d.rank(); ++i) {
    CheckItem item;
    item.name = "t" + std::to_string(i + 1) + " is regular";
    item.indices = {static_cast<int>(i + 1)};
    if (d.t[i].is_zero()) {
      item.status = Status::fail;
      item.detail = "t" + std::to_string(i + 1) + " = 0";
    }
    report.add(item);
  }
  return report;
}

CheckReport check_consistency(const Tgwd& d, const ParameterMatrix& mu) {
  if (mu.size() != d.rank()) throw DomainError("check_consistency: parameter matrix size mismatch");
  CheckReport report;
  report.title = "consistency";
  std::size_t n = d.rank();
  std::vector<Ratfun> st(n);
  for (std::size_t i = 0; i < n; ++i) st[i] = d.sigma[i].apply(d.t[i]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Ratfun lhs = d.sigma[i].apply(d.sigma[j].apply(d.t[i] * d.t[j]));
      Ratfun rhs = mu(i, j) * mu(j, i) * st[i] * st[j];
      report.add(compare_item("sigma_i sigma_j(t_i t_j) = mu_ij mu_ji sigma_i(t_i) sigma_j(t_j)",
                              {static_cast<int>(i + 1), static_cast<int>(j + 1)}, lhs, rhs));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = i + 1; k < n; ++k) {
        if (i == j || k == j) continue;
        Ratfun si = d.sigma[i].apply(d.t[j]);
        Ratfun sk = d.sigma[k].apply(d.t[j]);
        Ratfun lhs = d.t[j] * d.sigma[i].apply(sk);
        report.add(compare_item("t_j sigma_i sigma_k(t_j) = sigma_i(t_j) sigma_k(t_j)",
                                {static_cast<int>(i + 1), static_cast<int>(j + 1), static_cast<int>(k + 1)}, lhs,
                                si * sk));
      }
    }
  }
  return report;
}

CheckReport certify_datum(const Tgwd& d) {
  CheckReport report;
  report.title = "automorphisms";
  for (std::size_t i = 0; i < d.rank(); ++i) {
    CheckReport a = verify_automorphism(d.sigma[i]);
    a.title = "sigma" + std::to_string(i + 1);
    report.merge(a);
  }
  for (std::size_t i = 0; i < d.rank(); ++i) {
    for (std::size_t j = i + 1; j < d.rank(); ++j) {
      CheckReport c = verify_commuting(d.sigma[i], d.sigma[j]);
      c.title = "sigma" + std::to_string(i + 1) + " sigma" + std::to_string(j + 1);
      report.merge(c);
    }
  }
  return report;
}

}  // namespace tgwa
