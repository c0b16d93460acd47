#include "tgwa/modules/weight_module.hpp"

#include "tgwa/exact/errors.hpp"

namespace tgwa {

namespace {

Ratfun at(const Ratfun& f, Symbol t, const Ratfun& value) {
  return substitute(f, [&](Symbol s) -> const Ratfun* { return s == t ? &value : nullptr; });
}

Symbol rank_one_variable(const Tgwd& d) {
  if (d.rank() != 1 || d.variables.size() != 1) throw DomainError("weight modules need a rank-1 datum over k[t]");
  return d.variables[0];
}

bool is_integer(const Ratfun& x) {
  return x.is_constant() && x.num().constant_value().is_integer();
}

}  // namespace

WeightModule::WeightModule(const Tgwd& d, SimpleKind kind, int shift, std::optional<Ratfun> lambda)
    : t_(rank_one_variable(d)), kind_(kind), shift_(shift), lambda_(std::move(lambda)) {
  if (d.t[0] != Ratfun(t_)) throw DomainError("weight modules need t1 to be the ring variable");
  Ratfun s = d.sigma[0].apply(Ratfun(t_));
  b_ = at(s, t_, Ratfun(0));
  a_ = at(s, t_, Ratfun(1)) - b_;
  if (a_.is_zero() || !a_.is_scalar() || !b_.is_scalar() || s != a_ * Ratfun(t_) + b_) {
    throw DomainError("weight modules need sigma(t) = a*t + b");
  }
  switch (kind_) {
    case SimpleKind::U:
      w0_ = Ratfun(0);
      break;
    case SimpleKind::V:
      w0_ = -b_ / a_;  // sigma(t) vanishes on the generator of A/AX^-
      break;
    case SimpleKind::M:
      if (!lambda_) throw DomainError("M_lambda needs lambda");
      if (!lambda_->is_scalar()) throw DomainError("lambda must be a scalar");
      if (is_integer(*lambda_)) throw DomainError("M_lambda needs lambda outside Z, got " + lambda_->to_string());
      w0_ = -*lambda_;
      break;
  }
  cache_.emplace(0, w0_);
}

bool WeightModule::supported(int d) const {
  switch (kind_) {
    case SimpleKind::U:
      return d <= 0;
    case SimpleKind::V:
      return d >= 0;
    case SimpleKind::M:
      return true;
  }
  return false;
}

Ratfun WeightModule::w(int d) const {
  std::lock_guard lock(mutex_);
  auto it = cache_.find(d);
  if (it != cache_.end()) return it->second;
  // Walk from the nearest cached degree: w(k+1) = sigma^-1(t)(w(k)), w(k-1) = sigma(t)(w(k)).
  int k = d > 0 ? cache_.rbegin()->first : cache_.begin()->first;
  Ratfun v = cache_.at(k);
  while (k != d) {
    if (d > k) {
      v = (v - b_) / a_;
      ++k;
    } else {
      v = a_ * v + b_;
      --k;
    }
    cache_.emplace(k, v);
  }
  return v;
}

bool WeightModule::contains(const Degree& g) const { return g.size() == 1 && supported(g[0] - total_shift()); }

std::vector<std::pair<Symbol, Ratfun>> WeightModule::weight(const Degree& g) const {
  if (!contains(g)) throw DomainError("weight: degree " + degree_to_string(g) + " outside the support");
  return {{t_, w(g[0] - total_shift())}};
}

std::optional<std::pair<Ratfun, Degree>> WeightModule::act_letter(int letter, const Degree& g) const {
  if (!contains(g)) throw DomainError("act: degree " + degree_to_string(g) + " outside the support");
  if (letter != 1 && letter != -1) throw DomainError("act: letter out of range");
  int d = g[0] - total_shift();
  int e = d + letter;
  if (!supported(e)) return std::nullopt;
  Ratfun f(1);
  if (letter > 0 && d < 0) f = a_ * w(e) + b_;  // X^+ X^- m_e = sigma(t) m_e
  if (letter < 0 && d > 0) f = w(e);            // X^- X^+ m_e = t m_e
  if (f.is_zero()) return std::nullopt;
  return std::make_pair(f, Degree{e + total_shift()});
}

std::string WeightModule::label() const {
  std::string base;
  switch (kind_) {
    case SimpleKind::U:
      base = "U";
      break;
    case SimpleKind::V:
      return "V<" + std::to_string(total_shift()) + ">";
    case SimpleKind::M:
      base = "M_" + (lambda_->is_compound() ? "(" + lambda_->to_string() + ")" : lambda_->to_string());
      break;
  }
  return shift_ ? base + "<" + std::to_string(shift_) + ">" : base;
}

std::shared_ptr<WeightModule> build_simple(const Tgwd& d, SimpleKind kind, int shift, std::optional<Ratfun> lambda) {
  return std::make_shared<WeightModule>(d, kind, shift, std::move(lambda));
}

std::optional<std::pair<Ratfun, Degree>> ShiftedModule::act_letter(int letter, const Degree& g) const {
  auto r = inner_->act_letter(letter, add(g, negate(s_)));
  if (r) r->second = add(r->second, s_);
  return r;
}

}  // namespace tgwa
