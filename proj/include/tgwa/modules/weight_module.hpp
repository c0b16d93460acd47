#pragma once

#include <mutex>

#include "tgwa/modules/graded_module.hpp"

namespace tgwa {

enum class SimpleKind { U, V, M };

// Graded weight modules over a rank-1 datum k[t] with t_1 = t and
// sigma(t) = a t + b:
//   U = A/AX^+, V = (A/AX^-)<1>, M_lambda = A/A(t + lambda).
// The basis is m_d = (X^+-)^|d| m_0, shifted so that M<s>_g = M_{g-s}.
class WeightModule : public GradedModule {
 public:
  WeightModule(const Tgwd& d, SimpleKind kind, int shift = 0, std::optional<Ratfun> lambda = std::nullopt);

  SimpleKind kind() const { return kind_; }
  int shift() const { return shift_; }
  int total_shift() const { return kind_ == SimpleKind::V ? shift_ + 1 : shift_; }

  std::size_t rank() const override { return 1; }
  bool contains(const Degree& g) const override;
  std::vector<std::pair<Symbol, Ratfun>> weight(const Degree& g) const override;
  std::optional<std::pair<Ratfun, Degree>> act_letter(int letter, const Degree& g) const override;
  std::string label() const override;

 private:
  bool supported(int d) const;  // unshifted degree
  Ratfun w(int d) const;         // eigenvalue of t on the unshifted m_d

  Symbol t_;
  Ratfun a_, b_;
  SimpleKind kind_;
  int shift_;
  std::optional<Ratfun> lambda_;
  Ratfun w0_;
  mutable std::mutex mutex_;
  mutable std::map<int, Ratfun> cache_;
};

std::shared_ptr<WeightModule> build_simple(const Tgwd& d, SimpleKind kind, int shift = 0,
                                           std::optional<Ratfun> lambda = std::nullopt);

// M<s> for any graded module.
class ShiftedModule : public GradedModule {
 public:
  ShiftedModule(ModulePtr inner, Degree s) : inner_(std::move(inner)), s_(std::move(s)) {}
  std::size_t rank() const override { return inner_->rank(); }
  bool contains(const Degree& g) const override { return inner_->contains(add(g, negate(s_))); }
  std::vector<std::pair<Symbol, Ratfun>> weight(const Degree& g) const override {
    return inner_->weight(add(g, negate(s_)));
  }
  std::optional<std::pair<Ratfun, Degree>> act_letter(int letter, const Degree& g) const override;
  std::string label() const override { return inner_->label() + "<" + degree_to_string(s_) + ">"; }

 private:
  ModulePtr inner_;
  Degree s_;
};

}  // namespace tgwa
