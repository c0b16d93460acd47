#pragma once

#include "tgwa/modules/graded_module.hpp"
#include "tgwa/twisting/graded_twist.hpp"

namespace tgwa {

// M (x) N over A (x)_tau B. A-letters act on M; a B-letter Y_v passes w in M_alpha
// through tau_M(s Y_v (x) w) = q_{(v,u)} w (x) s Y_v with u = canonical_word(alpha).
class TensorModule : public GradedModule {
 public:
  TensorModule(ModulePtr m, ModulePtr n, QSystem q);

  const GradedModule& left() const { return *m_; }
  const GradedModule& right() const { return *n_; }
  const QSystem& q() const { return q_; }

  std::size_t rank() const override { return m_->rank() + n_->rank(); }
  bool contains(const Degree& g) const override;
  std::vector<std::pair<Symbol, Ratfun>> weight(const Degree& g) const override;
  std::optional<std::pair<Ratfun, Degree>> act_letter(int letter, const Degree& g) const override;
  std::string label() const override { return "(" + m_->label() + " (x) " + n_->label() + ")"; }

  std::pair<Degree, Degree> split(const Degree& g) const;
  Degree join(const Degree& a, const Degree& b) const;

 private:
  ModulePtr m_, n_;
  QSystem q_;
};

// (c X_u (x) Y_v) acting through the words of T.
ModuleElement tensor_act(const TwistedTensor& tt, const TensorModule& tm, const TensorElement& e, const ModuleElement& x);

// a . w = chi_gamma(a) w for w of degree gamma.
ModuleElement twist_module_action(const TwistingSystemSpec& spec, const GradedModule& m, const TgwcElement& a,
                                  const ModuleElement& x);

}  // namespace tgwa
