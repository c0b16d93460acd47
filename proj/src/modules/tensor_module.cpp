#include "tgwa/modules/tensor_module.hpp"

#include "tgwa/exact/errors.hpp"

namespace tgwa {

TensorModule::TensorModule(ModulePtr m, ModulePtr n, QSystem q) : m_(std::move(m)), n_(std::move(n)), q_(std::move(q)) {
  if (q_.rows() != n_->rank() || q_.cols() != m_->rank()) {
    throw DomainError("tensor module: q-system shape does not match the factors");
  }
}

std::pair<Degree, Degree> TensorModule::split(const Degree& g) const {
  if (g.size() != rank()) throw DomainError("tensor module: degree " + degree_to_string(g) + " has the wrong rank");
  auto mid = g.begin() + static_cast<std::ptrdiff_t>(m_->rank());
  return {Degree(g.begin(), mid), Degree(mid, g.end())};
}

Degree TensorModule::join(const Degree& a, const Degree& b) const {
  Degree g = a;
  g.insert(g.end(), b.begin(), b.end());
  return g;
}

bool TensorModule::contains(const Degree& g) const {
  if (g.size() != rank()) return false;
  auto [a, b] = split(g);
  return m_->contains(a) && n_->contains(b);
}

std::vector<std::pair<Symbol, Ratfun>> TensorModule::weight(const Degree& g) const {
  auto [a, b] = split(g);
  auto out = m_->weight(a);
  auto rest = n_->weight(b);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::optional<std::pair<Ratfun, Degree>> TensorModule::act_letter(int letter, const Degree& g) const {
  auto [a, b] = split(g);
  int m = static_cast<int>(m_->rank());
  int index = static_cast<int>(letter_index(letter)) + 1;
  if (index <= m) {
    auto r = m_->act_letter(letter, a);
    if (!r) return std::nullopt;
    return std::make_pair(r->first, join(r->second, b));
  }
  int local = letter_sign(letter) * (index - m);
  auto r = n_->act_letter(local, b);
  if (!r) return std::nullopt;
  Ratfun f = q_word_scalar(q_, {local}, canonical_word(a)) * r->first;
  return std::make_pair(f, join(a, r->second));
}

ModuleElement tensor_act(const TwistedTensor& tt, const TensorModule& tm, const TensorElement& e, const ModuleElement& x) {
  ModuleElement out;
  for (const auto& [key, c] : e.terms()) {
    for (const auto& [g, v] : act_word(tm, c, tt.total_word(key.first, key.second), x)) add_to(out, g, v);
  }
  return out;
}

ModuleElement twist_module_action(const TwistingSystemSpec& spec, const GradedModule& m, const TgwcElement& a,
                                  const ModuleElement& x) {
  ModuleElement out;
  for (const auto& [g, c] : x) {
    TgwcElement twisted = spec.chi(g, a);
    for (const auto& [h, v] : act(m, twisted, ModuleElement{{g, c}})) add_to(out, h, v);
  }
  return out;
}

}  // namespace tgwa
