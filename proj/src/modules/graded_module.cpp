#include "tgwa/modules/graded_module.hpp"

#include <algorithm>

namespace tgwa {

void add_to(ModuleElement& x, const Degree& g, const Ratfun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.emplace(g, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) x.erase(it);
}

ModuleElement scale(const Ratfun& c, const ModuleElement& x) {
  ModuleElement out;
  for (const auto& [g, a] : x) add_to(out, g, c * a);
  return out;
}

std::string module_element_to_string(const ModuleElement& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : x) {
    out += render_term(c, "m" + degree_to_string(g), first);
    first = false;
  }
  return out;
}

Ratfun GradedModule::evaluate(const Ratfun& r, const Degree& g) const {
  if (r.is_scalar()) return r;
  auto values = weight(g);
  return substitute(r, [&](Symbol s) -> const Ratfun* {
    for (const auto& [x, v] : values) {
      if (x == s) return &v;
    }
    return nullptr;
  });
}

ModuleElement act_word(const GradedModule& m, const Ratfun& coeff, const Word& w, const ModuleElement& x) {
  ModuleElement out;
  for (const auto& [g0, c] : x) {
    Degree g = g0;
    Ratfun f = c;
    bool zero = false;
    for (auto it = w.rbegin(); it != w.rend() && !zero; ++it) {
      auto step = m.act_letter(*it, g);
      if (!step) {
        zero = true;
      } else {
        f *= step->first;
        g = step->second;
      }
    }
    if (!zero) add_to(out, g, m.evaluate(coeff, g) * f);
  }
  return out;
}

ModuleElement act(const GradedModule& m, const TgwcElement& e, const ModuleElement& x) {
  ModuleElement out;
  for (const auto& [w, c] : e.terms()) {
    for (const auto& [g, a] : act_word(m, c, w, x)) add_to(out, g, a);
  }
  return out;
}

std::vector<int> support_window(const GradedModule& m, int count, int offset) {
  std::vector<int> out;
  for (int k = 0; static_cast<int>(out.size()) < count && k < 8 * count + 8; ++k) {
    int d = offset + (k % 2 ? (k + 1) / 2 : -(k / 2));
    if (m.contains({d})) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tgwa
