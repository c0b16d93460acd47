#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "tgwa/tgwc/construction.hpp"

namespace tgwa {

// Coefficient of the basis vector m_gamma for each degree; every graded piece of
// the modules built here is one-dimensional.
using ModuleElement = std::map<Degree, Ratfun>;

void add_to(ModuleElement& x, const Degree& g, const Ratfun& c);
ModuleElement scale(const Ratfun& c, const ModuleElement& x);
std::string module_element_to_string(const ModuleElement& x);

class GradedModule {
 public:
  virtual ~GradedModule() = default;
  virtual std::size_t rank() const = 0;
  virtual bool contains(const Degree& g) const = 0;
  // Values of the ring variables on m_g (a weight vector).
  virtual std::vector<std::pair<Symbol, Ratfun>> weight(const Degree& g) const = 0;
  // X_letter m_g = factor * m_{g'}, or nullopt when it vanishes.
  virtual std::optional<std::pair<Ratfun, Degree>> act_letter(int letter, const Degree& g) const = 0;
  virtual std::string label() const = 0;

  // r m_g = r(weight(g)) m_g.
  Ratfun evaluate(const Ratfun& r, const Degree& g) const;
};

using ModulePtr = std::shared_ptr<const GradedModule>;

// Letters act right to left, then the coefficient acts at the final degree.
ModuleElement act_word(const GradedModule& m, const Ratfun& coeff, const Word& w, const ModuleElement& x);
ModuleElement act(const GradedModule& m, const TgwcElement& e, const ModuleElement& x);

// The first count supported degrees of a rank-1 module, ordered 0, 1, -1, 2, -2, ...
std::vector<int> support_window(const GradedModule& m, int count, int offset = 0);

}  // namespace tgwa
