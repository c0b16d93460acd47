#pragma once

#include <optional>
#include <vector>

#include "tgwa/exact/check_report.hpp"
#include "tgwa/exact/ratfun.hpp"

namespace tgwa {

// Endomorphism of K[domain] given by images of the domain variables.
// Parameters are fixed. Inverse images, when present, certify an automorphism.
class RingMap {
 public:
  RingMap() = default;
  RingMap(std::vector<Symbol> domain, std::vector<Ratfun> images,
          std::optional<std::vector<Ratfun>> inverse_images = std::nullopt);
  static RingMap identity(std::vector<Symbol> domain);

  const std::vector<Symbol>& domain() const { return domain_; }
  const std::vector<Ratfun>& images() const { return images_; }
  const std::optional<std::vector<Ratfun>>& inverse_images() const { return inverse_; }
  bool has_inverse() const { return inverse_.has_value(); }
  const Ratfun* image(Symbol s) const;
  bool is_identity() const;

  Ratfun apply(const Ratfun& p) const;
  RingMap inverse() const;                    // requires inverse images
  RingMap compose(const RingMap& inner) const;  // this ∘ inner
  // Joins maps on disjoint variable sets into one map on the union.
  static RingMap join(const RingMap& a, const RingMap& b);

 private:
  std::vector<Symbol> domain_;
  std::vector<Ratfun> images_;
  std::optional<std::vector<Ratfun>> inverse_;
};

Ratfun apply_map(const RingMap& f, const Ratfun& p);
RingMap compose(const RingMap& f, const RingMap& g);
CheckReport verify_automorphism(const RingMap& f);
CheckReport verify_commuting(const RingMap& f, const RingMap& g);

CheckItem compare_item(std::string name, std::vector<int> indices, const Ratfun& lhs, const Ratfun& rhs);

}  // namespace tgwa
