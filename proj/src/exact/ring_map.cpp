#include "tgwa/exact/ring_map.hpp"

#include <algorithm>

#include "tgwa/exact/errors.hpp"

namespace tgwa {

RingMap::RingMap(std::vector<Symbol> domain, std::vector<Ratfun> images,
                 std::optional<std::vector<Ratfun>> inverse_images)
    : domain_(std::move(domain)), images_(std::move(images)), inverse_(std::move(inverse_images)) {
  if (images_.size() != domain_.size()) throw DomainError("ring map: one image per variable required");
  if (inverse_ && inverse_->size() != domain_.size()) {
    throw DomainError("ring map: one inverse image per variable required");
  }
  for (Symbol s : domain_) {
    if (!s.is_variable()) throw DomainError("ring map: '" + s.name() + "' is not a ring variable");
  }
}

RingMap RingMap::identity(std::vector<Symbol> domain) {
  std::vector<Ratfun> images;
  for (Symbol s : domain) images.emplace_back(s);
  auto inv = images;
  return RingMap(std::move(domain), std::move(images), std::move(inv));
}

const Ratfun* RingMap::image(Symbol s) const {
  for (std::size_t k = 0; k < domain_.size(); ++k) {
    if (domain_[k] == s) return &images_[k];
  }
  return nullptr;
}

bool RingMap::is_identity() const {
  for (std::size_t k = 0; k < domain_.size(); ++k) {
    if (images_[k] != Ratfun(domain_[k])) return false;
  }
  return true;
}

Ratfun RingMap::apply(const Ratfun& p) const {
  for (Symbol s : p.symbols()) {
    if (s.is_variable() && !image(s)) {
      throw DomainError("variable '" + s.name() + "' has no image under the ring map");
    }
  }
  return substitute(p, [this](Symbol s) { return image(s); });
}

RingMap RingMap::inverse() const {
  if (!inverse_) throw PreconditionError("ring map has no inverse images");
  return RingMap(domain_, *inverse_, images_);
}

RingMap RingMap::compose(const RingMap& inner) const {
  std::vector<Ratfun> images;
  for (const auto& img : inner.images_) images.push_back(apply(img));
  std::optional<std::vector<Ratfun>> inv;
  if (inverse_ && inner.inverse_) {
    RingMap mine = inverse();
    RingMap theirs = inner.inverse();
    std::vector<Ratfun> v;
    for (Symbol x : inner.domain_) {
      const Ratfun* img = mine.image(x);
      v.push_back(theirs.apply(img ? *img : Ratfun(x)));
    }
    inv = std::move(v);
  }
  return RingMap(inner.domain_, std::move(images), std::move(inv));
}

RingMap RingMap::join(const RingMap& a, const RingMap& b) {
  std::vector<Symbol> domain = a.domain_;
  std::vector<Ratfun> images = a.images_;
  for (std::size_t k = 0; k < b.domain_.size(); ++k) {
    if (a.image(b.domain_[k])) throw DomainError("ring map join: overlapping variable '" + b.domain_[k].name() + "'");
    domain.push_back(b.domain_[k]);
    images.push_back(b.images_[k]);
  }
  std::optional<std::vector<Ratfun>> inv;
  if (a.inverse_ && b.inverse_) {
    inv = *a.inverse_;
    inv->insert(inv->end(), b.inverse_->begin(), b.inverse_->end());
  }
  return RingMap(std::move(domain), std::move(images), std::move(inv));
}

Ratfun apply_map(const RingMap& f, const Ratfun& p) { return f.apply(p); }

RingMap compose(const RingMap& f, const RingMap& g) { return f.compose(g); }

CheckItem compare_item(std::string name, std::vector<int> indices, const Ratfun& lhs, const Ratfun& rhs) {
  bool eq = lhs == rhs;
  return identity_item(std::move(name), std::move(indices), eq ? "" : lhs.to_string(),
                       eq ? "" : rhs.to_string(), eq);
}

CheckReport verify_automorphism(const RingMap& f) {
  CheckReport report;
  report.title = "automorphism";
  if (!f.has_inverse()) {
    CheckItem item;
    item.name = "inverse images";
    item.status = Status::unverifiable;
    item.detail = "no inverse images supplied";
    report.add(item);
    return report;
  }
  RingMap inv = f.inverse();
  for (std::size_t k = 0; k < f.domain().size(); ++k) {
    Symbol x = f.domain()[k];
    Ratfun gen(x);
    report.add(compare_item("f(f^-1(" + x.name() + "))", {}, f.apply(inv.apply(gen)), gen));
    report.add(compare_item("f^-1(f(" + x.name() + "))", {}, inv.apply(f.apply(gen)), gen));
  }
  return report;
}

CheckReport verify_commuting(const RingMap& f, const RingMap& g) {
  auto sorted = [](std::vector<Symbol> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(f.domain()) != sorted(g.domain())) throw DomainError("verify_commuting: maps act on different rings");
  CheckReport report;
  report.title = "commuting";
  for (Symbol x : f.domain()) {
    Ratfun gen(x);
    report.add(compare_item("f(g(" + x.name() + ")) = g(f(" + x.name() + "))", {}, f.apply(g.apply(gen)),
                            g.apply(f.apply(gen))));
  }
  return report;
}

}  // namespace tgwa
