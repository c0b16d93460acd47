#include "tgwa/tgwc/graded_map.hpp"

#include "tgwa/exact/errors.hpp"

namespace tgwa {

GradedImages identity_images(const Tgwd& d) {
  return {std::vector<Ratfun>(d.rank(), Ratfun(1)), std::vector<Ratfun>(d.rank(), Ratfun(1)),
          RingMap::identity(d.variables)};
}

TgwcElement apply_graded(const Construction& c, const GradedImages& g, const TgwcElement& e) {
  TgwcElement out;
  for (const auto& [w, coeff] : e.terms()) {
    Ratfun f = g.ring.apply(coeff);
    for (int l : w) f *= l > 0 ? g.plus[letter_index(l)] : g.minus[letter_index(l)];
    out.add_term(f, w);
  }
  return c.normal_form(out);
}

namespace {

TgwcElement gen(int l) { return TgwcElement::letter(l); }
TgwcElement ring(const Ratfun& r) { return TgwcElement::scalar(r); }

}  // namespace

CheckReport verify_graded_endomorphism(const Construction& c, const GradedImages& g) {
  const Tgwd& d = c.datum();
  std::size_t n = d.rank();
  if (g.plus.size() != n || g.minus.size() != n) throw DomainError("graded map: need one multiplier per generator");
  for (std::size_t i = 0; i < n; ++i) {
    if (g.plus[i].is_zero() || g.minus[i].is_zero() || !g.plus[i].is_scalar() || !g.minus[i].is_scalar()) {
      throw DomainError("graded map: multipliers must be nonzero scalars");
    }
  }
  CheckReport report;
  report.title = "graded endomorphism";
  // phi(lhs) and phi(rhs) are built as products of images of the factors.
  auto phi_letter = [&](int l) {
    return (l > 0 ? g.plus[letter_index(l)] : g.minus[letter_index(l)]) * gen(l);
  };
  auto phi_ring = [&](const Ratfun& r) { return ring(g.ring.apply(r)); };
  auto check = [&](std::string name, std::vector<int> idx, const TgwcElement& lhs, const TgwcElement& rhs) {
    TgwcElement diff = c.normal_form(lhs - rhs);
    CheckItem item;
    item.name = std::move(name);
    item.indices = std::move(idx);
    if (!diff.is_zero()) {
      item.status = Status::fail;
      item.detail = "relation maps to " + diff.to_string();
      item.lhs = c.normal_form(lhs).to_string();
      item.rhs = c.normal_form(rhs).to_string();
    }
    report.add(std::move(item));
  };
  for (std::size_t i = 0; i < n; ++i) {
    int p = static_cast<int>(i + 1), m = -p;
    RingMap s_inv = d.sigma[i].inverse();
    for (Symbol x : d.variables) {
      Ratfun r(x);
      check("Xp" + std::to_string(p) + "*" + x.name() + " - sigma" + std::to_string(p) + "(" + x.name() + ")*Xp" +
                std::to_string(p),
            {p}, c.multiply(phi_letter(p), phi_ring(r)), c.multiply(phi_ring(d.sigma[i].apply(r)), phi_letter(p)));
      check("Xm" + std::to_string(p) + "*" + x.name() + " - sigma" + std::to_string(p) + "^-1(" + x.name() +
                ")*Xm" + std::to_string(p),
            {p}, c.multiply(phi_letter(m), phi_ring(r)), c.multiply(phi_ring(s_inv.apply(r)), phi_letter(m)));
    }
    check("Xm" + std::to_string(p) + "*Xp" + std::to_string(p) + " - t" + std::to_string(p), {p},
          c.multiply(phi_letter(m), phi_letter(p)), phi_ring(d.t[i]));
    check("Xp" + std::to_string(p) + "*Xm" + std::to_string(p) + " - sigma" + std::to_string(p) + "(t" +
              std::to_string(p) + ")",
          {p}, c.multiply(phi_letter(p), phi_letter(m)), phi_ring(d.sigma[i].apply(d.t[i])));
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      int q = static_cast<int>(j + 1);
      check("Xp" + std::to_string(p) + "*Xm" + std::to_string(q) + " - mu" + std::to_string(p) + std::to_string(q) +
                "*Xm" + std::to_string(q) + "*Xp" + std::to_string(p),
            {p, q}, c.multiply(phi_letter(p), phi_letter(-q)),
            c.mu()(i, j) * c.multiply(phi_letter(-q), phi_letter(p)));
    }
  }
  return report;
}

}  // namespace tgwa
