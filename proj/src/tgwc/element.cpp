#include "tgwa/tgwc/element.hpp"

namespace tgwa {

TgwcElement TgwcElement::term(Ratfun coeff, Word w) {
  TgwcElement e;
  e.add_term(coeff, w);
  return e;
}

void TgwcElement::add_term(const Ratfun& coeff, const Word& w) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Ratfun TgwcElement::constant_part() const {
  auto it = terms_.find(Word{});
  return it == terms_.end() ? Ratfun() : it->second;
}

TgwcElement& TgwcElement::operator+=(const TgwcElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(c, w);
  return *this;
}

TgwcElement& TgwcElement::operator-=(const TgwcElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(-c, w);
  return *this;
}

TgwcElement TgwcElement::operator-() const {
  TgwcElement e;
  for (const auto& [w, c] : terms_) e.terms_.emplace(w, -c);
  return e;
}

TgwcElement operator*(const Ratfun& r, const TgwcElement& e) {
  TgwcElement out;
  if (r.is_zero()) return out;
  for (const auto& [w, c] : e.terms_) out.terms_.emplace(w, r * c);
  return out;
}

namespace {

// Sign of a single-term coefficient, so sums read "a - b" instead of "a + -b".
bool is_negative_atom(const Ratfun& c) {
  if (c.is_compound() || c.num().size() != 1) return false;
  const Gaussian& g = c.num().leading().coeff;
  if (g.is_compound()) return false;
  return g.is_real() ? sgn(g.re()) < 0 : sgn(g.im()) < 0;
}

}  // namespace

std::string render_term(const Ratfun& coeff, const std::string& word, bool first) {
  Ratfun c = coeff;
  bool negative = is_negative_atom(c);
  if (negative) c = -c;
  std::string out = first ? (negative ? "-" : "") : (negative ? " - " : " + ");
  std::string cs = c.to_string();
  if (c.is_polynomial() && c.is_compound()) cs = "(" + cs + ")";
  if (word.empty()) return out + cs;
  if (c.is_one()) return out + word;
  return out + cs + "*" + word;
}

std::string TgwcElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    out += render_term(c, w.empty() ? std::string() : word_to_string(w), first);
    first = false;
  }
  return out;
}

std::map<Degree, TgwcElement> homogeneous_components(const TgwcElement& e, std::size_t rank) {
  std::map<Degree, TgwcElement> parts;
  for (const auto& [w, c] : e.terms()) parts[degree(w, rank)].add_term(c, w);
  return parts;
}

}  // namespace tgwa
