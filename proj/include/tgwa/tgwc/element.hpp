#pragma once

#include <map>
#include <string>

#include "tgwa/exact/ratfun.hpp"
#include "tgwa/tgwc/word.hpp"

namespace tgwa {

// Finite sum of coefficient * X_word; coefficients multiply from the left.
class TgwcElement {
 public:
  TgwcElement() = default;
  static TgwcElement term(Ratfun coeff, Word w);
  static TgwcElement scalar(Ratfun coeff) { return term(std::move(coeff), {}); }
  static TgwcElement letter(int l) { return term(Ratfun(1), {l}); }

  const std::map<Word, Ratfun>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Ratfun& coeff, const Word& w);
  // Coefficient of the empty word.
  Ratfun constant_part() const;

  TgwcElement& operator+=(const TgwcElement& o);
  TgwcElement& operator-=(const TgwcElement& o);
  TgwcElement operator-() const;
  friend TgwcElement operator+(TgwcElement a, const TgwcElement& b) { return a += b; }
  friend TgwcElement operator-(TgwcElement a, const TgwcElement& b) { return a -= b; }
  // Left multiplication by a coefficient.
  friend TgwcElement operator*(const Ratfun& r, const TgwcElement& e);
  friend bool operator==(const TgwcElement& a, const TgwcElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const TgwcElement& a, const TgwcElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::map<Word, Ratfun> terms_;
};

// Terms grouped by word degree.
std::map<Degree, TgwcElement> homogeneous_components(const TgwcElement& e, std::size_t rank);

// Rendering helper shared with the tensor elements: "c*W", "-W", "(c)".
std::string render_term(const Ratfun& coeff, const std::string& word, bool first);

}  // namespace tgwa
