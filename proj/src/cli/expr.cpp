#include "tgwa/cli/expr.hpp"

#include <cctype>
#include <climits>
#include <regex>

namespace tgwa::cli {

ParseError::ParseError(const std::string& msg, Position p, std::string tok)
    : Error("line " + std::to_string(p.line) + ", column " + std::to_string(p.column) + ": " + msg +
            (tok.empty() ? std::string() : " '" + tok + "'")),
      at(p),
      token(std::move(tok)),
      message(msg) {}

bool is_generator_name(std::string_view name) {
  static const std::regex re("X[pm][1-9][0-9]*");
  return std::regex_match(name.begin(), name.end(), re);
}

namespace {

enum class Tok { number, ident, op, end };

struct Token {
  Tok kind;
  std::string text;
  int offset;
};

class Parser {
 public:
  Parser(std::string_view text, const Scope& scope, Position origin, bool generators)
      : text_(text), scope_(scope), origin_(origin), generators_(generators) {
    lex();
  }

  TgwcElement parse() {
    TgwcElement e = expr();
    if (peek().kind != Tok::end) fail("unexpected token", peek());
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const Token& t) const {
    Position p = origin_;
    for (int k = 0; k < t.offset; ++k) {
      if (text_[static_cast<std::size_t>(k)] == '\n') {
        ++p.line;
        p.column = 1;
      } else {
        ++p.column;
      }
    }
    if (t.kind == Tok::end) throw ParseError(msg + " at end of input", p, "");
    throw ParseError(msg, p, t.text);
  }

  void lex() {
    std::size_t k = 0;
    while (k < text_.size()) {
      char c = text_[k];
      int at = static_cast<int>(k);
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++k;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = k;
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        toks_.push_back({Tok::number, std::string(text_.substr(k, j - k)), at});
        k = j;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = k;
        while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
        toks_.push_back({Tok::ident, std::string(text_.substr(k, j - k)), at});
        k = j;
      } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
        toks_.push_back({Tok::op, std::string(1, c), at});
        ++k;
      } else {
        fail("unexpected character", {Tok::op, std::string(1, c), at});
      }
    }
    toks_.push_back({Tok::end, "", static_cast<int>(text_.size())});
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool accept(const char* op) {
    if (peek().kind == Tok::op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }

  // (c1 X_u)(c2 X_v) = c1 sigma^{d(u)}(c2) X_{uv}
  TgwcElement times(const TgwcElement& a, const TgwcElement& b) const {
    TgwcElement out;
    for (const auto& [u, c1] : a.terms()) {
      for (const auto& [v, c2] : b.terms()) {
        Ratfun c = u.empty() ? c2 : sigma_power(*scope_.datum, degree(u, scope_.datum->rank()), c2);
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        out.add_term(c1 * c, w);
      }
    }
    return out;
  }

  static bool is_coefficient(const TgwcElement& e) {
    return e.terms().empty() || (e.terms().size() == 1 && e.terms().begin()->first.empty());
  }

  TgwcElement expr() {
    TgwcElement e = term();
    while (true) {
      if (accept("+")) {
        e += term();
      } else if (accept("-")) {
        e -= term();
      } else {
        return e;
      }
    }
  }

  TgwcElement term() {
    TgwcElement e = unary();
    while (true) {
      if (accept("*")) {
        e = times(e, unary());
      } else if (peek().kind == Tok::op && peek().text == "/") {
        Token slash = take();
        TgwcElement d = unary();
        if (!is_coefficient(d)) fail("division by a generator", slash);
        Ratfun c = d.constant_part();
        if (c.is_zero()) fail("division by zero", slash);
        e = is_coefficient(e) ? TgwcElement::scalar(e.constant_part() / c) : times(e, TgwcElement::scalar(c.inverse()));
      } else {
        return e;
      }
    }
  }

  TgwcElement unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return power();
  }

  long exponent() {
    bool paren = accept("(");
    bool negative = accept("-");
    const Token& t = peek();
    if (t.kind != Tok::number) fail("expected an integer exponent", t);
    take();
    if (t.text.size() > 6) fail("exponent too large", t);
    long e = std::stol(t.text);
    if (paren && !accept(")")) fail("expected ')'", peek());
    return negative ? -e : e;
  }

  TgwcElement power() {
    TgwcElement base = atom();
    if (peek().kind == Tok::op && peek().text == "^") {
      Token caret = take();
      long e = exponent();
      if (is_coefficient(base)) {
        Ratfun c = base.constant_part();
        if (e < 0 && c.is_zero()) fail("division by zero", caret);
        return TgwcElement::scalar(c.pow(e));
      }
      if (e < 0) fail("negative power of a generator", caret);
      TgwcElement out = TgwcElement::scalar(Ratfun(1));
      for (long k = 0; k < e; ++k) out = times(out, base);
      return out;
    }
    return base;
  }

  TgwcElement atom() {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      take();
      if (t.text.size() > 18) return TgwcElement::scalar(Ratfun(Gaussian(mpq_class(t.text))));
      return TgwcElement::scalar(Ratfun(std::stol(t.text)));
    }
    if (t.kind == Tok::ident) {
      take();
      if (t.text == "i") return TgwcElement::scalar(Ratfun::i());
      auto it = scope_.symbols.find(t.text);
      if (it != scope_.symbols.end()) return TgwcElement::scalar(Ratfun(it->second));
      if (is_generator_name(t.text)) {
        if (!generators_ || !scope_.datum) fail("generator not allowed here", t);
        long k = std::stol(t.text.substr(2));
        if (k > static_cast<long>(scope_.datum->rank())) fail("generator index out of range", t);
        int letter = static_cast<int>(k) * (t.text[1] == 'p' ? 1 : -1);
        return TgwcElement::letter(letter);
      }
      fail("undeclared symbol", t);
    }
    if (accept("(")) {
      TgwcElement e = expr();
      if (!accept(")")) fail("expected ')'", peek());
      return e;
    }
    fail("unexpected token", t);
  }

  std::string_view text_;
  const Scope& scope_;
  Position origin_;
  bool generators_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Ratfun parse_ratfun(std::string_view text, const Scope& scope, Position origin) {
  TgwcElement e = Parser(text, scope, origin, false).parse();
  return e.constant_part();
}

TgwcElement parse_tgwc(std::string_view text, const Scope& scope, Position origin) {
  if (!scope.datum) throw DomainError("parse_tgwc needs a datum");
  return Parser(text, scope, origin, true).parse();
}

}  // namespace tgwa::cli
