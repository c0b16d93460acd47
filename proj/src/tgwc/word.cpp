#include "tgwa/tgwc/word.hpp"

#include "tgwa/exact/errors.hpp"

namespace tgwa {

Degree degree(const Word& w, std::size_t rank) {
  Degree d(rank, 0);
  for (int letter : w) {
    std::size_t k = letter_index(letter);
    if (letter == 0 || k >= rank) throw DomainError("letter " + std::to_string(letter) + " out of range");
    d[k] += letter_sign(letter);
  }
  return d;
}

Degree zero_degree(std::size_t rank) { return Degree(rank, 0); }

Degree add(const Degree& a, const Degree& b) {
  if (a.size() != b.size()) throw DomainError("degree rank mismatch");
  Degree d = a;
  for (std::size_t k = 0; k < d.size(); ++k) d[k] += b[k];
  return d;
}

Degree negate(const Degree& a) {
  Degree d = a;
  for (int& x : d) x = -x;
  return d;
}

bool is_zero(const Degree& a) {
  for (int x : a) {
    if (x != 0) return false;
  }
  return true;
}

Word canonical_word(const Degree& a) {
  Word w;
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (int c = 0; c < -a[k]; ++c) w.push_back(-static_cast<int>(k + 1));
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (int c = 0; c < a[k]; ++c) w.push_back(static_cast<int>(k + 1));
  }
  return w;
}

std::string letter_to_string(int letter) {
  return std::string(letter < 0 ? "Xm" : "Xp") + std::to_string(letter_index(letter) + 1);
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int letter : w) {
    if (!out.empty()) out += '*';
    out += letter_to_string(letter);
  }
  return out;
}

std::string degree_to_string(const Degree& a) {
  std::string out = "(";
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(a[k]);
  }
  return out + ")";
}

}  // namespace tgwa
