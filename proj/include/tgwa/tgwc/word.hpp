#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tgwa {

// Signed letters: +i is X_i^+, -i is X_i^- (1-based).
using Word = std::vector<int>;
using Degree = std::vector<int>;

inline std::size_t letter_index(int letter) { return static_cast<std::size_t>(letter < 0 ? -letter : letter) - 1; }
inline int letter_sign(int letter) { return letter < 0 ? -1 : 1; }

Degree degree(const Word& w, std::size_t rank);
Degree zero_degree(std::size_t rank);
Degree add(const Degree& a, const Degree& b);
Degree negate(const Degree& a);
bool is_zero(const Degree& a);

// Minus letters ascending, then plus letters ascending: the irreducible word of degree a.
Word canonical_word(const Degree& a);

std::string letter_to_string(int letter);
std::string word_to_string(const Word& w);  // "Xp1*Xm2", "1" for the empty word
std::string degree_to_string(const Degree& a);

}  // namespace tgwa
