#pragma once

#include <string>
#include <vector>

#include "tgwa/exact/check_report.hpp"
#include "tgwa/exact/ratfun.hpp"
#include "tgwa/tgwc/word.hpp"

namespace tgwa {

// q^{(+,+)}, q^{(+,-)}, q^{(-,+)}, q^{(-,-)}; the first sign belongs to the row index.
struct QEntry {
  Ratfun pp{1}, pm{1}, mp{1}, mm{1};
  const Ratfun& get(int row_sign, int col_sign) const;
  friend bool operator==(const QEntry& a, const QEntry& b) {
    return a.pp == b.pp && a.pm == b.pm && a.mp == b.mp && a.mm == b.mm;
  }
};

// rows x cols table of QEntry, 0-based. For a twisting map B (x) A -> A (x) B the
// rows index the generators of B and the columns those of A.
class QSystem {
 public:
  QSystem(std::size_t rows = 0, std::size_t cols = 0);
  static QSystem trivial(std::size_t rows, std::size_t cols) { return QSystem(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const QEntry& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
  void set(std::size_t i, std::size_t j, QEntry e);
  bool is_trivial() const;

  // q_{v,u} for single letters: v a row letter, u a column letter.
  const Ratfun& letter_scalar(int v, int u) const;

  friend bool operator==(const QSystem& a, const QSystem& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<QEntry> entries_;
};

// q_{(v,u)} = prod_{k,l} q_{v_k,u_l}.
Ratfun q_word_scalar(const QSystem& q, const Word& v, const Word& u);

// q^{--} q^{-+} q^{+-} q^{++} = 1 for every entry.
CheckReport check_four_scalar(const QSystem& q);

}  // namespace tgwa
