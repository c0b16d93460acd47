#include "tgwa/twisting/qsystem.hpp"

#include "tgwa/exact/errors.hpp"
#include "tgwa/exact/ring_map.hpp"

namespace tgwa {

const Ratfun& QEntry::get(int row_sign, int col_sign) const {
  if (row_sign > 0) return col_sign > 0 ? pp : pm;
  return col_sign > 0 ? mp : mm;
}

QSystem::QSystem(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

void QSystem::set(std::size_t i, std::size_t j, QEntry e) {
  if (i >= rows_ || j >= cols_) throw DomainError("q-system index out of range");
  for (const Ratfun* x : {&e.pp, &e.pm, &e.mp, &e.mm}) {
    if (x->is_zero()) throw DomainError("q-system entries must be nonzero");
    if (!x->is_scalar()) throw DomainError("q-system entries must be scalars");
  }
  entries_[i * cols_ + j] = std::move(e);
}

bool QSystem::is_trivial() const {
  for (const auto& e : entries_) {
    if (!(e.pp.is_one() && e.pm.is_one() && e.mp.is_one() && e.mm.is_one())) return false;
  }
  return true;
}

const Ratfun& QSystem::letter_scalar(int v, int u) const {
  return (*this)(letter_index(v), letter_index(u)).get(letter_sign(v), letter_sign(u));
}

Ratfun q_word_scalar(const QSystem& q, const Word& v, const Word& u) {
  Ratfun out(1);
  for (int a : v) {
    if (letter_index(a) >= q.rows()) throw DomainError("q_word_scalar: letter out of range");
    for (int b : u) {
      if (letter_index(b) >= q.cols()) throw DomainError("q_word_scalar: letter out of range");
      out *= q.letter_scalar(a, b);
    }
  }
  return out;
}

CheckReport check_four_scalar(const QSystem& q) {
  CheckReport report;
  report.title = "four-scalar identity";
  for (std::size_t i = 0; i < q.rows(); ++i) {
    for (std::size_t j = 0; j < q.cols(); ++j) {
      const QEntry& e = q(i, j);
      report.add(compare_item("q--*q-+*q+-*q++ = 1", {static_cast<int>(i + 1), static_cast<int>(j + 1)},
                              e.mm * e.mp * e.pm * e.pp, Ratfun(1)));
    }
  }
  return report;
}

}  // namespace tgwa
