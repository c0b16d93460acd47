#include "tgwa/tgwc/linalg.hpp"

#include "tgwa/exact/errors.hpp"
#include "tgwa/tgwc/element.hpp"

namespace tgwa {

Coords coordinates(const Ratfun& r) {
  if (r.den().has_variables()) throw DomainError("coordinates: not a polynomial in the ring variables");
  std::map<Monomial, std::vector<Term>> parts;
  for (const auto& t : r.num().terms()) {
    std::vector<Monomial::Factor> vars, params;
    for (const auto& f : t.mono.factors()) (f.first.is_variable() ? vars : params).push_back(f);
    parts[Monomial::from_factors(vars)].push_back({Monomial::from_factors(params), t.coeff});
  }
  Coords out;
  for (auto& [m, ts] : parts) {
    Ratfun c = Ratfun::fraction(Polynomial::from_terms(std::move(ts)), r.den());
    if (!c.is_zero()) out.emplace(m, std::move(c));
  }
  return out;
}

namespace {

void axpy(Coords& y, const Ratfun& s, const Coords& x) {
  for (const auto& [m, c] : x) {
    auto it = y.find(m);
    if (it == y.end()) {
      y.emplace(m, s * c);
    } else {
      it->second += s * c;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

}  // namespace

Coords Echelon::reduce(Coords v, std::vector<Ratfun>& combo) const {
  combo.assign(inputs_, Ratfun());
  for (const auto& row : rows_) {
    auto it = v.find(row.pivot);
    if (it == v.end()) continue;
    Ratfun f = it->second;
    axpy(v, -f, row.v);
    for (std::size_t k = 0; k < row.combo.size(); ++k) combo[k] += f * row.combo[k];
  }
  return v;
}

std::optional<std::vector<Ratfun>> Echelon::express(const Coords& v) const {
  std::vector<Ratfun> combo;
  if (!reduce(v, combo).empty()) return std::nullopt;
  return combo;
}

bool Echelon::insert(const Coords& v) {
  std::vector<Ratfun> combo;
  Coords r = reduce(v, combo);
  if (r.empty()) return false;
  // r = input_new - sum combo_k input_k
  for (auto& c : combo) c = -c;
  combo.push_back(Ratfun(1));
  ++inputs_;
  for (auto& row : rows_) row.combo.resize(inputs_);
  Monomial pivot = r.rbegin()->first;
  Ratfun inv = r.rbegin()->second.inverse();
  for (auto& [m, c] : r) c *= inv;
  for (auto& c : combo) c *= inv;
  rows_.push_back({std::move(r), pivot, std::move(combo)});
  return true;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Ratfun(1);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw DomainError("matrix shape mismatch");
  Matrix m(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < y.cols; ++j) m(i, j) += x(i, k) * y(k, j);
    }
  }
  return m;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw DomainError("matrix shape mismatch");
  Matrix m = x;
  for (std::size_t k = 0; k < m.a.size(); ++k) m.a[k] += y.a[k];
  return m;
}

Matrix operator*(const Ratfun& s, const Matrix& x) {
  Matrix m = x;
  for (auto& v : m.a) v *= s;
  return m;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

Matrix UniPoly::evaluate(const Matrix& m) const {
  Matrix acc(m.rows, m.cols);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * m + *it * Matrix::identity(m.rows);
  return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    std::string power = k == 0 ? "" : k == 1 ? var : var + "^" + std::to_string(k);
    out += render_term(c[k], power, out.empty());
  }
  return out.empty() ? "0" : out;
}

UniPoly krylov_polynomial(const Matrix& m) {
  std::size_t n = m.rows;
  // Dense echelon rows with their combinations of the Krylov vectors.
  struct Row {
    std::vector<Ratfun> v;
    std::size_t pivot;
    std::vector<Ratfun> combo;
  };
  std::vector<Row> rows;
  std::vector<Ratfun> v(n);
  if (n > 0) v[0] = Ratfun(1);
  for (std::size_t step = 0;; ++step) {
    std::vector<Ratfun> r = v;
    std::vector<Ratfun> combo(step);
    for (const auto& row : rows) {
      if (r[row.pivot].is_zero()) continue;
      Ratfun f = r[row.pivot];
      for (std::size_t k = 0; k < n; ++k) r[k] -= f * row.v[k];
      for (std::size_t k = 0; k < row.combo.size(); ++k) combo[k] += f * row.combo[k];
    }
    std::size_t pivot = 0;
    while (pivot < n && r[pivot].is_zero()) ++pivot;
    if (pivot == n) {
      // v_step = sum combo_k v_k
      UniPoly p;
      for (auto& x : combo) p.c.push_back(-x);
      p.c.push_back(Ratfun(1));
      return p;
    }
    for (auto& x : combo) x = -x;
    combo.push_back(Ratfun(1));
    Ratfun inv = r[pivot].inverse();
    for (auto& x : r) x *= inv;
    for (auto& x : combo) x *= inv;
    for (auto& row : rows) row.combo.resize(step + 1);
    rows.push_back({std::move(r), pivot, std::move(combo)});
    std::vector<Ratfun> w(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) w[i] += m(i, j) * v[j];
    }
    v = std::move(w);
  }
}

}  // namespace tgwa
