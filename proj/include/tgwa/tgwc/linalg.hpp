#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tgwa/exact/ratfun.hpp"

namespace tgwa {

// Coordinates of a ring element over K on ring-variable monomials.
using Coords = std::map<Monomial, Ratfun>;
Coords coordinates(const Ratfun& r);

// Incremental row echelon form that remembers how each row combines the inputs.
class Echelon {
 public:
  std::size_t size() const { return inputs_; }
  // Coefficients c with v = sum c_k input_k, if v lies in the span.
  std::optional<std::vector<Ratfun>> express(const Coords& v) const;
  // Adds v as a new input when independent; returns whether it was added.
  bool insert(const Coords& v);

 private:
  struct Row {
    Coords v;
    Monomial pivot;
    std::vector<Ratfun> combo;
  };
  Coords reduce(Coords v, std::vector<Ratfun>& combo) const;
  std::vector<Row> rows_;
  std::size_t inputs_ = 0;
};

struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Ratfun> a;
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  static Matrix identity(std::size_t n);
  Ratfun& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Ratfun& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool is_zero() const;
  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Ratfun& s, const Matrix& x);
  std::string to_string() const;
};

// Univariate polynomial over K, lowest degree first.
struct UniPoly {
  std::vector<Ratfun> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Matrix evaluate(const Matrix& m) const;
  std::string to_string(const std::string& var = "x") const;
  friend bool operator==(const UniPoly& x, const UniPoly& y) { return x.c == y.c; }
};

// Monic polynomial annihilating the Krylov sequence of e_0 under m.
UniPoly krylov_polynomial(const Matrix& m);

}  // namespace tgwa
