#include "tgwa/tgwc/cartan.hpp"

#include "tgwa/exact/errors.hpp"

namespace tgwa {

FinitisticResult finitistic_data(const Tgwd& d, std::size_t i, std::size_t j, std::size_t bound) {
  if (i >= d.rank() || j >= d.rank()) throw DomainError("finitistic_data: index out of range");
  if (i == j) throw DomainError("finitistic_data: requires i != j");
  const RingMap& s = d.sigma[i];
  RingMap s_inv = s.inverse();
  FinitisticResult result;
  Echelon echelon;
  std::vector<Ratfun> basis;
  auto insert = [&](const Ratfun& v) {
    if (!echelon.insert(coordinates(v))) return false;
    basis.push_back(v);
    return true;
  };
  if (!d.t[j].is_zero()) {
    insert(d.t[j]);
    Ratfun forward = d.t[j], backward = d.t[j];
    bool fwd_open = true, bwd_open = true;
    while (fwd_open || bwd_open) {
      if (fwd_open) {
        forward = s.apply(forward);
        fwd_open = insert(forward);
      }
      if (bwd_open) {
        backward = s_inv.apply(backward);
        bwd_open = insert(backward);
      }
      if (basis.size() > bound) {
        result.explored = basis.size();
        return result;
      }
    }
  }
  FinitisticData data;
  std::size_t n = basis.size();
  data.restriction = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto combo = echelon.express(coordinates(s.apply(basis[k])));
    if (!combo) throw Error("internal: span not closed under sigma");
    for (std::size_t r = 0; r < n; ++r) data.restriction(r, k) = (*combo)[r];
  }
  // The span is cyclic over K[sigma] with generator t_j (the first basis vector),
  // so the Krylov polynomial of e_0 is the minimal polynomial.
  data.min_poly = krylov_polynomial(data.restriction);
  if (data.min_poly.degree() != static_cast<int>(n)) throw Error("internal: span is not cyclic");
  data.basis = std::move(basis);
  result.finitistic = true;
  result.explored = n;
  result.data = std::move(data);
  return result;
}

std::string classify_cartan(const std::vector<std::vector<int>>& c) {
  std::size_t n = c.size();
  bool diagonal = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && c[i][j] != 0) diagonal = false;
    }
  }
  if (diagonal) return n == 1 ? "A1" : "(A1)^" + std::to_string(n);
  if (n == 2 && c[0][1] == -1 && c[1][0] == -1) return "A2";
  return "unclassified";
}

std::string cartan_to_string(const std::vector<std::vector<int>>& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < c[i].size(); ++j) out += (j ? ", " : "") + std::to_string(c[i][j]);
    out += "]";
  }
  return out + "]";
}

CartanData cartan_matrix(const Tgwd& d, std::size_t bound) {
  std::size_t n = d.rank();
  CartanData cd;
  cd.matrix.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    cd.matrix[i][i] = 2;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      FinitisticResult r = finitistic_data(d, i, j, bound);
      if (!r.finitistic) {
        throw NotFinitistic("not finitistic within bound " + std::to_string(bound) + " at (" +
                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
      cd.matrix[i][j] = 1 - r.data->min_poly.degree();
      cd.pairs.emplace(std::make_pair(i, j), std::move(*r.data));
    }
  }
  cd.label = classify_cartan(cd.matrix);
  return cd;
}

}  // namespace tgwa
