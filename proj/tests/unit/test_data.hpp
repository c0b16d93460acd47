#pragma once

#include <string>

#include "tgwa/tgwc/construction.hpp"
#include "tgwa/twisting/tensor.hpp"

// Small data sets built directly from their definitions, independent of the corpus.
namespace testdata {

using namespace tgwa;

inline Ratfun P(const std::string& name) { return Ratfun(parameter(name)); }
inline Ratfun V(const std::string& name) { return Ratfun(variable(name)); }

// A_n: R = k[t1..tn], sigma_i(t_j) = t_j - delta_ij, t = (t1..tn).
inline Tgwd weyl(std::size_t n, const std::string& prefix = "t") {
  std::vector<Symbol> vars;
  for (std::size_t k = 1; k <= n; ++k) vars.push_back(variable(prefix + std::to_string(k)));
  std::vector<RingMap> sigma;
  std::vector<Ratfun> t;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Ratfun> img, inv;
    for (std::size_t j = 0; j < n; ++j) {
      img.push_back(Ratfun(vars[j]) - Ratfun(i == j ? 1 : 0));
      inv.push_back(Ratfun(vars[j]) + Ratfun(i == j ? 1 : 0));
    }
    sigma.emplace_back(vars, img, inv);
    t.push_back(Ratfun(vars[i]));
  }
  return Tgwd(vars, sigma, t);
}

// R = k[h], sigma1(h) = h + 1, sigma2(h) = h - 1, t = (h, h + 1).
inline Tgwd a2() {
  Symbol h = variable("h");
  Ratfun H(h);
  return Tgwd({h}, {RingMap({h}, {H + 1}, std::vector<Ratfun>{H - 1}), RingMap({h}, {H - 1}, std::vector<Ratfun>{H + 1})},
              {H, H + 1});
}

// R = k[z], sigma(z) = q z + 1, t = z.
inline Tgwd quantum_weyl(const std::string& z, const std::string& q) {
  Symbol zs = variable(z);
  Ratfun Z(zs), Q = P(q);
  return Tgwd({zs}, {RingMap({zs}, {Q * Z + 1}, std::vector<Ratfun>{(Z - 1) / Q})}, {Z});
}

// R = k[t1, t2], sigma1(t1) = t1 + t2^2, sigma2(t2) = -t2, t = (t1, t2).
inline Tgwd rank2_example() {
  Symbol a = variable("t1"), b = variable("t2");
  Ratfun A(a), B(b);
  return Tgwd({a, b},
              {RingMap({a, b}, {A + B * B, B}, std::vector<Ratfun>{A - B * B, B}),
               RingMap({a, b}, {A, -B}, std::vector<Ratfun>{A, -B})},
              {A, B});
}

// R = k[h], rho(h) = q h, t = h.
inline Tgwd qh(const std::string& h = "h", const std::string& q = "q") {
  Symbol hs = variable(h);
  Ratfun H(hs), Q = P(q);
  return Tgwd({hs}, {RingMap({hs}, {Q * H}, std::vector<Ratfun>{H / Q})}, {H});
}

// The quantum Weyl q-system for B = A_2 over A = A_1: q^{++} = q^{--} = lambda21,
// q^{+-} = q^{-+} = lambda12, lambda12 = lambda, lambda21 = 1/lambda.
inline QSystem lambda_q() {
  QSystem q(1, 1);
  Ratfun l12 = P("lambda"), l21 = l12.inverse();
  q.set(0, 0, {l21, l12, l12, l21});
  return q;
}

inline TwistedTensor quantum_weyl_tensor() {
  Tgwd a = quantum_weyl("z1", "q1"), b = quantum_weyl("z2", "q2");
  return TwistedTensor(Construction(a, ParameterMatrix::ones(1)), Construction(b, ParameterMatrix::ones(1)), lambda_q(),
                       TensorExtension::trivial(a, b));
}

// rank2_example (x) qh with rho(t1) = -t1, rho(t2) = i t2.
inline TwistedTensor rank2_tensor() {
  Tgwd a = rank2_example(), b = qh();
  TensorExtension ext = TensorExtension::trivial(a, b);
  Symbol t1 = variable("t1"), t2 = variable("t2");
  ext.rho_on_r[0] = RingMap({t1, t2}, {-Ratfun(t1), Ratfun::i() * Ratfun(t2)},
                            std::vector<Ratfun>{-Ratfun(t1), -Ratfun::i() * Ratfun(t2)});
  QSystem q(1, 2);
  q.set(0, 0, {Ratfun(-1), Ratfun(1), Ratfun(-1), Ratfun(1)});
  q.set(0, 1, {Ratfun::i(), Ratfun(1), -Ratfun::i(), Ratfun(1)});
  return TwistedTensor(Construction(a, ParameterMatrix::ones(2)), Construction(b, ParameterMatrix::ones(1)), q, ext);
}

inline TwistedTensor weyl_tensor() {
  Tgwd a = weyl(1, "a"), b = weyl(1, "b");
  return TwistedTensor(Construction(a, ParameterMatrix::ones(1)), Construction(b, ParameterMatrix::ones(1)), QSystem(1, 1),
                       TensorExtension::trivial(a, b));
}

}  // namespace testdata
