#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tgwa/modules/module_checks.hpp"

namespace tgwa::corpus {

// A_n: R = k[t1..tn], sigma_i(t_j) = t_j - delta_ij, t_i = t_i.
Tgwd weyl(std::size_t n, const std::string& prefix = "t");
// R = k[h], sigma1(h) = h + 1, sigma2(h) = h - 1, t = (h, h + 1).
Tgwd a2();
// R = k[z], sigma(z) = q z + 1, t = z.
Tgwd quantum_weyl(const std::string& z, const std::string& q);
// R = k[t1, t2], sigma1: t1 -> t1 + t2^2, sigma2: t2 -> -t2, t = (t1, t2).
Tgwd rank2_example();
// R = k[h], sigma(h) = q h, t = h.
Tgwd qh(const std::string& h = "h", const std::string& q = "q");

// Rank-1 over rank-1 q-system with q^{++} = q^{--} = lambda^-1, q^{+-} = q^{-+} = lambda.
QSystem lambda_q(const std::string& lambda = "lambda");

// a1 (x) b1 with the trivial q-system.
TwistedTensor weyl_tensor();
// quantum_weyl(z1, q1) (x)_tau quantum_weyl(z2, q2) with lambda_q().
TwistedTensor quantum_weyl_tensor();
// rank2_example (x)_tau qh with rho(t1) = -t1, rho(t2) = i t2.
TwistedTensor rank2_tensor();

struct PaperExample {
  std::string id;
  std::string quote;
  std::function<CheckReport()> run;
};

// Every worked example of the paper that the library can reproduce.
std::vector<PaperExample> paper_examples();

}  // namespace tgwa::corpus
