#pragma once

#include "tgwa/modules/tensor_module.hpp"
#include "tgwa/modules/weight_module.hpp"

namespace tgwa {

constexpr int default_window_radius = 8;

// Every defining relation of C, acting by its raw words, annihilates each basis
// vector of degree in [-radius, radius]^rank.
CheckReport check_relation_annihilation(const GradedModule& m, const Construction& c,
                                        int radius = default_window_radius);

// (ab)x = a(bx) and 1x = x on seeded random elements and vectors.
CheckReport check_module_axioms(const GradedModule& m, const Construction& c, int samples = default_samples,
                                std::uint64_t seed = 0);
// The same over A (x)_tau B with products from tensor_multiply.
CheckReport check_module_axioms(const TensorModule& m, const TwistedTensor& tt, int samples = default_samples,
                                std::uint64_t seed = 0);
// (a * b).x = a.(b.x) for the twisted action and the star product.
CheckReport check_twisted_module_axioms(const GradedModule& m, const Construction& c, const TwistingSystemSpec& spec,
                                        int samples = default_samples, std::uint64_t seed = 0);

// Twisted action of lt(A (x) B) on lt(M (x) N) against the tau_M action of
// A (x)_tau B, over all words of length <= 2 on a window of count x count degrees
// plus seeded random elements.
CheckReport check_equivalence_elementwise(const TwistedTensor& tt, ModulePtr m, ModulePtr n, int count = 6,
                                          int samples = 20, std::uint64_t seed = 0);

// q_{(v,u)} = q_{(v,u')} whenever d(u) = d(u').
CheckReport check_u_independence(const QSystem& q, int samples = 50, std::uint64_t seed = 0);

// build_simple(kind, s) against build_simple(kind, 0) shifted by s.
CheckReport check_shift_coherence(const Tgwd& d, SimpleKind kind, int shift, std::optional<Ratfun> lambda,
                                  int radius = default_window_radius);

}  // namespace tgwa
