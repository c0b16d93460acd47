#include "doctest.h"
#include "tgwa/twisting/graded_twist.hpp"
#include "unit/test_data.hpp"

using namespace tgwa;
using namespace testdata;

namespace {

TensorElement T(Ratfun c, Word u, Word v) { return TensorElement::term(std::move(c), std::move(u), std::move(v)); }

QSystem generic_q(std::size_t rows, std::size_t cols) {
  QSystem q(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::string s = std::to_string(i + 1) + std::to_string(j + 1);
      q.set(i, j, {P("qpp" + s), P("qpm" + s), P("qmp" + s), P("qmm" + s)});
    }
  }
  return q;
}

}  // namespace

TEST_CASE("q_word_scalar") {
  QSystem q = generic_q(2, 2);
  CHECK(q_word_scalar(q, {}, {1, -2}) == Ratfun(1));
  CHECK(q_word_scalar(q, {1}, {}) == Ratfun(1));
  CHECK(q_word_scalar(q, {1}, {1, -2}) == P("qpp11") * P("qpm12"));
  CHECK(q_word_scalar(q, {-2, 1}, {2}) == P("qmp22") * P("qpp12"));
  CHECK(q_word_scalar(QSystem(2, 3), {1, -2, 2}, {3, -1}) == Ratfun(1));
  Sampler rng(5);
  for (int k = 0; k < 30; ++k) {
    Word v = rng.word(2), v2 = rng.word(2), u = rng.word(2), u2 = rng.word(2);
    Word uu = u, vv = v;
    uu.insert(uu.end(), u2.begin(), u2.end());
    vv.insert(vv.end(), v2.begin(), v2.end());
    CHECK(q_word_scalar(q, v, uu) == q_word_scalar(q, v, u) * q_word_scalar(q, v, u2));
    CHECK(q_word_scalar(q, vv, u) == q_word_scalar(q, v, u) * q_word_scalar(q, v2, u));
  }
}

TEST_CASE("exchange compatibility") {
  CHECK(check_exchange_compat(quantum_weyl_tensor()).passed());
  TwistedTensor r = rank2_tensor();
  CheckReport ok = check_exchange_compat(r);
  CHECK(ok.passed());
  CHECK(check_extension(r).passed());

  Tgwd a = rank2_example(), b = qh();
  TwistedTensor bad(Construction(a, ParameterMatrix::ones(2)), Construction(b, ParameterMatrix::ones(1)), QSystem(1, 2),
                    r.ext());
  CheckReport rep = check_exchange_compat(bad);
  REQUIRE_FALSE(rep.passed());
  CHECK(rep.first_failure()->indices == std::vector<int>{1, 1});
  CHECK(rep.first_failure()->lhs == "-t1");
}

TEST_CASE("apply_tau") {
  TwistedTensor r = rank2_tensor();
  CHECK(apply_tau(r, 1, {}, 1, {}) == TensorElement::one());
  Ratfun t1 = V("t1"), t2 = V("t2"), h = V("h");
  // tau(Y+ (x) t_j) = q+- q++ t_j (x) Y+
  CHECK(apply_tau(r, 1, {1}, t1, {}) == T(-t1, {}, {1}));
  CHECK(apply_tau(r, 1, {1}, t2, {}) == T(Ratfun::i() * t2, {}, {1}));
  // tau(Y- (x) X1+) = q-+ X1+ (x) Y-
  CHECK(apply_tau(r, 1, {-1}, 1, {1}) == T(-1, {1}, {-1}));
  // degree zero pairs just swap
  CHECK(apply_tau(r, h, {}, t1 * t2, {}) == T(h * t1 * t2, {}, {}));
  QSystem q = generic_q(1, 1);
  Tgwd wa = weyl(1, "a"), wb = weyl(1, "b");
  TwistedTensor g(Construction(wa, ParameterMatrix::ones(1)), Construction(wb, ParameterMatrix::ones(1)), q,
                  TensorExtension::trivial(wa, wb));
  CHECK(apply_tau(g, 1, {-1}, 1, {1}) == T(P("qmp11"), {1}, {-1}));
}

TEST_CASE("hexagon") {
  CHECK(check_hexagon(weyl_tensor(), 40).passed());
  CHECK(check_hexagon(quantum_weyl_tensor(), 40).passed());
  CHECK(check_hexagon(rank2_tensor(), 40).passed());
  Tgwd a = weyl(1, "a"), b = weyl(1, "b");
  QSystem q(1, 1);
  q.set(0, 0, {Ratfun(2), Ratfun(1), Ratfun(1), Ratfun(1)});
  TwistedTensor bad(Construction(a, ParameterMatrix::ones(1)), Construction(b, ParameterMatrix::ones(1)), q,
                    TensorExtension::trivial(a, b));
  CHECK_FALSE(check_four_scalar(q).passed());
  CheckReport rep = check_hexagon(bad, 10);
  REQUIRE_FALSE(rep.passed());
  CHECK(rep.first_failure()->name == "constructed");
}

TEST_CASE("build_tensor_data") {
  TensorBuild w = build_tensor_data(weyl_tensor());
  CHECK(w.report.passed());
  CHECK(w.data.eta == ParameterMatrix::ones(2));
  Ratfun a1 = V("a1"), b1 = V("b1");
  CHECK(w.data.datum.sigma[0].apply(a1) == a1 - 1);
  CHECK(w.data.datum.sigma[0].apply(b1) == b1);
  CHECK(w.data.datum.sigma[1].apply(b1) == b1 - 1);
  CHECK(w.data.datum.t == std::vector<Ratfun>{a1, b1});

  TensorBuild q = build_tensor_data(quantum_weyl_tensor());
  CHECK(q.report.passed());
  // eta_12 = (q_{21}^{(-,+)})^-1 = lambda21, eta_21 = q_{21}^{(+,-)} = lambda12.
  CHECK(q.data.eta(0, 1) == P("lambda").inverse());
  CHECK(q.data.eta(1, 0) == P("lambda"));

  TensorBuild r = build_tensor_data(rank2_tensor());
  CHECK(r.report.passed());
  CHECK(r.data.eta(0, 2) == Ratfun(-1));
  CHECK(r.data.eta(1, 2) == Ratfun::i());
  CHECK(r.data.eta(2, 0) == Ratfun(1));
  CartanData c = cartan_matrix(r.data.datum);
  CHECK(c.label == "(A1)^3");

  Tgwd a = weyl(1, "a"), b = weyl(1, "b");
  QSystem bad(1, 1);
  bad.set(0, 0, {Ratfun(2), Ratfun(1), Ratfun(1), Ratfun(1)});
  TwistedTensor t(Construction(a, ParameterMatrix::ones(1)), Construction(b, ParameterMatrix::ones(1)), bad,
                  TensorExtension::trivial(a, b));
  CHECK_THROWS_AS(build_tensor_data(t), PreconditionError);
  CHECK_THROWS_AS(TwistedTensor(Construction(a, ParameterMatrix::ones(1)), Construction(a, ParameterMatrix::ones(1)),
                                QSystem(1, 1), TensorExtension::trivial(a, a)),
                  DomainError);
}

TEST_CASE("tensor_multiply examples") {
  TwistedTensor q = quantum_weyl_tensor();
  Ratfun l12 = P("lambda");
  // (1 (x) Y)(X (x) 1) = q_{(v,u)} X (x) Y
  CHECK(tensor_multiply(q, T(1, {}, {-1}), T(1, {1}, {})) == T(l12, {1}, {-1}));
  CHECK(tensor_multiply(q, T(1, {1}, {}), T(1, {}, {-1})) == T(1, {1}, {-1}));
  CHECK(tensor_multiply(q, T(1, {}, {-1}), T(1, {}, {1})) == T(V("z2"), {}, {}));
  TensorElement x = T(V("z1") + V("z2"), {-1}, {1});
  CHECK(tensor_multiply(q, TensorElement::one(), x) == x);
  CHECK(tensor_multiply(q, x, TensorElement::one()) == x);
}

TEST_CASE("quantum Weyl relations") {
  TwistedTensor tt = quantum_weyl_tensor();
  Ratfun l12 = P("lambda"), l21 = l12.inverse();
  Ratfun qs[2] = {P("q1"), P("q2")};
  auto x = [](int i) { return i == 1 ? T(1, {1}, {}) : T(1, {}, {1}); };
  auto y = [](int i) { return i == 1 ? T(1, {-1}, {}) : T(1, {}, {-1}); };
  auto lam = [&](int i, int j) { return i == j ? Ratfun(1) : (i == 1 ? l12 : l21); };
  auto mul = [&](const TensorElement& a, const TensorElement& b) { return tensor_multiply(tt, a, b); };
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      if (i == j) continue;
      CHECK((mul(x(i), x(j)) - lam(i, j) * mul(x(j), x(i))).is_zero());
      CHECK((mul(x(i), y(j)) - lam(j, i) * mul(y(j), x(i))).is_zero());
      CHECK((mul(y(j), y(i)) - lam(j, i) * mul(y(i), y(j))).is_zero());
      CHECK((mul(x(j), y(i)) - lam(i, j) * mul(y(i), x(j))).is_zero());
    }
  }
  for (int j = 1; j <= 2; ++j) {
    CHECK((mul(x(j), y(j)) - qs[j - 1] * mul(y(j), x(j)) - TensorElement::one()).is_zero());
  }
}

TEST_CASE("tensor product properties") {
  for (const TwistedTensor& tt : {weyl_tensor(), quantum_weyl_tensor(), rank2_tensor()}) {
    Sampler rng(11);
    for (int k = 0; k < 15; ++k) {
      Degree a1 = rng.degree(tt.m(), 1), b1 = rng.degree(tt.n(), 1), a2 = rng.degree(tt.m(), 1), b2 = rng.degree(tt.n(), 1);
      TensorElement x = random_tensor(rng, tt, a1, b1), y = random_tensor(rng, tt, a2, b2);
      TensorElement z = random_tensor(rng, tt, rng.degree(tt.m(), 1), rng.degree(tt.n(), 1), 1);
      TensorElement xy = tt.multiply(x, y);
      CHECK(tt.multiply(xy, z) == tt.multiply(x, tt.multiply(y, z)));
      for (const auto& [key, c] : xy.terms()) {
        CHECK(degree(key.first, tt.m()) == add(a1, a2));
        CHECK(degree(key.second, tt.n()) == add(b1, b2));
      }
      // The product agrees with the rewrite engine of (T, pi, w, eta).
      CHECK(tt.to_total(xy) == tt.total().multiply(tt.to_total(x), tt.to_total(y)));
    }
  }
}

TEST_CASE("twisting system spec") {
  TwistingSystemSpec trivial = TwistingSystemSpec::trivial(2);
  Construction a(a2(), ParameterMatrix::ones(2));
  GradedTwist g = build_graded_twist(a, trivial);
  CHECK(g.nu == a.mu());
  CHECK(g.report.passed());

  ParameterMatrix m(2);
  Ratfun c = P("c");
  m.set(0, 1, c);  // q_12^{--} = c, q_21^{-+} = 1
  TwistingSystemSpec spec = TwistingSystemSpec::from_matrix(m);
  CHECK(spec.q()(1, 0).mp * spec.q()(0, 1).mm == c);
  GradedTwist g2 = build_graded_twist(a, spec);
  CHECK(g2.nu(0, 1) == c * a.mu()(0, 1));
  CHECK(g2.nu(1, 0) == c.inverse());
  CHECK(g2.report.passed());
  GradedTwist back = build_graded_twist(Construction(g2.datum, g2.nu), spec.inverse());
  CHECK(back.nu == a.mu());

  QSystem bad(1, 1);
  bad.set(0, 0, {Ratfun(2), Ratfun(1), Ratfun(1), Ratfun(1)});
  CHECK_THROWS_AS(TwistingSystemSpec{bad}, DomainError);
  CHECK_THROWS_AS(build_graded_twist(a, TwistingSystemSpec::trivial(3)), DomainError);
}

TEST_CASE("star product") {
  Construction a(a2(), ParameterMatrix::ones(2));
  ParameterMatrix m(2);
  m.set(0, 1, P("c"));
  m.set(1, 0, P("d"));
  TwistingSystemSpec spec = TwistingSystemSpec::from_matrix(m);
  TgwcElement xp1 = TgwcElement::letter(1), xm2 = TgwcElement::letter(-2);
  CHECK(star_multiply(a, spec, xp1, TgwcElement::scalar(1)) == xp1);
  CHECK(star_multiply(a, spec, TgwcElement::scalar(1), xm2) == xm2);
  // X1+ * X2- = chi_{-e2}(X1+) X1+X2- = q_21^{(-,+)} X1+X2-
  CHECK(star_multiply(a, spec, xp1, xm2) == spec.q()(1, 0).mp * a.multiply(xp1, xm2));
  CHECK(star_multiply(a, TwistingSystemSpec::trivial(2), xp1, xm2) == a.multiply(xp1, xm2));

  Sampler rng(3);
  for (int k = 0; k < 20; ++k) {
    TgwcElement x = rng.element(a.datum(), 2, 3, 1), y = rng.element(a.datum(), 2, 3, 1), z = rng.element(a.datum(), 2, 3, 1);
    CHECK(star_multiply(a, spec, star_multiply(a, spec, x, y), z) ==
          star_multiply(a, spec, x, star_multiply(a, spec, y, z)));
  }
}

TEST_CASE("cocycles") {
  CHECK(cocycle_to_spec(CocycleSpec::trivial(2)).q().is_trivial());
  Ratfun l = P("lambda");
  TwistingSystemSpec s = cocycle_to_spec(CocycleSpec({{l}}));
  CHECK(s.chi_scalar({1}, {1}) == l);
  CHECK(s.chi_scalar({1}, {-1}) == l.inverse());

  CocycleSpec c({{P("c11"), P("c12")}, {P("c21"), Ratfun(3)}});
  Sampler rng(8);
  for (int k = 0; k < 20; ++k) {
    Degree x = rng.degree(2, 3), y = rng.degree(2, 3), z = rng.degree(2, 3);
    CHECK(c(x, add(y, z)) * c(y, z) == c(add(x, y), z) * c(x, y));
  }
  Construction a(a2(), ParameterMatrix::ones(2));
  TwistingSystemSpec cs = cocycle_to_spec(c);
  for (int k = 0; k < 20; ++k) {
    TgwcElement x = rng.homogeneous(a.datum(), rng.degree(2, 1)), y = rng.homogeneous(a.datum(), rng.degree(2, 1));
    CHECK(star_multiply(a, cs, x, y) == cocycle_multiply(a, c, x, y));
  }
  CHECK_THROWS_AS(CocycleSpec({{Ratfun(0)}}), DomainError);
}

TEST_CASE("cocycle equivalence") {
  ParameterMatrix mu = ParameterMatrix::ones(2);
  CocycleEquivalence same = check_cocycle_equiv(mu, mu);
  CHECK(same.equivalent);
  CHECK(same.witness->q().is_trivial());

  ParameterMatrix nu(2);
  nu.set(0, 1, P("nu"));
  nu.set(1, 0, P("nu").inverse());
  CocycleEquivalence e = check_cocycle_equiv(mu, nu);
  REQUIRE(e.equivalent);
  Construction a(a2(), mu);
  CHECK(build_graded_twist(a, *e.witness).nu == nu);

  ParameterMatrix bad(2);
  bad.set(0, 1, 2);
  CocycleEquivalence n = check_cocycle_equiv(mu, bad);
  CHECK_FALSE(n.equivalent);
  CHECK_FALSE(n.witness.has_value());
  CHECK_THROWS_AS(check_cocycle_equiv(mu, ParameterMatrix(3)), DomainError);
}

TEST_CASE("compare products") {
  CHECK(compare_products(weyl_tensor(), 20).passed());
  CHECK(compare_products(quantum_weyl_tensor(), 30).passed());
  CHECK_THROWS_AS(compare_products(rank2_tensor(), 5), PreconditionError);
}
