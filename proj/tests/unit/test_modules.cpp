#include "doctest.h"
#include "tgwa/exact/errors.hpp"
#include "tgwa/modules/module_checks.hpp"
#include "unit/test_data.hpp"

using namespace tgwa;
using namespace testdata;

namespace {

ModuleElement basis(const Degree& g) { return {{g, Ratfun(1)}}; }
ModuleElement vec(const Degree& g, Ratfun c) { return {{g, std::move(c)}}; }

QSystem broken_q() {
  QSystem q(1, 1);
  q.set(0, 0, {Ratfun(2), Ratfun(1), Ratfun(1), Ratfun(1)});
  return q;
}

TwistedTensor quantum_weyl_with(QSystem q) {
  Tgwd a = quantum_weyl("z1", "q1"), b = quantum_weyl("z2", "q2");
  return TwistedTensor(Construction(a, ParameterMatrix::ones(1)), Construction(b, ParameterMatrix::ones(1)), std::move(q),
                       TensorExtension::trivial(a, b));
}

}  // namespace

TEST_CASE("U over the Weyl algebra") {
  Tgwd d = weyl(1);
  auto u = build_simple(d, SimpleKind::U);
  CHECK(u->label() == "U");
  CHECK(u->contains({0}));
  CHECK(u->contains({-5}));
  CHECK_FALSE(u->contains({1}));
  // X+ kills the top vector of A/AX+.
  CHECK(act(*u, TgwcElement::letter(1), basis({0})).empty());
  // t X- = X- (t - 1), so t m_-k = -k m_-k.
  CHECK(u->weight({0})[0].second == Ratfun(0));
  CHECK(u->weight({-1})[0].second == Ratfun(-1));
  CHECK(u->weight({-3})[0].second == Ratfun(-3));
  // X+ m_-1 = X+X- m_0 = sigma(t) m_0 = -m_0.
  CHECK(act(*u, TgwcElement::letter(1), basis({-1})) == vec({0}, Ratfun(-1)));
  CHECK(act(*u, TgwcElement::letter(-1), basis({-1})) == basis({-2}));
  CHECK(act(*u, TgwcElement::scalar(Ratfun(1)), vec({-2}, Ratfun(5))) == vec({-2}, Ratfun(5)));
  CHECK(act(*u, TgwcElement::scalar(V("t1")), basis({-2})) == vec({-2}, Ratfun(-2)));
  TgwcElement down = TgwcElement::term(Ratfun(1), {-1, 1});
  for (int g = -6; g <= 0; ++g) CHECK(act(*u, down, basis({g})) == act(*u, TgwcElement::scalar(V("t1")), basis({g})));
}

TEST_CASE("V<1> and M_lambda") {
  Tgwd d = weyl(1);
  auto v = build_simple(d, SimpleKind::V);
  CHECK(v->label() == "V<1>");
  CHECK(v->total_shift() == 1);
  CHECK_FALSE(v->contains({0}));
  CHECK(v->contains({1}));
  CHECK(v->contains({4}));
  // sigma(t) = t - 1 vanishes on the generator: t = 1.
  CHECK(v->weight({1})[0].second == Ratfun(1));
  CHECK(act(*v, TgwcElement::letter(-1), basis({1})).empty());
  CHECK(act(*v, TgwcElement::letter(1), basis({1})) == basis({2}));
  // X- X+ m = t m = m at the generator.
  CHECK(act(*v, TgwcElement::letter(-1), basis({2})) == vec({1}, Ratfun(1)));

  auto m = build_simple(quantum_weyl("z", "q"), SimpleKind::M, 0, P("q"));
  CHECK(m->label() == "M_q");
  CHECK(m->weight({0})[0].second == -P("q"));
  CHECK(act(*m, TgwcElement::scalar(V("z")), basis({0})) == vec({0}, -P("q")));
  CHECK(m->contains({-100}));
  CHECK(m->contains({100}));

  auto half = build_simple(d, SimpleKind::M, 2, Ratfun(Gaussian(mpq_class(1, 2))));
  CHECK(half->label() == "M_1/2<2>");
  CHECK(half->weight({2})[0].second == Ratfun(Gaussian(mpq_class(-1, 2))));
  CHECK_NOTHROW(build_simple(d, SimpleKind::M, 0, Ratfun::i()));
}

TEST_CASE("quantum Weyl weights") {
  auto u = build_simple(quantum_weyl("z", "q"), SimpleKind::U);
  // t X- = X- sigma(t) = X- (q t + 1).
  CHECK(u->weight({-1})[0].second == Ratfun(1));
  CHECK(u->weight({-2})[0].second == P("q") + 1);
  auto v = build_simple(quantum_weyl("z", "q"), SimpleKind::V);
  CHECK(v->weight({1})[0].second == -P("q").inverse());
}

TEST_CASE("build_simple errors") {
  Tgwd d = weyl(1);
  CHECK_THROWS_AS(build_simple(d, SimpleKind::M, 0, Ratfun(2)), DomainError);
  CHECK_THROWS_AS(build_simple(d, SimpleKind::M, 0, Ratfun(-3)), DomainError);
  CHECK_THROWS_AS(build_simple(d, SimpleKind::M), DomainError);
  CHECK_THROWS_AS(build_simple(d, SimpleKind::M, 0, V("t1")), DomainError);
  CHECK_THROWS_AS(build_simple(weyl(2), SimpleKind::U), DomainError);
  Symbol t = variable("t");
  Ratfun T(t);
  Tgwd squared({t}, {RingMap({t}, {T + 1}, std::vector<Ratfun>{T - 1})}, {T * T});
  CHECK_THROWS_AS(build_simple(squared, SimpleKind::U), DomainError);
  auto u = build_simple(d, SimpleKind::U);
  CHECK_THROWS_AS(u->weight({1}), DomainError);
}

TEST_CASE("support windows") {
  Tgwd d = weyl(1);
  CHECK(support_window(*build_simple(d, SimpleKind::U), 3) == std::vector<int>{-2, -1, 0});
  CHECK(support_window(*build_simple(d, SimpleKind::V), 3) == std::vector<int>{1, 2, 3});
  CHECK(support_window(*build_simple(d, SimpleKind::M, 0, P("q")), 3) == std::vector<int>{-1, 0, 1});
}

TEST_CASE("relation annihilation") {
  for (const Tgwd& d : {weyl(1), quantum_weyl("z", "q")}) {
    Construction c(d, ParameterMatrix::ones(1));
    for (auto kind : {SimpleKind::U, SimpleKind::V}) {
      for (int s : {0, 2, -3}) CHECK(check_relation_annihilation(*build_simple(d, kind, s), c).passed());
    }
    auto r = check_relation_annihilation(*build_simple(d, SimpleKind::M, 0, P("lambda")), c);
    CHECK(r.passed());
    CHECK(r.items.size() == 4);
  }
  TwistedTensor tt = quantum_weyl_tensor();
  ModulePtr u = build_simple(tt.a().datum(), SimpleKind::U);
  ModulePtr v = build_simple(tt.b().datum(), SimpleKind::V);
  CHECK(check_relation_annihilation(TensorModule(u, v, tt.q()), tt.total()).passed());
  auto bad = check_relation_annihilation(TensorModule(u, v, QSystem(1, 1)), tt.total());
  REQUIRE_FALSE(bad.passed());
  CHECK(bad.first_failure()->name == "Xp1*Xm2 - mu12*Xm2*Xp1");
  CHECK(bad.first_failure()->indices == std::vector<int>{1, 2});
}

TEST_CASE("module axioms") {
  Construction weyl1(weyl(1), ParameterMatrix::ones(1));
  CHECK(check_module_axioms(*build_simple(weyl(1), SimpleKind::U), weyl1).passed());
  Construction qw(quantum_weyl("z", "q"), ParameterMatrix::ones(1));
  CHECK(check_module_axioms(*build_simple(quantum_weyl("z", "q"), SimpleKind::M, 1, P("lambda")), qw, 30, 5).passed());
}

TEST_CASE("tensor_act") {
  TwistedTensor tt = quantum_weyl_tensor();
  ModulePtr u = build_simple(tt.a().datum(), SimpleKind::U);
  ModulePtr v = build_simple(tt.b().datum(), SimpleKind::V);
  TensorModule tm(u, v, tt.q());
  CHECK(tm.label() == "(U (x) V<1>)");
  Ratfun lambda = P("lambda");
  ModuleElement x = basis({-2, 1});
  CHECK(tensor_act(tt, tm, TensorElement::one(), x) == x);
  // (1 (x) Y) passes w of degree -2 = d(Xm1 Xm1): q^{+-} q^{+-} = lambda^2.
  auto y = act_word(*v, Ratfun(1), {1}, basis({1}));
  REQUIRE(y.size() == 1);
  CHECK(tensor_act(tt, tm, TensorElement::term(Ratfun(1), {}, {1}), x) ==
        vec({-2, y.begin()->first[0]}, lambda * lambda * y.begin()->second));
  auto xw = act_word(*u, Ratfun(1), {1}, basis({-2}));
  REQUIRE(xw.size() == 1);
  CHECK(tensor_act(tt, tm, TensorElement::term(Ratfun(1), {1}, {}), x) ==
        vec({xw.begin()->first[0], 1}, xw.begin()->second));
  CHECK(tensor_act(tt, tm, TensorElement::term(V("z1") * V("z2"), {}, {}), x) ==
        vec({-2, 1}, u->weight({-2})[0].second * v->weight({1})[0].second));

  CHECK(check_module_axioms(tm, tt).passed());
  ModulePtr m = build_simple(tt.b().datum(), SimpleKind::M, 0, P("mu"));
  CHECK(check_module_axioms(TensorModule(u, m, tt.q()), tt, 40, 3).passed());

  TwistedTensor bad = quantum_weyl_with(broken_q());
  CHECK_FALSE(check_module_axioms(TensorModule(u, v, bad.q()), bad).passed());
  CHECK_THROWS_AS(check_module_axioms(tm, rank2_tensor()), PreconditionError);
}

TEST_CASE("twist_module_action") {
  Construction c(weyl(2), ParameterMatrix::ones(2));
  Symbol t2 = variable("t2");
  Ratfun T2(t2);
  Tgwd second({t2}, {RingMap({t2}, {T2 - 1}, std::vector<Ratfun>{T2 + 1})}, {T2});
  TensorModule m(build_simple(weyl(1), SimpleKind::U), build_simple(second, SimpleKind::M, 0, P("lambda")), QSystem(1, 1));
  REQUIRE(check_relation_annihilation(m, c).passed());

  ModuleElement x = basis({-1, -2});
  TgwcElement xp1 = TgwcElement::letter(1);
  CHECK(twist_module_action(TwistingSystemSpec::trivial(2), m, xp1, x) == act(m, xp1, x));

  ParameterMatrix a(2);
  a.set(0, 1, P("c"));
  a.set(1, 0, P("d"));
  TwistingSystemSpec spec = TwistingSystemSpec::from_matrix(a);
  TgwcElement zero_degree = TgwcElement::term(V("t1") + 3, {-2, 2});
  CHECK(twist_module_action(spec, m, zero_degree, x) == act(m, zero_degree, x));
  // chi_{(-1,-2)}(Xp1) = q_11^{(-,+)} (q_21^{(-,+)})^2 Xp1 = d^-2 Xp1.
  CHECK(twist_module_action(spec, m, xp1, x) == scale(P("d").pow(-2), act(m, xp1, x)));
  // chi_{(-1,-2)}(Xm2) = q_12^{(-,-)} q_22^{(-,-)}^2 Xm2 = c Xm2.
  CHECK(twist_module_action(spec, m, TgwcElement::letter(-2), x) == scale(P("c"), act(m, TgwcElement::letter(-2), x)));

  CHECK(check_twisted_module_axioms(m, c, spec, 40).passed());
}

TEST_CASE("equivalence elementwise") {
  TwistedTensor tt = quantum_weyl_tensor();
  ModulePtr u = build_simple(tt.a().datum(), SimpleKind::U);
  ModulePtr v = build_simple(tt.b().datum(), SimpleKind::V);
  ModulePtr m = build_simple(tt.b().datum(), SimpleKind::M, 0, P("mu"));
  auto r = check_equivalence_elementwise(tt, u, v);
  CHECK(r.passed());
  CHECK(r.items.size() == 21 + 20);
  CHECK(check_equivalence_elementwise(tt, u, m).passed());
  TwistedTensor plain = weyl_tensor();
  CHECK(check_equivalence_elementwise(plain, build_simple(plain.a().datum(), SimpleKind::M, 0, Ratfun(Gaussian(mpq_class(1, 3)))),
                                      build_simple(plain.b().datum(), SimpleKind::U))
            .passed());
  CHECK_THROWS_AS(check_equivalence_elementwise(quantum_weyl_with(broken_q()), u, v), PreconditionError);
}

TEST_CASE("u-independence") {
  CHECK(check_u_independence(lambda_q()).passed());
  CHECK(check_u_independence(lambda_q()).items.size() == 50);
  CHECK_FALSE(check_u_independence(broken_q()).passed());
}

TEST_CASE("shift coherence") {
  Tgwd d = weyl(1);
  CHECK(check_shift_coherence(d, SimpleKind::U, 3, std::nullopt).passed());
  CHECK(check_shift_coherence(d, SimpleKind::V, -2, std::nullopt).passed());
  CHECK(check_shift_coherence(quantum_weyl("z", "q"), SimpleKind::M, 1, P("lambda")).passed());
  ShiftedModule s(build_simple(d, SimpleKind::U), {2});
  CHECK(s.contains({2}));
  CHECK_FALSE(s.contains({3}));
  CHECK(act(s, TgwcElement::letter(1), basis({1})) == vec({2}, Ratfun(-1)));
}
