#include "tgwa/corpus/corpus.hpp"

namespace tgwa::corpus {

namespace {

Ratfun P(const std::string& name) { return Ratfun(parameter(name)); }
Ratfun V(const std::string& name) { return Ratfun(variable(name)); }

CheckItem check(std::string name, bool ok, const std::string& lhs = "", const std::string& rhs = "") {
  return identity_item(std::move(name), {}, lhs, rhs, ok);
}

CheckItem same(std::string name, const std::string& lhs, const std::string& rhs) {
  return identity_item(std::move(name), {}, lhs, rhs, lhs == rhs);
}

CheckReport single(std::string title, CheckItem item) {
  CheckReport r{std::move(title), {}};
  r.add(std::move(item));
  return r;
}

CheckReport titled(std::string title, CheckReport r) {
  r.title = std::move(title);
  return r;
}

TensorElement T(Ratfun c, Word u, Word v) { return TensorElement::term(std::move(c), std::move(u), std::move(v)); }

}  // namespace

Tgwd weyl(std::size_t n, const std::string& prefix) {
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

Tgwd a2() {
  Symbol h = variable("h");
  Ratfun H(h);
  return Tgwd({h},
              {RingMap({h}, {H + 1}, std::vector<Ratfun>{H - 1}), RingMap({h}, {H - 1}, std::vector<Ratfun>{H + 1})},
              {H, H + 1});
}

Tgwd quantum_weyl(const std::string& z, const std::string& q) {
  Symbol zs = variable(z);
  Ratfun Z(zs), Q = P(q);
  return Tgwd({zs}, {RingMap({zs}, {Q * Z + 1}, std::vector<Ratfun>{(Z - 1) / Q})}, {Z});
}

Tgwd rank2_example() {
  Symbol a = variable("t1"), b = variable("t2");
  Ratfun A(a), B(b);
  return Tgwd({a, b},
              {RingMap({a, b}, {A + B * B, B}, std::vector<Ratfun>{A - B * B, B}),
               RingMap({a, b}, {A, -B}, std::vector<Ratfun>{A, -B})},
              {A, B});
}

Tgwd qh(const std::string& h, const std::string& q) {
  Symbol hs = variable(h);
  Ratfun H(hs), Q = P(q);
  return Tgwd({hs}, {RingMap({hs}, {Q * H}, std::vector<Ratfun>{H / Q})}, {H});
}

QSystem lambda_q(const std::string& lambda) {
  QSystem q(1, 1);
  Ratfun l12 = P(lambda), l21 = l12.inverse();
  q.set(0, 0, {l21, l12, l12, l21});
  return q;
}

TwistedTensor weyl_tensor() {
  Tgwd a = weyl(1, "a"), b = weyl(1, "b");
  return TwistedTensor(Construction(a, ParameterMatrix::ones(1)), Construction(b, ParameterMatrix::ones(1)),
                       QSystem(1, 1), TensorExtension::trivial(a, b));
}

TwistedTensor quantum_weyl_tensor() {
  Tgwd a = quantum_weyl("z1", "q1"), b = quantum_weyl("z2", "q2");
  return TwistedTensor(Construction(a, ParameterMatrix::ones(1)), Construction(b, ParameterMatrix::ones(1)),
                       lambda_q(), TensorExtension::trivial(a, b));
}

TwistedTensor rank2_tensor() {
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

std::vector<PaperExample> paper_examples() {
  std::vector<PaperExample> out;
  auto add = [&](std::string id, std::string quote, std::function<CheckReport()> run) {
    out.push_back({std::move(id), std::move(quote), std::move(run)});
  };

  add("sigma1-t1", "sigma_1(t_1) = t_1+t_2^2", [] {
    return single("sigma1(t1)", compare_item("sigma1(t1)", {}, apply_map(rank2_example().sigma[0], V("t1")),
                                             V("t1") + V("t2") * V("t2")));
  });
  add("rho-qh", "rho(h) = qh", [] { return titled("rho(h) = q*h is an automorphism", verify_automorphism(qh().sigma[0])); });
  add("rho-sigma-commute", "Then rho and sigma commute", [] {
    Symbol t1 = variable("t1"), t2 = variable("t2"), h = variable("h");
    std::vector<Symbol> vars{t1, t2, h};
    Ratfun T1(t1), T2(t2), H(h), q = P("q");
    RingMap rho(vars, {-T1, Ratfun::i() * T2, q * H}, std::vector<Ratfun>{-T1, -Ratfun::i() * T2, H / q});
    RingMap sigma1(vars, {T1 + T2 * T2, T2, H}, std::vector<Ratfun>{T1 - T2 * T2, T2, H});
    return titled("rho commutes with sigma1", verify_commuting(rho, sigma1));
  });
  add("a2-sigma", "sigma_1(h)=h+1", [] {
    return single("A2 sigma^(1,0)(h)", compare_item("sigma^(1,0)(h)", {}, sigma_power(a2(), {1, 0}, V("h")), V("h") + 1));
  });
  add("weyl-xm-xp", "X_i^-X_i^+ - t_i", [] {
    Construction c(weyl(1), ParameterMatrix::ones(1));
    auto [coeff, w] = c.reduce_term(Ratfun(1), {-1, 1});
    CheckReport r{"Weyl Xm1*Xp1 = t1", {}};
    r.add(compare_item("reduce_term coefficient", {}, coeff, V("t1")));
    r.add(same("reduce_term word", word_to_string(w), "1"));
    TgwcElement p = c.multiply(TgwcElement::letter(-1), TgwcElement::letter(1));
    r.add(same("multiply", p.to_string(), TgwcElement::scalar(V("t1")).to_string()));
    return r;
  });
  add("mu-exchange", "X_i^+ X_j^- - mu_ij X_j^- X_i^+", [] {
    ParameterMatrix mu(2);
    mu.set(0, 1, P("mu12"));
    mu.set(1, 0, P("mu12").inverse());
    Construction c(weyl(2), mu);
    auto [coeff, w] = c.reduce_term(Ratfun(1), {1, -2});
    CheckReport r{"Xp1*Xm2 = mu12*Xm2*Xp1", {}};
    r.add(compare_item("coefficient", {}, coeff, P("mu12")));
    r.add(same("word", word_to_string(w), "Xm2*Xp1"));
    return r;
  });
  add("a2-regular", "Set t_1=h and t_2=h+1", [] { return titled("A2 regularity", check_regular(a2())); });
  add("a2-consistent", "Then A=A_mu(R,sigma,t) is a k-finitistic TGWA", [] {
    return titled("A2 consistency", check_consistency(a2(), ParameterMatrix::ones(2)));
  });
  add("weyl-cartan", "Cartan type (A_1)^n", [] {
    CheckReport r{"Weyl Cartan data", {}};
    for (std::size_t n : {2u, 3u}) {
      CartanData c = cartan_matrix(weyl(n));
      std::string label = "(A1)^" + std::to_string(n);
      std::vector<std::vector<int>> diag(n, std::vector<int>(n, 0));
      for (std::size_t i = 0; i < n; ++i) diag[i][i] = 2;
      r.add(same("n=" + std::to_string(n) + " matrix", cartan_to_string(c.matrix), cartan_to_string(diag)));
      r.add(same("n=" + std::to_string(n) + " label", c.label, label));
      r.add(same("n=" + std::to_string(n) + " p12", c.pairs.at({0, 1}).min_poly.to_string(), "x - 1"));
    }
    return r;
  });
  add("a2-cartan", "minimal polynomials p_{12}=p_{21}=(x-1)^2", [] {
    CartanData c = cartan_matrix(a2());
    CheckReport r{"A2 Cartan data", {}};
    r.add(same("matrix", cartan_to_string(c.matrix), "[[2, -1], [-1, 2]]"));
    r.add(same("label", c.label, "A2"));
    r.add(same("p12", c.pairs.at({0, 1}).min_poly.to_string(), "x^2 - 2*x + 1"));
    r.add(same("p21", c.pairs.at({1, 0}).min_poly.to_string(), "x^2 - 2*x + 1"));
    r.add(check("dim V12 = 2", c.pairs.at({0, 1}).basis.size() == 2));
    return r;
  });
  add("q-word", "q_{(v,u)}", [] {
    QSystem q(1, 2);
    q.set(0, 0, {P("a"), P("b"), P("c"), P("d")});
    q.set(0, 1, {P("e"), P("f"), P("g"), P("k")});
    return single("q_{(Xp1, Xp1*Xm2)}", compare_item("q scalar", {}, q_word_scalar(q, {1}, {1, -2}), P("a") * P("f")));
  });
  add("collapse-compat", "q_{ij}^{(+,-)}=(q_{ij}^{(+,+)})^{-1}=(q_{ij}^{(-,-)})^{-1}=q_{ij}^{(-,+)}", [] {
    return titled("exchange compatibility for lambda data", check_exchange_compat(quantum_weyl_tensor()));
  });
  add("rank2-compat", "extend rho to R (x) S by setting rho(t_1)=-t_1", [] {
    return titled("exchange compatibility for the rank-2 extension", check_exchange_compat(rank2_tensor()));
  });
  add("tau-examples", "rho_i(t_j) (x) Y_i^+ = tau(Y_i^+ (x) t_j)", [] {
    TwistedTensor r = rank2_tensor();
    TwistedTensor l = quantum_weyl_tensor();
    CheckReport rep{"tau examples", {}};
    rep.add(same("tau(Yp1 (x) t1)", apply_tau(r, 1, {1}, V("t1"), {}).to_string(), T(-V("t1"), {}, {1}).to_string()));
    rep.add(same("tau(Yp1 (x) t2)", apply_tau(r, 1, {1}, V("t2"), {}).to_string(),
                 T(Ratfun::i() * V("t2"), {}, {1}).to_string()));
    rep.add(same("tau(Ym1 (x) Xp1)", apply_tau(l, 1, {-1}, 1, {1}).to_string(), T(P("lambda"), {1}, {-1}).to_string()));
    return rep;
  });
  add("plain-tensor", "the usual tensor product A (x) B", [] {
    TwistedTensor tt = weyl_tensor();
    CheckReport r = titled("plain tensor product", check_exchange_compat(tt));
    r.merge(check_hexagon(tt));
    return r;
  });
  add("quantum-weyl-tensor", "Then A = A_1 (x)_tau A_2", [] {
    TwistedTensor tt = quantum_weyl_tensor();
    CheckReport r = titled("quantum Weyl tensor", check_hexagon(tt));
    r.merge(build_tensor_data(tt).report);
    return r;
  });
  add("alternative-weyl", "x_jy_j - q_j y_jx_j - 1", [] {
    TwistedTensor tt = quantum_weyl_tensor();
    Ratfun l12 = P("lambda"), l21 = l12.inverse();
    Ratfun qs[2] = {P("q1"), P("q2")};
    auto x = [](int i) { return i == 1 ? T(1, {1}, {}) : T(1, {}, {1}); };
    auto y = [](int i) { return i == 1 ? T(1, {-1}, {}) : T(1, {}, {-1}); };
    auto lam = [&](int i, int j) { return i == j ? Ratfun(1) : (i == 1 ? l12 : l21); };
    auto mul = [&](const TensorElement& a, const TensorElement& b) { return tensor_multiply(tt, a, b); };
    CheckReport r{"alternative quantized Weyl relations", {}};
    auto zero = [&](std::string name, const TensorElement& e) { r.add(same(std::move(name), e.to_string(), "0")); };
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) {
        if (i == j) continue;
        std::string ij = std::to_string(i) + std::to_string(j);
        zero("x_i x_j - lambda_ij x_j x_i, ij=" + ij, mul(x(i), x(j)) - lam(i, j) * mul(x(j), x(i)));
        zero("x_i y_j - lambda_ji y_j x_i, ij=" + ij, mul(x(i), y(j)) - lam(j, i) * mul(y(j), x(i)));
        zero("y_j y_i - lambda_ji y_i y_j, ij=" + ij, mul(y(j), y(i)) - lam(j, i) * mul(y(i), y(j)));
        zero("x_j y_i - lambda_ij y_i x_j, ij=" + ij, mul(x(j), y(i)) - lam(i, j) * mul(y(i), x(j)));
      }
    }
    for (int j = 1; j <= 2; ++j) {
      zero("x_j y_j - q_j y_j x_j - 1, j=" + std::to_string(j),
           mul(x(j), y(j)) - qs[j - 1] * mul(y(j), x(j)) - TensorElement::one());
    }
    return r;
  });
  add("rank3", "rank 3 TGWA of Cartan type (A_1)^3", [] {
    TwistedTensor tt = rank2_tensor();
    TensorBuild b = build_tensor_data(tt);
    CheckReport r = titled("rank-2 (x) rank-1 tensor data", b.report);
    r.add(check("rank 3", b.data.datum.rank() == 3));
    r.add(same("Cartan label", cartan_matrix(b.data.datum).label, "(A1)^3"));
    return r;
  });
  add("tensor-products", "= q_{j-m,i}^{(-,+)}(X_i^+ (x) Y_{j-m}^-)", [] {
    TwistedTensor tt = quantum_weyl_tensor();
    CheckReport r{"tensor products", {}};
    r.add(same("(1 (x) Ym1)(Xp1 (x) 1)", tensor_multiply(tt, T(1, {}, {-1}), T(1, {1}, {})).to_string(),
               T(P("lambda"), {1}, {-1}).to_string()));
    r.add(same("(1 (x) Ym1)(1 (x) Yp1)", tensor_multiply(tt, T(1, {}, {-1}), T(1, {}, {1})).to_string(),
               T(V("z2"), {}, {}).to_string()));
    return r;
  });
  add("twist-nu", "nu_ij = mu_ij q_ji^{(-,+)} q_ij^{(-,-)}", [] {
    Construction a(a2(), ParameterMatrix::ones(2));
    ParameterMatrix m(2);
    m.set(0, 1, P("c"));
    m.set(1, 0, P("d"));
    TwistingSystemSpec spec = TwistingSystemSpec::from_matrix(m);
    GradedTwist g = build_graded_twist(a, spec);
    Ratfun c = spec.q()(1, 0).mp * spec.q()(0, 1).mm;
    CheckReport r = titled("graded twist of A2", g.report);
    r.add(compare_item("nu12", {1, 2}, g.nu(0, 1), c * a.mu()(0, 1)));
    return r;
  });
  add("a2-cocycle", "noetherian provided nu_{12}nu_{21}=1", [] {
    ParameterMatrix nu(2);
    nu.set(0, 1, P("nu"));
    nu.set(1, 0, P("nu").inverse());
    CocycleEquivalence e = check_cocycle_equiv(ParameterMatrix::ones(2), nu);
    CheckReport r = titled("A2 cocycle equivalence", e.report);
    r.add(check("equivalent", e.equivalent));
    return r;
  });
  add("star-product", "X_i^+ * (X_j^-)' = chi_{-e_j}(X_i^+)(X_j^-)'", [] {
    Construction a(a2(), ParameterMatrix::ones(2));
    ParameterMatrix m(2);
    m.set(0, 1, P("c"));
    m.set(1, 0, P("d"));
    TwistingSystemSpec spec = TwistingSystemSpec::from_matrix(m);
    TgwcElement xp1 = TgwcElement::letter(1), xm2 = TgwcElement::letter(-2);
    TgwcElement lhs = star_multiply(a, spec, xp1, xm2);
    TgwcElement rhs = spec.q()(1, 0).mp * a.multiply(xp1, xm2);
    return single("Xp1 * Xm2", same("star product", lhs.to_string(), rhs.to_string()));
  });
  add("module-u", "U=A/AX_1^+", [] {
    auto u = build_simple(weyl(1), SimpleKind::U);
    CheckReport r{"U over A1", {}};
    r.add(check("X+ kills the top vector", act(*u, TgwcElement::letter(1), {{{0}, Ratfun(1)}}).empty()));
    r.merge(check_relation_annihilation(*u, Construction(weyl(1), ParameterMatrix::ones(1))));
    return r;
  });
  add("module-v", "(A/AX_1^-)<1>", [] {
    auto v = build_simple(weyl(1), SimpleKind::V);
    CheckReport r{"V<1> over A1", {}};
    r.add(check("generator in degree 1", v->contains({1}) && !v->contains({0})));
    r.add(check("X- kills the generator", act(*v, TgwcElement::letter(-1), {{{1}, Ratfun(1)}}).empty()));
    r.merge(check_relation_annihilation(*v, Construction(weyl(1), ParameterMatrix::ones(1))));
    return r;
  });
  add("module-xmxp", "X_i^-X_i^+ - t_i", [] {
    auto m = build_simple(weyl(1), SimpleKind::M, 0, P("lambda"));
    CheckReport r{"(X-X+) v = t v on M_lambda", {}};
    for (int g = -3; g <= 3; ++g) {
      ModuleElement x{{{g}, Ratfun(1)}};
      auto lhs = act(*m, TgwcElement::term(Ratfun(1), {-1, 1}), x);
      auto rhs = act(*m, TgwcElement::scalar(V("t1")), x);
      r.add(same("degree " + std::to_string(g), module_element_to_string(lhs), module_element_to_string(rhs)));
    }
    return r;
  });
  add("tau-m", "tau_M(sY_v (x) w) = q_{(v,u)} w (x) sY_v", [] {
    TwistedTensor tt = quantum_weyl_tensor();
    ModulePtr u = build_simple(tt.a().datum(), SimpleKind::U);
    ModulePtr v = build_simple(tt.b().datum(), SimpleKind::V);
    TensorModule tm(u, v, tt.q());
    ModuleElement x{{{-2, 1}, Ratfun(1)}};
    ModuleElement yn = act_word(*v, Ratfun(1), {1}, {{{1}, Ratfun(1)}});
    ModuleElement expected;
    for (const auto& [g, c] : yn) add_to(expected, {-2, g[0]}, P("lambda").pow(2) * c);
    auto lhs = tensor_act(tt, tm, T(1, {}, {1}), x);
    CheckReport r{"tau_M on U (x) V<1>", {}};
    r.add(same("(1 (x) Yp1)(m_-2 (x) n_1)", module_element_to_string(lhs), module_element_to_string(expected)));
    r.merge(check_module_axioms(tm, tt));
    return r;
  });
  return out;
}

}  // namespace tgwa::corpus
