#include "tgwa/modules/module_checks.hpp"

#include <functional>

#include "tgwa/exact/errors.hpp"
#include "tgwa/tgwc/sampling.hpp"

namespace tgwa {

namespace {

std::vector<Degree> window(const GradedModule& m, const Degree& center, int radius) {
  std::vector<Degree> out;
  Degree g(m.rank());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == g.size()) {
      if (m.contains(g)) out.push_back(g);
      return;
    }
    for (int d = center[k] - radius; d <= center[k] + radius; ++d) {
      g[k] = d;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

ModuleElement basis(const Degree& g) { return {{g, Ratfun(1)}}; }

ModuleElement random_vector(Sampler& s, const GradedModule& m, int radius = 4) {
  ModuleElement x;
  int terms = s.uniform(1, 2);
  for (int tries = 0; tries < 256 && static_cast<int>(x.size()) < terms; ++tries) {
    Degree g = s.degree(m.rank(), radius);
    if (m.contains(g)) add_to(x, g, Ratfun(s.small_gaussian()));
  }
  if (x.empty()) throw DomainError("module " + m.label() + " has no support near 0");
  return x;
}

std::string idx_name(const char* prefix, std::size_t i) { return prefix + std::to_string(i + 1); }

// One item per relation; reports the first degree where it fails.
struct RelationTally {
  CheckItem item;
  bool failed = false;
  void record(const Degree& g, const ModuleElement& lhs, const ModuleElement& rhs) {
    if (failed || lhs == rhs) return;
    failed = true;
    item.status = Status::fail;
    item.detail = "at degree " + degree_to_string(g);
    item.lhs = module_element_to_string(lhs);
    item.rhs = module_element_to_string(rhs);
  }
};

void require_trivial_extension(const TwistedTensor& tt) {
  if (!tt.ext().is_trivial()) throw PreconditionError("tau_M needs trivially extended automorphisms");
}

ModuleElement twisted_word_action(const TwistingSystemSpec& spec, const GradedModule& m, const Ratfun& c,
                                  const Word& w, const ModuleElement& x) {
  ModuleElement y = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) y = twist_module_action(spec, m, TgwcElement::letter(*it), y);
  ModuleElement out;
  for (const auto& [g, v] : y) add_to(out, g, m.evaluate(c, g) * v);
  return out;
}

ModuleElement twisted_action(const TwistingSystemSpec& spec, const GradedModule& m, const TgwcElement& e,
                             const ModuleElement& x) {
  ModuleElement out;
  for (const auto& [w, c] : e.terms()) {
    for (const auto& [g, v] : twisted_word_action(spec, m, c, w, x)) add_to(out, g, v);
  }
  return out;
}

}  // namespace

CheckReport check_relation_annihilation(const GradedModule& m, const Construction& c, int radius) {
  if (m.rank() != c.rank()) throw DomainError("relation annihilation: module and algebra ranks differ");
  const Tgwd& d = c.datum();
  std::size_t n = c.rank();
  std::vector<Degree> degrees = window(m, Degree(n, 0), radius);
  std::vector<RelationTally> tallies;
  auto tally = [&](std::string name, std::vector<int> indices) -> RelationTally& {
    tallies.push_back({CheckItem{std::move(name), Status::pass, std::move(indices), {}, {}, {}}});
    return tallies.back();
  };

  for (std::size_t i = 0; i < n; ++i) {
    int p = static_cast<int>(i) + 1;
    std::string xp = idx_name("Xp", i), xm = idx_name("Xm", i), si = idx_name("sigma", i);
    for (Symbol x : d.variables) {
      Ratfun r(x);
      Ratfun images[2] = {d.sigma[i].apply(r), d.sigma[i].inverse().apply(r)};
      int letters[2] = {p, -p};
      std::string names[2] = {xp + "*" + x.name() + " - " + si + "(" + x.name() + ")*" + xp,
                              xm + "*" + x.name() + " - " + si + "^-1(" + x.name() + ")*" + xm};
      for (int k = 0; k < 2; ++k) {
        auto& t = tally(names[k], {p});
        for (const auto& g : degrees) {
          auto lhs = act_word(m, Ratfun(1), {letters[k]}, scale(m.evaluate(r, g), basis(g)));
          auto rhs = act_word(m, images[k], {letters[k]}, basis(g));
          t.record(g, lhs, rhs);
        }
      }
    }
    auto& down = tally(xm + "*" + xp + " - t" + std::to_string(p), {p});
    auto& up = tally(xp + "*" + xm + " - " + si + "(t" + std::to_string(p) + ")", {p});
    Ratfun sigma_t = d.sigma[i].apply(d.t[i]);
    for (const auto& g : degrees) {
      down.record(g, act_word(m, Ratfun(1), {-p, p}, basis(g)), act_word(m, d.t[i], {}, basis(g)));
      up.record(g, act_word(m, Ratfun(1), {p, -p}, basis(g)), act_word(m, sigma_t, {}, basis(g)));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      int q = static_cast<int>(j) + 1;
      auto& t = tally(xp + "*" + idx_name("Xm", j) + " - mu" + std::to_string(p) + std::to_string(q) + "*" +
                          idx_name("Xm", j) + "*" + xp,
                      {p, q});
      for (const auto& g : degrees) {
        t.record(g, act_word(m, Ratfun(1), {p, -q}, basis(g)), act_word(m, c.mu()(i, j), {-q, p}, basis(g)));
      }
    }
  }
  CheckReport report{"relation annihilation on " + m.label(), {}};
  for (auto& t : tallies) report.add(std::move(t.item));
  return report;
}

CheckReport check_module_axioms(const GradedModule& m, const Construction& c, int samples, std::uint64_t seed) {
  if (m.rank() != c.rank()) throw DomainError("module axioms: module and algebra ranks differ");
  Sampler s(seed);
  CheckReport report{"module axioms on " + m.label(), {}};
  ModuleElement x0 = random_vector(s, m);
  auto one = act(m, TgwcElement::scalar(Ratfun(1)), x0);
  report.add(identity_item("1x = x", {}, module_element_to_string(one), module_element_to_string(x0), one == x0));
  for (int k = 0; k < samples; ++k) {
    TgwcElement a = s.element(c.datum());
    TgwcElement b = s.element(c.datum());
    ModuleElement x = random_vector(s, m);
    auto lhs = act(m, c.multiply(a, b), x);
    auto rhs = act(m, a, act(m, b, x));
    report.add(identity_item("(ab)x = a(bx), sample " + std::to_string(k), {}, module_element_to_string(lhs),
                             module_element_to_string(rhs), lhs == rhs));
  }
  return report;
}

CheckReport check_module_axioms(const TensorModule& m, const TwistedTensor& tt, int samples, std::uint64_t seed) {
  require_trivial_extension(tt);
  if (m.left().rank() != tt.m() || m.right().rank() != tt.n()) {
    throw DomainError("module axioms: tensor module and algebra ranks differ");
  }
  Sampler s(seed);
  CheckReport report{"module axioms on " + m.label(), {}};
  ModuleElement x0 = random_vector(s, m);
  auto one = tensor_act(tt, m, TensorElement::one(), x0);
  report.add(identity_item("1x = x", {}, module_element_to_string(one), module_element_to_string(x0), one == x0));
  for (int k = 0; k < samples; ++k) {
    auto draw = [&] { return random_tensor(s, tt, s.degree(tt.m(), 2), s.degree(tt.n(), 2)); };
    TensorElement a = draw();
    TensorElement b = draw();
    ModuleElement x = random_vector(s, m);
    auto lhs = tensor_act(tt, m, tensor_multiply(tt, a, b), x);
    auto rhs = tensor_act(tt, m, a, tensor_act(tt, m, b, x));
    report.add(identity_item("(ab)x = a(bx), sample " + std::to_string(k), {}, module_element_to_string(lhs),
                             module_element_to_string(rhs), lhs == rhs));
  }
  return report;
}

CheckReport check_twisted_module_axioms(const GradedModule& m, const Construction& c, const TwistingSystemSpec& spec,
                                        int samples, std::uint64_t seed) {
  if (m.rank() != c.rank() || spec.rank() != c.rank()) throw DomainError("twisted module axioms: ranks differ");
  Sampler s(seed);
  CheckReport report{"twisted module axioms on " + m.label(), {}};
  for (int k = 0; k < samples; ++k) {
    TgwcElement a = s.element(c.datum());
    TgwcElement b = s.element(c.datum());
    ModuleElement x = random_vector(s, m);
    auto lhs = twist_module_action(spec, m, star_multiply(c, spec, a, b), x);
    auto rhs = twist_module_action(spec, m, a, twist_module_action(spec, m, b, x));
    report.add(identity_item("(a*b).x = a.(b.x), sample " + std::to_string(k), {}, module_element_to_string(lhs),
                             module_element_to_string(rhs), lhs == rhs));
  }
  return report;
}

CheckReport check_equivalence_elementwise(const TwistedTensor& tt, ModulePtr m, ModulePtr n, int count, int samples,
                                          std::uint64_t seed) {
  require_trivial_extension(tt);
  require_collapse(tt);
  if (m->rank() != 1 || n->rank() != 1) throw DomainError("equivalence check: factors must have rank 1");
  if (tt.m() != 1 || tt.n() != 1) throw DomainError("equivalence check: factors must have rank 1");
  TensorModule plain(m, n, QSystem::trivial(1, 1));
  TensorModule twisted(m, n, tt.q());
  TwistingSystemSpec spec = tensor_twisting_spec(tt.q(), 1, 1);
  CheckReport report{"twisted action against tau_M on " + twisted.label(), {}};

  std::vector<Degree> degrees;
  for (int a : support_window(*m, count)) {
    for (int b : support_window(*n, count)) degrees.push_back({a, b});
  }
  std::vector<Word> words{{}};
  for (int l : {1, -1, 2, -2}) {
    words.push_back({l});
    for (int r : {1, -1, 2, -2}) words.push_back({l, r});
  }
  for (const Word& w : words) {
    CheckItem item{"word " + (w.empty() ? std::string("1") : word_to_string(w)), Status::pass, {}, {}, {}, {}};
    for (const Degree& g : degrees) {
      auto lhs = twisted_word_action(spec, plain, Ratfun(1), w, basis(g));
      auto rhs = act_word(twisted, Ratfun(1), w, basis(g));
      if (lhs != rhs) {
        item.status = Status::fail;
        item.detail = "at degree " + degree_to_string(g);
        item.lhs = module_element_to_string(lhs);
        item.rhs = module_element_to_string(rhs);
        break;
      }
    }
    report.add(std::move(item));
  }
  Sampler s(seed);
  for (int k = 0; k < samples; ++k) {
    TgwcElement e = s.element(tt.total().datum());
    ModuleElement x;
    for (int j = 0; j < 2; ++j) {
      add_to(x, degrees[static_cast<std::size_t>(s.uniform(0, static_cast<int>(degrees.size()) - 1))],
             Ratfun(s.small_gaussian()));
    }
    auto lhs = twisted_action(spec, plain, e, x);
    auto rhs = act(twisted, e, x);
    report.add(identity_item("sample " + std::to_string(k), {}, module_element_to_string(lhs),
                             module_element_to_string(rhs), lhs == rhs));
  }
  return report;
}

CheckReport check_u_independence(const QSystem& q, int samples, std::uint64_t seed) {
  Sampler s(seed);
  CheckReport report{"tau_M u-independence", {}};
  for (int k = 0; k < samples; ++k) {
    Degree alpha = s.degree(q.cols(), 2);
    Word u = s.word_of_degree(alpha, 6);
    Word u2 = s.word_of_degree(alpha, 6);
    Word v = s.word(q.rows(), 3);
    if (degree(u, q.cols()) != degree(u2, q.cols())) throw DomainError("u-independence: sampled degrees differ");
    Ratfun lhs = q_word_scalar(q, v, u);
    Ratfun rhs = q_word_scalar(q, v, u2);
    CheckItem item = identity_item("sample " + std::to_string(k), {}, lhs.to_string(), rhs.to_string(), lhs == rhs);
    item.detail = "v = " + word_to_string(v) + ", u = " + word_to_string(u) + ", u' = " + word_to_string(u2);
    report.add(std::move(item));
  }
  return report;
}

CheckReport check_shift_coherence(const Tgwd& d, SimpleKind kind, int shift, std::optional<Ratfun> lambda, int radius) {
  auto built = build_simple(d, kind, shift, lambda);
  ShiftedModule shifted(build_simple(d, kind, 0, lambda), {shift});
  CheckReport report{"shift coherence for " + built->label(), {}};
  CheckItem support{"support", Status::pass, {}, {}, {}, {}};
  CheckItem weights{"weights", Status::pass, {}, {}, {}, {}};
  CheckItem action{"action", Status::pass, {}, {}, {}, {}};
  auto fail = [](CheckItem& item, int g, std::string lhs, std::string rhs) {
    if (item.status == Status::fail) return;
    item.status = Status::fail;
    item.detail = "at degree " + std::to_string(g);
    item.lhs = std::move(lhs);
    item.rhs = std::move(rhs);
  };
  for (int g = shift - radius; g <= shift + radius; ++g) {
    bool a = built->contains({g});
    bool b = shifted.contains({g});
    if (a != b) fail(support, g, a ? "in" : "out", b ? "in" : "out");
    if (!a || !b) continue;
    Ratfun wa = built->weight({g})[0].second;
    Ratfun wb = shifted.weight({g})[0].second;
    if (wa != wb) fail(weights, g, wa.to_string(), wb.to_string());
    for (int l : {1, -1}) {
      auto ea = act_word(*built, Ratfun(1), {l}, basis({g}));
      auto eb = act_word(shifted, Ratfun(1), {l}, basis({g}));
      if (ea != eb) fail(action, g, module_element_to_string(ea), module_element_to_string(eb));
    }
  }
  report.add(std::move(support));
  report.add(std::move(weights));
  report.add(std::move(action));
  return report;
}

}  // namespace tgwa
