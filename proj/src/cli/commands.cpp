#include "tgwa/cli/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>

#include "tgwa/corpus/corpus.hpp"

namespace tgwa::cli {

using nlohmann::ordered_json;

namespace {

const char* const a2_spec_text = R"(params: []
vars: [h]
autos:
  sigma1: {h: h + 1}
  sigma1_inv: {h: h - 1}
  sigma2: {h: h - 1}
  sigma2_inv: {h: h + 1}
t: [h, h + 1]
mu: [[1, 1], [1, 1]]
)";

const char* const weyl3_spec_text = R"(vars: [t1, t2, t3]
autos:
  sigma1: {t1: t1 - 1}
  sigma1_inv: {t1: t1 + 1}
  sigma2: {t2: t2 - 1}
  sigma2_inv: {t2: t2 + 1}
  sigma3: {t3: t3 - 1}
  sigma3_inv: {t3: t3 + 1}
t: [t1, t2, t3]
mu: [[1, 1, 1], [1, 1, 1], [1, 1, 1]]
)";

const char* const weyl1_spec_text = R"(vars: [t]
autos:
  sigma1: {t: t - 1}
  sigma1_inv: {t: t + 1}
t: [t]
mu: [[1]]
)";

const char* const missing_inverse_text = R"(vars: [h]
autos:
  sigma1: {h: h + 1}
t: [h]
mu: [[1]]
)";

ProjectSpec checked(ProjectSpec spec, const std::string& origin) {
  CheckReport cert = certify_datum(spec.datum());
  if (!cert.passed()) throw PreconditionError(origin + ": automorphism certificates fail: " + cert.summary());
  return spec;
}

ordered_json matrix_json(const ParameterMatrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json datum_json(const Tgwd& d) {
  ordered_json vars = ordered_json::array(), t = ordered_json::array(), sigma = ordered_json::array();
  for (Symbol v : d.variables) vars.push_back(v.name());
  for (const auto& x : d.t) t.push_back(x.to_string());
  for (const auto& s : d.sigma) {
    ordered_json m = ordered_json::object();
    for (std::size_t k = 0; k < s.domain().size(); ++k) m[s.domain()[k].name()] = s.images()[k].to_string();
    sigma.push_back(std::move(m));
  }
  return {{"rank", d.rank()}, {"vars", vars}, {"sigma", sigma}, {"t", t}};
}

ordered_json cartan_json(const CartanData& c) {
  ordered_json polys = ordered_json::object();
  for (const auto& [ij, data] : c.pairs) {
    polys["p" + std::to_string(ij.first + 1) + std::to_string(ij.second + 1)] = data.min_poly.to_string();
  }
  return {{"matrix", c.matrix}, {"label", c.label}, {"min_polys", polys}};
}

CheckItem item(std::string name, bool ok, const std::string& lhs = "", const std::string& rhs = "") {
  return identity_item(std::move(name), {}, lhs, rhs, ok);
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse error";
  if (dynamic_cast<const DivisionByZero*>(&e)) return "division by zero";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition error";
  if (dynamic_cast<const DomainError*>(&e)) return "domain error";
  return "error";
}

struct Options {
  std::string spec, spec2, with, qfile, twist_file, expr_a, expr_b, mu, nu, check;
  std::size_t bound = default_finitistic_bound;
  int samples = default_samples;
  std::uint64_t seed = 0;
  int radius = default_window_radius;
  int window = 6;
};

TwistedTensor make_tensor(const ProjectSpec& a, const ProjectSpec& b, const std::string& qfile) {
  Tgwd da = a.datum(), db = b.datum();
  ExchangeSpec ex{QSystem(db.rank(), da.rank()), TensorExtension::trivial(da, db)};
  if (!qfile.empty()) {
    ex = parse_exchange(read_file(qfile), a, b);
  } else if (a.qsystem) {
    if (a.qsystem->rows() != db.rank() || a.qsystem->cols() != da.rank()) {
      throw DomainError("qsystem block is " + std::to_string(a.qsystem->rows()) + "x" +
                        std::to_string(a.qsystem->cols()) + ", expected " + std::to_string(db.rank()) + "x" +
                        std::to_string(da.rank()));
    }
    ex.q = *a.qsystem;
  }
  return TwistedTensor(Construction(da, a.mu), Construction(db, b.mu), ex.q, ex.ext);
}

std::vector<ModulePtr> build_modules(const ProjectSpec& s) {
  std::vector<ModulePtr> out;
  Tgwd d = s.datum();
  for (const auto& m : s.modules) out.push_back(build_simple(d, m.kind, m.shift, m.lambda));
  return out;
}

void cmd_validate(const Options& o, RunReport& r) {
  ProjectSpec s = parse_spec(read_file(o.spec));
  Tgwd d = s.datum();
  r.checks.push_back(certify_datum(d));
  r.checks.push_back(check_regular(d));
  r.checks.push_back(check_consistency(d, s.mu));
  r.results = {{"datum", datum_json(d)}, {"mu", matrix_json(s.mu)}};
}

void cmd_reduce(const Options& o, RunReport& r) {
  ProjectSpec s = load_spec(o.spec);
  Tgwd d = s.datum();
  Construction c(d, s.mu);
  Scope scope = s.scope();
  scope.datum = &d;
  TgwcElement e = parse_tgwc(o.expr_a, scope);
  r.results = {{"input", o.expr_a}, {"normal_form", c.normal_form(e).to_string()}};
}

void cmd_mul(const Options& o, RunReport& r) {
  ProjectSpec s = load_spec(o.spec);
  Tgwd d = s.datum();
  Construction c(d, s.mu);
  Scope scope = s.scope();
  scope.datum = &d;
  TgwcElement a = parse_tgwc(o.expr_a, scope), b = parse_tgwc(o.expr_b, scope);
  r.results = {{"a", o.expr_a}, {"b", o.expr_b}, {"product", c.multiply(a, b).to_string()}};
}

void cmd_cartan(const Options& o, RunReport& r) {
  ProjectSpec s = load_spec(o.spec);
  r.results = cartan_json(cartan_matrix(s.datum(), o.bound));
}

void cmd_tensor(const Options& o, RunReport& r) {
  ProjectSpec a = load_spec(o.spec), b = load_spec(o.spec2);
  TwistedTensor tt = make_tensor(a, b, o.qfile);
  r.checks.push_back(check_exchange_compat(tt));
  r.checks.push_back(check_extension(tt));
  if (!r.checks[0].passed() || !r.checks[1].passed()) return;
  TensorBuild build = build_tensor_data(tt);
  r.checks.push_back(build.report);
  CheckReport cartan{"Cartan matrix is block diagonal", {}};
  try {
    CartanData ct = cartan_matrix(build.data.datum, o.bound);
    CartanData ca = cartan_matrix(a.datum(), o.bound), cb = cartan_matrix(b.datum(), o.bound);
    std::size_t m = tt.m(), n = tt.n();
    std::vector<std::vector<int>> diag(m + n, std::vector<int>(m + n, 0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) diag[i][j] = ca.matrix[i][j];
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) diag[m + i][m + j] = cb.matrix[i][j];
    }
    std::string lhs = cartan_to_string(ct.matrix), rhs = cartan_to_string(diag);
    cartan.add(identity_item("C_T = diag(C_A, C_B)", {}, lhs, rhs, lhs == rhs));
    r.results["cartan"] = cartan_json(ct);
  } catch (const NotFinitistic& e) {
    cartan.add({"C_T = diag(C_A, C_B)", Status::unverifiable, {}, e.what(), "", ""});
  }
  r.checks.push_back(std::move(cartan));
  r.results["datum"] = datum_json(build.data.datum);
  r.results["eta"] = matrix_json(build.data.eta);
}

void cmd_gtwist(const Options& o, RunReport& r) {
  ProjectSpec s = load_spec(o.spec);
  TwistingSystemSpec spec = o.twist_file.empty() ? spec_twist(s) : parse_twist_file(read_file(o.twist_file), s);
  Tgwd d = s.datum();
  GradedTwist g = build_graded_twist(Construction(d, s.mu), spec);
  r.checks.push_back(g.report);
  GradedTwist back = build_graded_twist(Construction(d, g.nu), spec.inverse());
  CheckReport inverse{"double twist", {}};
  inverse.add(identity_item("twisting by the inverse restores mu", {}, back.nu.to_string(), s.mu.to_string(),
                            back.nu == s.mu));
  r.checks.push_back(std::move(inverse));
  r.results = {{"nu", matrix_json(g.nu)}};
}

void cmd_cocycle(const Options& o, RunReport& r) {
  ProjectSpec s = load_spec(o.spec);
  ParameterMatrix mu = parse_matrix_arg(o.mu, s), nu = parse_matrix_arg(o.nu, s);
  CocycleEquivalence e = check_cocycle_equiv(mu, nu);
  r.checks.push_back(e.report);
  r.results = {{"equivalent", e.equivalent}, {"witness", nullptr}};
  if (e.witness) {
    ParameterMatrix w(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
      for (std::size_t j = 0; j < mu.size(); ++j) w.set(i, j, e.witness->q()(i, j).pp);
    }
    r.results["witness"] = matrix_json(w);
    GradedTwist g = build_graded_twist(Construction(s.datum(), mu), *e.witness);
    CheckReport wr{"witness", {}};
    wr.add(identity_item("twisting mu by the witness gives nu", {}, g.nu.to_string(), nu.to_string(), g.nu == nu));
    r.checks.push_back(std::move(wr));
  }
}

TwistedTensor tensor_from(const Options& o) {
  if (o.with.empty()) throw PreconditionError("this command needs the second factor: --with SPEC2");
  return make_tensor(load_spec(o.spec), load_spec(o.with), o.qfile);
}

void cmd_hexagon(const Options& o, RunReport& r) {
  r.checks.push_back(check_hexagon(tensor_from(o), o.samples, o.seed));
}

void cmd_compare(const Options& o, RunReport& r) {
  r.checks.push_back(compare_products(tensor_from(o), o.samples, o.seed));
}

void cmd_modules(const Options& o, RunReport& r) {
  static const std::vector<std::string> checks{"annihilation", "axioms",         "shift",       "twisted",
                                               "u-independence", "tensor-axioms", "equivalence", "all"};
  if (std::find(checks.begin(), checks.end(), o.check) == checks.end()) {
    throw DomainError("unknown module check '" + o.check + "'");
  }
  ProjectSpec s = load_spec(o.spec);
  if (s.modules.empty()) throw PreconditionError("the spec declares no modules");
  Tgwd d = s.datum();
  Construction c(d, s.mu);
  auto mods = build_modules(s);
  bool all = o.check == "all";
  auto want = [&](const char* name) { return all || o.check == name; };
  ordered_json labels = ordered_json::array();
  for (const auto& m : mods) labels.push_back(m->label());
  r.results["modules"] = labels;

  if (want("annihilation")) {
    for (const auto& m : mods) r.checks.push_back(check_relation_annihilation(*m, c, o.radius));
  }
  if (want("axioms")) {
    for (const auto& m : mods) r.checks.push_back(check_module_axioms(*m, c, o.samples, o.seed));
  }
  if (want("shift")) {
    for (const auto& m : s.modules) r.checks.push_back(check_shift_coherence(d, m.kind, m.shift, m.lambda, o.radius));
  }
  if (want("twisted") && (!all || s.twist || s.cocycle || !o.twist_file.empty())) {
    TwistingSystemSpec spec = o.twist_file.empty() ? spec_twist(s) : parse_twist_file(read_file(o.twist_file), s);
    for (const auto& m : mods) r.checks.push_back(check_twisted_module_axioms(*m, c, spec, o.samples, o.seed));
  }
  bool paired = !o.with.empty();
  if (want("u-independence")) {
    if (paired) {
      r.checks.push_back(check_u_independence(tensor_from(o).q(), o.samples, o.seed));
    } else if (s.qsystem) {
      r.checks.push_back(check_u_independence(*s.qsystem, o.samples, o.seed));
    } else if (!all) {
      throw PreconditionError("u-independence needs --with SPEC2 or a qsystem block");
    }
  }
  if (!want("tensor-axioms") && !want("equivalence")) return;
  if (!paired) {
    if (all) return;
    throw PreconditionError("this check needs the second factor: --with SPEC2");
  }
  ProjectSpec b = load_spec(o.with);
  if (b.modules.empty()) throw PreconditionError("the second spec declares no modules");
  TwistedTensor tt = tensor_from(o);
  auto others = build_modules(b);
  for (const auto& m : mods) {
    for (const auto& n : others) {
      if (want("tensor-axioms")) {
        TensorModule tm(m, n, tt.q());
        r.checks.push_back(check_relation_annihilation(tm, tt.total(), o.radius));
        r.checks.push_back(check_module_axioms(tm, tt, o.samples, o.seed));
      }
      if (want("equivalence")) r.checks.push_back(check_equivalence_elementwise(tt, m, n, o.window, o.samples, o.seed));
    }
  }
}

}  // namespace

ProjectSpec load_spec(const std::string& path) { return checked(parse_spec(read_file(path)), path); }

RunReport run_selftest() {
  RunReport r;
  r.command = {"selftest"};
  ordered_json examples = ordered_json::array();
  for (const auto& e : corpus::paper_examples()) {
    CheckReport c = e.run();
    c.title = e.id + ": " + c.title;
    examples.push_back({{"id", e.id}, {"quote", e.quote}, {"status", status_name(c.status())}});
    r.checks.push_back(std::move(c));
  }

  CheckReport spec{"spec-files: spec-file examples", {}};
  ProjectSpec a2 = parse_spec(a2_spec_text);
  spec.add(item("A2 spec has rank 2 and mu = 1", a2.rank() == 2 && a2.mu == ParameterMatrix::ones(2)));
  Tgwd d = a2.datum();
  spec.add(item("A2 certificates", certify_datum(d).passed()));
  spec.add(item("A2 regular", check_regular(d).passed()));
  spec.add(item("A2 consistent", check_consistency(d, a2.mu).passed()));
  std::string c3 = cartan_to_string(cartan_matrix(parse_spec(weyl3_spec_text).datum()).matrix);
  spec.add(identity_item("Weyl n=3 Cartan matrix", {}, c3, "[[2, 0, 0], [0, 2, 0], [0, 0, 2]]",
                         c3 == "[[2, 0, 0], [0, 2, 0], [0, 0, 2]]"));
  std::string label = cartan_matrix(parse_spec(weyl3_spec_text).datum()).label;
  spec.add(identity_item("Weyl n=3 Cartan label", {}, label, "(A1)^3", label == "(A1)^3"));
  ProjectSpec w1 = parse_spec(weyl1_spec_text);
  Tgwd d1 = w1.datum();
  Scope scope = w1.scope();
  scope.datum = &d1;
  std::string nf = Construction(d1, w1.mu).normal_form(parse_tgwc("Xp1*Xm1", scope)).to_string();
  spec.add(identity_item("reduce Xp1*Xm1 on Weyl n=1", {}, nf, "(t - 1)", nf == "(t - 1)"));
  std::string message;
  try {
    parse_spec(missing_inverse_text);
  } catch (const ParseError& e) {
    message = e.what();
  }
  spec.add(item("missing sigma1_inv is named", message.find("sigma1_inv") != std::string::npos, message,
                "an error naming sigma1_inv"));
  spec.add(item("A2 spec round-trips", parse_spec(render_spec(a2)) == a2));
  r.checks.push_back(std::move(spec));
  r.results = {{"examples", examples}};
  return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with twisted generalized Weyl algebras", "tgwa"};
  app.require_subcommand(1);
  std::string json_path;
  bool timing = false;
  app.add_option("--json", json_path, "Also write the machine-readable report to PATH ('-' for stdout only)");
  app.add_flag("--timing", timing, "Record the elapsed time in the report");
  Options o;
  std::function<void(const Options&, RunReport&)> handler;

  auto spec_arg = [&](CLI::App* sub) { sub->add_option("SPEC", o.spec, "Spec file")->required(); };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--samples", o.samples, "Number of seeded samples")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", o.seed, "Sampling seed");
  };
  auto tensor_opts = [&](CLI::App* sub) {
    sub->add_option("--with", o.with, "Spec of the second factor B");
    sub->add_option("--q", o.qfile, "Exchange file with the q-system and extensions");
  };

  auto* validate = app.add_subcommand("validate", "Regularity, consistency and automorphism certificates");
  spec_arg(validate);
  validate->callback([&] { handler = cmd_validate; });

  auto* reduce = app.add_subcommand("reduce", "Normal form of an expression");
  spec_arg(reduce);
  reduce->add_option("EXPR", o.expr_a, "Expression in Xp<i>, Xm<i> and ring elements")->required();
  reduce->callback([&] { handler = cmd_reduce; });

  auto* mul = app.add_subcommand("mul", "Product of two expressions in normal form");
  spec_arg(mul);
  mul->add_option("A", o.expr_a)->required();
  mul->add_option("B", o.expr_b)->required();
  mul->callback([&] { handler = cmd_mul; });

  auto* cartan = app.add_subcommand("cartan", "Cartan matrix and minimal polynomials");
  spec_arg(cartan);
  cartan->add_option("--bound", o.bound, "Finitistic exploration bound");
  cartan->callback([&] { handler = cmd_cartan; });

  auto* tensor = app.add_subcommand("tensor", "Twisted tensor product data and its assertions");
  spec_arg(tensor);
  tensor->add_option("SPEC2", o.spec2, "Spec of the second factor B")->required();
  tensor->add_option("--q", o.qfile, "Exchange file with the q-system and extensions");
  tensor->add_option("--bound", o.bound, "Finitistic exploration bound");
  tensor->callback([&] { handler = cmd_tensor; });

  auto* gtwist = app.add_subcommand("gtwist", "Graded twist by a twisting system");
  spec_arg(gtwist);
  gtwist->add_option("--spec", o.twist_file, "File with a twist or cocycle block");
  gtwist->callback([&] { handler = cmd_gtwist; });

  auto* cocycle = app.add_subcommand("cocycle-equiv", "Cocycle equivalence of two parameter matrices");
  spec_arg(cocycle);
  cocycle->add_option("MU", o.mu, "Matrix such as [[1, q], [1/q, 1]]")->required();
  cocycle->add_option("NU", o.nu, "Matrix such as [[1, q], [1/q, 1]]")->required();
  cocycle->callback([&] { handler = cmd_cocycle; });

  auto* hexagon = app.add_subcommand("hexagon", "Hexagon associativity criterion for tau");
  spec_arg(hexagon);
  tensor_opts(hexagon);
  sampling(hexagon);
  hexagon->callback([&] { handler = cmd_hexagon; });

  auto* compare = app.add_subcommand("compare-products", "Graded-twist product against the twisted tensor product");
  spec_arg(compare);
  tensor_opts(compare);
  sampling(compare);
  compare->callback([&] { handler = cmd_compare; });

  auto* modules = app.add_subcommand("modules", "Checks on the declared weight modules");
  spec_arg(modules);
  modules
      ->add_option("CHECK", o.check,
                   "annihilation, axioms, shift, twisted, u-independence, tensor-axioms, equivalence or all")
      ->required();
  tensor_opts(modules);
  sampling(modules);
  modules->add_option("--spec", o.twist_file, "File with a twist or cocycle block");
  modules->add_option("--radius", o.radius, "Degree window radius");
  modules->add_option("--window", o.window, "Support window per factor for the equivalence check");
  modules->callback([&] { handler = cmd_modules; });

  auto* selftest = app.add_subcommand("selftest", "Run the worked-example corpus");
  selftest->callback([&] { handler = nullptr; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto start = std::chrono::steady_clock::now();
  RunReport report;
  try {
    if (handler) {
      handler(o, report);
    } else {
      report = run_selftest();
    }
  } catch (const std::exception& e) {
    report.error = error_kind(e) + ": " + e.what();
  }
  report.command = args;
  if (timing) {
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  if (json_path == "-") {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << to_text(report);
    if (!json_path.empty()) {
      std::ofstream f(json_path);
      if (!f) {
        err << "error: cannot write " << json_path << "\n";
        return 2;
      }
      f << to_json(report).dump(2) << "\n";
    }
  }
  if (report.error) {
    err << *report.error << "\n";
    return 2;
  }
  return report.status() == Status::pass ? 0 : 1;
}

}  // namespace tgwa::cli
