#include <sstream>

#include "doctest.h"
#include "tgwa/cli/commands.hpp"

using namespace tgwa;
using namespace tgwa::cli;

namespace {

std::string spec_path(const std::string& name) { return std::string(TGWA_SPEC_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Scope scope_of(std::initializer_list<const char*> params) {
  Scope s;
  for (const char* p : params) s.symbols.emplace(p, parameter(p));
  return s;
}

const char* const weyl2 = R"(vars: [t1, t2]
autos:
  sigma1: {t1: t1 - 1}
  sigma1_inv: {t1: t1 + 1}
  sigma2: {t2: t2 - 1}
  sigma2_inv: {t2: t2 + 1}
t: [t1, t2]
mu: [[1, 1], [1, 1]]
)";

}  // namespace

TEST_CASE("expression parser") {
  Scope s = scope_of({"q", "a", "b"});
  Ratfun q(parameter("q"));
  CHECK(parse_ratfun("q/(q-1) - 1/(q-1)", s) == Ratfun(1));
  CHECK(parse_ratfun("2^-1", s) == Ratfun(Gaussian(mpq_class(1, 2))));
  CHECK(parse_ratfun("3/4", s) == Ratfun(Gaussian(mpq_class(3, 4))));
  CHECK(parse_ratfun("i^2", s) == Ratfun(-1));
  CHECK(parse_ratfun("q^(-2)*q^3", s) == q);
  CHECK(parse_ratfun("-a^2", s) == -Ratfun(parameter("a")).pow(2));
  CHECK(parse_ratfun("(a + b)^2 - a^2 - b^2", s) == 2 * Ratfun(parameter("a")) * Ratfun(parameter("b")));

  auto error_at = [&](const char* text) -> ParseError {
    try {
      parse_ratfun(text, s);
    } catch (const ParseError& e) {
      return e;
    }
    FAIL("no error for " << text);
    return ParseError("", {}, "");
  };
  ParseError e = error_at("q + k");
  CHECK(e.message == "undeclared symbol");
  CHECK(e.token == "k");
  CHECK(e.at.column == 5);
  CHECK(error_at("q^a").message == "expected an integer exponent");
  CHECK(error_at("1/0").message == "division by zero");
  CHECK(error_at("q $ 2").token == "$");
  CHECK(error_at("(q + 1").message == "expected ')' at end of input");
  CHECK(error_at("Xp1").message == "generator not allowed here");
  CHECK(std::string(error_at("q +\n k").what()) == "line 2, column 2: undeclared symbol 'k'");
}

TEST_CASE("TGWC expressions") {
  ProjectSpec w = parse_spec(read_file(spec_path("weyl1.yaml")));
  Tgwd d = w.datum();
  Scope s = w.scope();
  s.datum = &d;
  Ratfun t(variable("t"));
  CHECK(parse_tgwc("t*Xp1", s) == TgwcElement::term(t, {1}));
  // Xp1 t = sigma(t) Xp1 = (t - 1) Xp1
  CHECK(parse_tgwc("Xp1*t", s) == TgwcElement::term(t - 1, {1}));
  CHECK(parse_tgwc("Xm1*t", s) == TgwcElement::term(t + 1, {-1}));
  CHECK(parse_tgwc("Xp1^2*Xm1", s) == TgwcElement::term(1, {1, 1, -1}));
  CHECK(parse_tgwc("Xp1/2", s) == TgwcElement::term(Ratfun(Gaussian(mpq_class(1, 2))), {1}));
  CHECK_THROWS_AS(parse_tgwc("1/Xp1", s), ParseError);
  CHECK_THROWS_AS(parse_tgwc("Xp1^-1", s), ParseError);
  CHECK_THROWS_AS(parse_tgwc("Xm2", s), ParseError);
}

TEST_CASE("parse_spec") {
  ProjectSpec w = parse_spec(weyl2);
  CHECK(w.rank() == 2);
  CHECK(w.mu == ParameterMatrix::ones(2));
  CHECK(certify_datum(w.datum()).passed());

  ProjectSpec a2 = parse_spec(read_file(spec_path("a2.yaml")));
  Ratfun h(variable("h"));
  CHECK(a2.t == std::vector<Ratfun>{h, h + 1});
  CHECK(a2.datum().sigma[0].apply(h) == h + 1);
  CHECK(a2.datum().sigma[1].apply(h) == h - 1);
  CHECK(a2.twist.has_value());

  auto error_of = [](const std::string& text) -> std::string {
    try {
      parse_spec(text);
    } catch (const ParseError& e) {
      return e.what();
    }
    return "";
  };
  CHECK(error_of("vars: [h]\nautos:\n  sigma1: {h: h + 1}\nt: [h]\nmu: [[1]]\n") ==
        "line 3, column 3: missing inverse block 'sigma1_inv' for 'sigma1'");
  CHECK(error_of("vars: [h]\nautos:\n  sigma1: {h: h + k}\n  sigma1_inv: {h: h - 1}\nt: [h]\nmu: [[1]]\n") ==
        "line 3, column 19: undeclared symbol 'k'");
  CHECK(error_of("vars: [h]\nautos:\n  sigma1: {h: h + 1}\n  sigma1_inv: {h: h - 1}\nt: [h]\nmu: [[1, 2]]\n") ==
        "line 6, column 6: mu must be 1x1");
  CHECK(error_of("vars: [h]\nautos:\n  sigma1: {h: h + 1}\n  sigma1_inv: {h: h - 1}\nt: [h]\n") ==
        "line 1, column 1: missing required key 'mu'");
  CHECK(error_of("vars: [h]\nautos: {s: {x: h}, s_inv: {h: h}}\nt: [h]\nmu: [[1]]\n").find("not a ring variable") !=
        std::string::npos);
  CHECK(error_of("vars: [h, Xp1]\n").find("reserved") != std::string::npos);
  CHECK(error_of("vars: [h\n").rfind("line ", 0) == 0);
  CHECK(error_of("vars: [h]\nautos: {}\nt: [h]\nmu: [[1]]\nextra: 1\n") == "line 5, column 1: unknown key 'extra'");
}

TEST_CASE("spec round trip") {
  for (const char* name : {"weyl1.yaml", "weyl3.yaml", "a2.yaml", "quantum_weyl1.yaml", "quantum_weyl2.yaml",
                           "rank2.yaml", "qh.yaml"}) {
    CAPTURE(name);
    ProjectSpec s = parse_spec(read_file(spec_path(name)));
    std::string text = render_spec(s);
    ProjectSpec again = parse_spec(text);
    CHECK(again == s);
    CHECK(render_spec(again) == text);
  }
  ProjectSpec w = parse_spec(weyl2);
  CHECK(parse_spec(render_spec(w)) == w);
}

TEST_CASE("exchange and twist files") {
  ProjectSpec a = parse_spec(read_file(spec_path("rank2.yaml")));
  ProjectSpec b = parse_spec(read_file(spec_path("qh.yaml")));
  ExchangeSpec ex = parse_exchange(read_file(spec_path("rank2_exchange.yaml")), a, b);
  CHECK(ex.q(0, 0).pp == Ratfun(-1));
  CHECK(ex.q(0, 1).mp == -Ratfun::i());
  CHECK(ex.ext.rho_on_r[0].apply(Ratfun(variable("t2"))) == Ratfun::i() * Ratfun(variable("t2")));
  CHECK(ex.ext.sigma_on_s[0].is_identity());

  ProjectSpec q1 = parse_spec(read_file(spec_path("quantum_weyl1.yaml")));
  ProjectSpec q2 = parse_spec(read_file(spec_path("quantum_weyl2.yaml")));
  ExchangeSpec l = parse_exchange(read_file(spec_path("lambda_exchange.yaml")), q1, q2);
  Ratfun lambda(parameter("lambda"));
  CHECK(l.q(0, 0) == QEntry{lambda.inverse(), lambda, lambda, lambda.inverse()});

  ProjectSpec a2 = parse_spec(read_file(spec_path("a2.yaml")));
  TwistingSystemSpec t = parse_twist_file(read_file(spec_path("a2_twist.yaml")), a2);
  CHECK(t.q()(0, 1).pm == Ratfun(parameter("a")).inverse());
  CHECK_THROWS_AS(parse_twist_file("twist: [[[2, 1, 1, 1], 1], [1, 1]]\n", a2), ParseError);
  CHECK(parse_matrix_arg("[[1, c], [1/c, 1]]", a2)(0, 1) == Ratfun(parameter("c")));
}

TEST_CASE("commands") {
  Run r = run({"reduce", spec_path("weyl1.yaml"), "Xp1*Xm1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("normal_form: (t - 1)") != std::string::npos);

  r = run({"mul", spec_path("weyl1.yaml"), "Xm1", "Xp1"});
  CHECK(r.out.find("product: t") != std::string::npos);

  r = run({"--json", "-", "cartan", spec_path("weyl3.yaml")});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["results"]["label"] == "(A1)^3");
  CHECK(j["results"]["matrix"] == nlohmann::json::parse("[[2,0,0],[0,2,0],[0,0,2]]"));

  r = run({"--json", "-", "cartan", spec_path("a2.yaml")});
  j = nlohmann::json::parse(r.out);
  CHECK(j["results"]["label"] == "A2");
  CHECK(j["results"]["min_polys"]["p12"] == "x^2 - 2*x + 1");

  CHECK(run({"validate", spec_path("a2.yaml")}).code == 0);
  CHECK(run({"tensor", spec_path("rank2.yaml"), spec_path("qh.yaml"), "--q", spec_path("rank2_exchange.yaml")}).code ==
        0);
  CHECK(run({"gtwist", spec_path("a2.yaml"), "--spec", spec_path("a2_twist.yaml")}).code == 0);
  CHECK(run({"cocycle-equiv", spec_path("a2.yaml"), "[[1, c], [1/c, 1]]", "[[1, 1], [1, 1]]"}).code == 0);
  CHECK(run({"cocycle-equiv", spec_path("a2.yaml"), "[[1, 1], [1, 1]]", "[[1, 2], [1, 1]]"}).code == 1);
  std::vector<std::string> pair{"--with", spec_path("quantum_weyl2.yaml"), "--q", spec_path("lambda_exchange.yaml"),
                                "--samples", "10"};
  auto with = [&](std::vector<std::string> head) {
    head.insert(head.end(), pair.begin(), pair.end());
    return head;
  };
  CHECK(run(with({"hexagon", spec_path("quantum_weyl1.yaml")})).code == 0);
  CHECK(run(with({"compare-products", spec_path("quantum_weyl1.yaml")})).code == 0);
  CHECK(run(with({"modules", spec_path("quantum_weyl1.yaml"), "all"})).code == 0);
  CHECK(run({"modules", spec_path("weyl1.yaml"), "annihilation"}).code == 0);

  Run bad = run({"hexagon", spec_path("quantum_weyl1.yaml"), "--with", spec_path("quantum_weyl2.yaml"), "--q",
                 spec_path("broken_exchange.yaml"), "--samples", "5"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("lhs: ") != std::string::npos);

  Run err = run({"hexagon", spec_path("quantum_weyl1.yaml")});
  CHECK(err.code == 2);
  CHECK(err.err.find("precondition error") != std::string::npos);
  Run nf = run({"cartan", spec_path("nonexistent.yaml")});
  CHECK(nf.code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("reports are deterministic and complete") {
  std::vector<std::string> args{"--json", "-", "hexagon", spec_path("quantum_weyl1.yaml"), "--with",
                                spec_path("quantum_weyl2.yaml"), "--q", spec_path("broken_exchange.yaml"),
                                "--samples", "5", "--seed", "7"};
  Run a = run(args), b = run(args);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j.find("elapsed_ms") == j.end());

  std::vector<std::string> text_args(args.begin() + 2, args.end());
  Run text = run(text_args);
  for (const auto& check : j["checks"]) {
    CHECK(text.out.find(check["title"].get<std::string>()) != std::string::npos);
    for (const auto& item : check["items"]) {
      CHECK(text.out.find(item["name"].get<std::string>()) != std::string::npos);
      if (item["status"] != "pass") {
        CHECK(text.out.find(item["lhs"].get<std::string>()) != std::string::npos);
        CHECK(text.out.find(item["rhs"].get<std::string>()) != std::string::npos);
      }
    }
  }

  args.insert(args.begin(), "--timing");
  auto timed = nlohmann::json::parse(run(args).out);
  CHECK(timed.contains("elapsed_ms"));
}

TEST_CASE("selftest") {
  RunReport r = run_selftest();
  CHECK(r.passed());
  CHECK(r.checks.size() >= 20);
  CHECK(run({"selftest"}).code == 0);
}
