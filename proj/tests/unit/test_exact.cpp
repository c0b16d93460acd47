#include <random>

#include "doctest.h"
#include "tgwa/exact/errors.hpp"
#include "tgwa/exact/ring_map.hpp"

using namespace tgwa;

namespace {

Ratfun P(const char* name) { return Ratfun(parameter(name)); }
Ratfun V(const char* name) { return Ratfun(variable(name)); }

// Small random rational function in the given symbols.
Ratfun random_poly(std::mt19937_64& rng, const std::vector<Ratfun>& gens, int terms, int max_deg) {
  Ratfun p;
  for (int k = 0; k < terms; ++k) {
    Ratfun m = Gaussian(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) - 1);
    for (const auto& g : gens) m *= g.pow(static_cast<long>(rng() % (max_deg + 1)));
    p += m;
  }
  return p;
}

Ratfun random_ratfun(std::mt19937_64& rng, const std::vector<Ratfun>& gens) {
  Ratfun d;
  while (d.is_zero()) d = random_poly(rng, gens, 2, 1);
  return random_poly(rng, gens, 3, 2) / d;
}

}  // namespace

TEST_CASE("gaussian arithmetic") {
  CHECK(Gaussian::fraction(1, 2) + Gaussian::fraction(1, 2) == Gaussian(1));
  CHECK(Gaussian::i() * Gaussian::i() == Gaussian(-1));
  CHECK(Gaussian(1, 1).inverse() == Gaussian(mpq_class(1, 2), mpq_class(-1, 2)));
  CHECK(Gaussian(0, -1).to_string() == "-i");
  CHECK(Gaussian(mpq_class(3, 2), 2).to_string() == "3/2 + 2*i");
  CHECK_THROWS_AS(Gaussian(0).inverse(), DivisionByZero);
}

TEST_CASE("scalar arithmetic examples") {
  Ratfun half = Ratfun(Gaussian::fraction(1, 2));
  CHECK(scalar_arith(half, half, ArithOp::add) == Ratfun(1));
  CHECK(scalar_arith(Ratfun::i(), Ratfun::i(), ArithOp::mul) == Ratfun(-1));
  Ratfun q = P("q");
  Ratfun lhs = q / (q - 1) - Ratfun(1) / (q - 1);
  CHECK(lhs == Ratfun(1));
  CHECK(lhs.den().is_one());
  CHECK_THROWS_AS(scalar_arith(q, Ratfun(), ArithOp::div), DivisionByZero);
}

TEST_CASE("canonical form") {
  Ratfun q = P("q");
  Ratfun a = (q * q - 1) / (2 * q + 2);  // (q - 1)/2
  CHECK(a == (q - 1) / Ratfun(2));
  CHECK(a.den().is_one());
  Ratfun b = Ratfun(1) / (Ratfun(2) * q);
  CHECK(b.den().leading().coeff.is_one());
  CHECK(b.num() == Polynomial(Gaussian::fraction(1, 2)));
  CHECK((q - q).num().is_zero());
  CHECK((q - q).den().is_one());
}

TEST_CASE("monomial order is graded lex in interning order") {
  Symbol a = variable("ord_a");
  Symbol b = variable("ord_b");
  Monomial ma(a), mb(b), mab = Monomial(a) * Monomial(b), mbb(b, 2);
  CHECK(mb < ma);     // earlier symbol is larger
  CHECK(ma < mbb);    // degree first
  CHECK(mbb < mab);   // a*b > b^2
  Polynomial p = Polynomial(b).pow(2) + Polynomial(a) * Polynomial(b) + Polynomial(a);
  CHECK(p.to_string() == "ord_a*ord_b + ord_b^2 + ord_a");
}

TEST_CASE("multivariate gcd") {
  Ratfun x = V("gx"), y = V("gy"), q = P("q");
  Ratfun f = (x + y) * (x - q * y);
  Ratfun g = (x + y) * (x * y + 1);
  Polynomial d = gcd(f.num(), g.num());
  CHECK(d == (x + y).num());
  CHECK(gcd(f.num(), Polynomial(3)).is_one());
  CHECK(gcd(((x * x) * y).num(), (x * y * y).num()) == (x * y).num());
  Ratfun r = f / g;
  CHECK(r == (x - q * y) / (x * y + 1));
}

TEST_CASE("randomized field identities") {
  std::mt19937_64 rng(7);
  std::vector<Ratfun> gens{V("fx"), V("fy"), P("fq")};
  for (int k = 0; k < 40; ++k) {
    Ratfun a = random_ratfun(rng, gens), b = random_ratfun(rng, gens), c = random_ratfun(rng, gens);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a - a == Ratfun());
  }
}

TEST_CASE("apply_map examples") {
  Symbol t = variable("t");
  RingMap sigma({t}, {Ratfun(t) - 1}, std::vector<Ratfun>{Ratfun(t) + 1});
  Ratfun tt(t);
  CHECK(apply_map(sigma, tt * tt) == tt * tt - 2 * tt + 1);
  CHECK(apply_map(sigma, tt * tt).to_string() == "t^2 - 2*t + 1");
  CHECK(apply_map(RingMap::identity({t}), tt * tt + 3) == tt * tt + 3);

  Symbol t1 = variable("t1"), t2 = variable("t2");
  Ratfun T1(t1), T2(t2);
  RingMap s1({t1, t2}, {T1 + T2 * T2, T2}, std::vector<Ratfun>{T1 - T2 * T2, T2});
  CHECK(apply_map(s1, T1) == T1 + T2 * T2);

  // parameters are fixed; unknown variables are rejected
  Ratfun q = P("q");
  CHECK(apply_map(sigma, q * tt) == q * tt - q);
  CHECK_THROWS_AS(apply_map(sigma, T1), DomainError);
}

TEST_CASE("apply_map is a homomorphism and respects composition") {
  Symbol x = variable("hx"), y = variable("hy");
  Ratfun X(x), Y(y), q = P("q");
  RingMap f({x, y}, {q * X + 1, Y - X}, std::vector<Ratfun>{(X - 1) / q, Y + (X - 1) / q});
  RingMap g({x, y}, {Y, X}, std::vector<Ratfun>{Y, X});
  std::mt19937_64 rng(11);
  std::vector<Ratfun> gens{X, Y};
  for (int k = 0; k < 20; ++k) {
    Ratfun a = random_ratfun(rng, gens), b = random_ratfun(rng, gens);
    CHECK(apply_map(f, a * b) == apply_map(f, a) * apply_map(f, b));
    CHECK(apply_map(f, a + b) == apply_map(f, a) + apply_map(f, b));
    CHECK(apply_map(compose(f, g), a) == apply_map(f, apply_map(g, a)));
    CHECK(apply_map(f.inverse(), apply_map(f, a)) == a);
    CHECK(apply_map(compose(f, g).inverse(), apply_map(compose(f, g), a)) == a);
  }
  CHECK(verify_automorphism(f).passed());
  CHECK(verify_automorphism(compose(f, g)).passed());
}

TEST_CASE("verify_automorphism examples") {
  Symbol t = variable("t");
  Ratfun T(t);
  CHECK(verify_automorphism(RingMap({t}, {T - 1}, std::vector<Ratfun>{T + 1})).passed());
  CHECK(verify_automorphism(RingMap({t}, {T * T})).status() == Status::unverifiable);
  Symbol h = variable("h");
  Ratfun H(h), q = P("q");
  CHECK(verify_automorphism(RingMap({h}, {q * H}, std::vector<Ratfun>{H / q})).passed());
  CheckReport bad = verify_automorphism(RingMap({t}, {T - 1}, std::vector<Ratfun>{T + 2}));
  CHECK(bad.status() == Status::fail);
  REQUIRE(bad.first_failure() != nullptr);
  CHECK(bad.first_failure()->name.find("(t)") != std::string::npos);
}

TEST_CASE("verify_commuting examples") {
  Symbol t1 = variable("t1"), t2 = variable("t2"), h = variable("h");
  Ratfun T1(t1), T2(t2), H(h), q = P("q");
  RingMap s1({t1, t2}, {T1 + T2 * T2, T2});
  RingMap s2({t1, t2}, {T1, -T2});
  CHECK(verify_commuting(s1, s2).passed());
  CHECK(verify_commuting(s1, RingMap::identity({t1, t2})).passed());
  RingMap rho({t1, t2, h}, {-T1, Ratfun::i() * T2, q * H});
  RingMap s1e({t1, t2, h}, {T1 + T2 * T2, T2, H});
  CHECK(verify_commuting(rho, s1e).passed());
  RingMap bad({t1, t2}, {T1 + T2, T2});
  CHECK_FALSE(verify_commuting(bad, s2).passed());
  CHECK_THROWS_AS(verify_commuting(s1, rho), DomainError);
}

TEST_CASE("products of nonzero polynomials are nonzero") {
  std::mt19937_64 rng(3);
  std::vector<Ratfun> gens{V("dx"), V("dy")};
  for (int k = 0; k < 30; ++k) {
    Ratfun a = random_poly(rng, gens, 3, 2), b = random_poly(rng, gens, 3, 2);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK_FALSE((a * b).is_zero());
  }
}

TEST_CASE("symbol kinds are enforced") {
  parameter("kind_p");
  CHECK_THROWS_AS(variable("kind_p"), DomainError);
  CHECK_THROWS_AS(parameter("i"), DomainError);
}
