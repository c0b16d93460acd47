#include "doctest.h"
#include "tgwa/corpus/corpus.hpp"
#include "unit/test_data.hpp"

using namespace tgwa;

TEST_CASE("corpus data match their definitions") {
  auto same = [](const Tgwd& a, const Tgwd& b) {
    REQUIRE(a.rank() == b.rank());
    CHECK(a.variables == b.variables);
    CHECK(a.t == b.t);
    for (std::size_t i = 0; i < a.rank(); ++i) {
      CHECK(a.sigma[i].images() == b.sigma[i].images());
      CHECK(a.sigma[i].inverse_images() == b.sigma[i].inverse_images());
    }
  };
  for (std::size_t n = 1; n <= 4; ++n) same(corpus::weyl(n), testdata::weyl(n));
  same(corpus::a2(), testdata::a2());
  same(corpus::quantum_weyl("z", "q"), testdata::quantum_weyl("z", "q"));
  same(corpus::rank2_example(), testdata::rank2_example());
  same(corpus::qh(), testdata::qh());
  CHECK(corpus::lambda_q() == testdata::lambda_q());
  CHECK(corpus::rank2_tensor().q() == testdata::rank2_tensor().q());
}

TEST_CASE("paper examples all pass") {
  auto examples = corpus::paper_examples();
  CHECK(examples.size() >= 20);
  for (const auto& e : examples) {
    CAPTURE(e.id);
    CheckReport r = e.run();
    CHECK(!r.items.empty());
    CHECK(r.passed());
  }
}
