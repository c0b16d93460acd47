#include "tgwa/tgwc/sampling.hpp"

#include <cstdlib>

namespace tgwa {

int Sampler::uniform(int lo, int hi) {
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng_() % span);
}

Gaussian Sampler::small_gaussian(bool allow_imaginary) {
  for (;;) {
    mpq_class re(uniform(-3, 3), uniform(1, 3));
    mpq_class im(allow_imaginary && uniform(0, 3) == 0 ? uniform(-2, 2) : 0);
    re.canonicalize();
    Gaussian g(re, im);
    if (!g.is_zero()) return g;
  }
}

Ratfun Sampler::nonzero_scalar(const std::vector<Symbol>& params) {
  Ratfun s(small_gaussian());
  if (!params.empty() && coin()) {
    Ratfun p(params[static_cast<std::size_t>(uniform(0, static_cast<int>(params.size()) - 1))]);
    s *= p.pow(uniform(0, 1) ? 1 : -1);
  }
  return s;
}

Ratfun Sampler::ring_element(const std::vector<Symbol>& vars, int max_degree) {
  Ratfun r;
  int terms = uniform(1, 3);
  for (int k = 0; k < terms; ++k) {
    Ratfun m(small_gaussian(false));
    int deg = vars.empty() ? 0 : uniform(0, max_degree);
    for (int e = 0; e < deg; ++e) m *= Ratfun(vars[static_cast<std::size_t>(uniform(0, static_cast<int>(vars.size()) - 1))]);
    r += m;
  }
  if (r.is_zero()) r = Ratfun(1);
  return r;
}

Word Sampler::word(std::size_t rank, std::size_t max_len) {
  Word w(static_cast<std::size_t>(uniform(0, static_cast<int>(max_len))));
  for (int& l : w) l = uniform(1, static_cast<int>(rank)) * (coin() ? 1 : -1);
  return w;
}

Word Sampler::word_of_degree(const Degree& alpha, std::size_t max_len) {
  Word w;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (int k = 0; k < std::abs(alpha[i]); ++k) w.push_back(alpha[i] > 0 ? static_cast<int>(i + 1) : -static_cast<int>(i + 1));
  }
  for (std::size_t k = w.size(); k > 1; --k) std::swap(w[k - 1], w[static_cast<std::size_t>(uniform(0, static_cast<int>(k) - 1))]);
  while (w.size() + 2 <= max_len && !alpha.empty() && coin()) {
    int l = uniform(1, static_cast<int>(alpha.size())) * (coin() ? 1 : -1);
    auto at = w.begin() + uniform(0, static_cast<int>(w.size()));
    at = w.insert(at, -l);
    w.insert(at, l);
  }
  return w;
}

Degree Sampler::degree(std::size_t rank, int radius) {
  Degree a(rank);
  for (int& x : a) x = uniform(-radius, radius);
  return a;
}

TgwcElement Sampler::element(const Tgwd& d, int max_terms, std::size_t max_len, int max_degree) {
  TgwcElement e;
  int terms = uniform(1, max_terms);
  for (int k = 0; k < terms; ++k) e.add_term(ring_element(d.variables, max_degree), word(d.rank(), max_len));
  return e;
}

TgwcElement Sampler::homogeneous(const Tgwd& d, const Degree& alpha, int max_terms, std::size_t max_len,
                                 int max_degree) {
  TgwcElement e;
  int terms = uniform(1, max_terms);
  for (int k = 0; k < terms; ++k) e.add_term(ring_element(d.variables, max_degree), word_of_degree(alpha, max_len));
  return e;
}

}  // namespace tgwa
