#include "tgwa/tgwc/construction.hpp"

#include "tgwa/exact/errors.hpp"

namespace tgwa {

Construction::Construction(Tgwd datum, ParameterMatrix mu)
    : datum_(std::move(datum)), mu_(std::move(mu)), cache_(std::make_shared<PowerCache>()) {
  std::size_t n = datum_.rank();
  if (mu_.size() != n) throw DomainError("construction: parameter matrix size mismatch");
  regular_ = true;
  for (const auto& t : datum_.t) regular_ = regular_ && !t.is_zero();
  for (std::size_t i = 0; i < n; ++i) sigma_t_.push_back(datum_.sigma[i].apply(datum_.t[i]));
  if (!regular_) return;
  kappa_plus_.assign(n * n, Ratfun(1));
  kappa_minus_.assign(n * n, Ratfun(1));
  for (std::size_t a = 0; a < n; ++a) {
    RingMap a_inv = datum_.sigma[a].inverse();
    for (std::size_t b = 0; b < a; ++b) {
      const Ratfun& tb = datum_.t[b];
      kappa_plus_[a * n + b] = datum_.sigma[b].apply(datum_.sigma[a].apply(tb)) / (mu_(a, b) * sigma_t_[b]);
      kappa_minus_[a * n + b] = mu_(b, a) * a_inv.apply(tb) / tb;
    }
  }
}

Ratfun Construction::sigma(const Degree& alpha, const Ratfun& p) const {
  if (is_zero(alpha) || p.is_constant()) return p;
  std::shared_ptr<const RingMap> map;
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->maps.find(alpha);
    if (it != cache_->maps.end()) map = it->second;
  }
  if (!map) {
    std::vector<Ratfun> images;
    for (Symbol x : datum_.variables) images.push_back(sigma_power(datum_, alpha, Ratfun(x)));
    map = std::make_shared<const RingMap>(datum_.variables, std::move(images));
    std::lock_guard lock(cache_->mutex);
    cache_->maps.emplace(alpha, map);
  }
  return map->apply(p);
}

Ratfun Construction::twisted(const Word& w, std::size_t prefix_len, const Ratfun& f) const {
  if (prefix_len == 0 || f.is_scalar()) return f;
  return sigma(degree(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(prefix_len)), rank()), f);
}

namespace {

bool has_redex(int a, int b, bool loc) {
  if (a > 0 && b < 0) return true;
  if (a < 0 && b > 0) return a == -b;
  if (!loc) return false;
  if (a > 0 && b > 0) return a > b;
  return -a > -b;
}

}  // namespace

// Sorted word with an index in both blocks: bring the last -j and the first +j
// together at the junction and cancel them.
bool Construction::sorting_step(Ratfun& coeff, Word& w) const {
  std::size_t n = rank();
  std::size_t p = 0;
  while (p < w.size() && w[p] < 0) ++p;
  int j = 0;
  for (std::size_t k = 0; k < p && j == 0; ++k) {
    for (std::size_t l = p; l < w.size(); ++l) {
      if (w[l] == -w[k]) {
        j = w[l];
        break;
      }
    }
  }
  if (j == 0) return false;
  std::size_t jj = letter_index(j);
  std::size_t e = p - 1;
  while (w[e] != -j) --e;
  for (std::size_t pos = e; pos + 1 < p; ++pos) {
    std::size_t k = letter_index(w[pos + 1]);
    coeff *= twisted(w, pos, kappa_minus_[k * n + jj].inverse());
    std::swap(w[pos], w[pos + 1]);
  }
  std::size_t f = p;
  while (w[f] != j) ++f;
  for (std::size_t pos = f; pos > p; --pos) {
    std::size_t i = letter_index(w[pos - 1]);
    coeff *= twisted(w, pos - 1, kappa_plus_[jj * n + i].inverse());
    std::swap(w[pos - 1], w[pos]);
  }
  coeff *= twisted(w, p - 1, datum_.t[jj]);
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(p - 1), w.begin() + static_cast<std::ptrdiff_t>(p + 1));
  return true;
}

std::pair<Ratfun, Word> Construction::reduce_term(Ratfun coeff, Word w, Strategy s) const {
  std::size_t n = rank();
  for (int l : w) {
    if (l == 0 || letter_index(l) >= n) throw DomainError("letter " + std::to_string(l) + " out of range");
  }
  while (!coeff.is_zero()) {
    std::size_t m = w.size();
    std::ptrdiff_t at = -1;
    for (std::size_t step = 0; step + 1 < m; ++step) {
      std::size_t k = s == Strategy::leftmost ? step : m - 2 - step;
      if (has_redex(w[k], w[k + 1], regular_)) {
        at = static_cast<std::ptrdiff_t>(k);
        break;
      }
    }
    if (at < 0) {
      if (regular_ && sorting_step(coeff, w)) continue;
      break;
    }
    auto k = static_cast<std::size_t>(at);
    int a = w[k], b = w[k + 1];
    if (a == -b) {
      std::size_t i = letter_index(a);
      coeff *= twisted(w, k, a > 0 ? sigma_t_[i] : datum_.t[i]);
      w.erase(w.begin() + at, w.begin() + at + 2);
    } else {
      std::size_t ia = letter_index(a), ib = letter_index(b);
      if (a > 0 && b < 0) {
        coeff *= mu_(ia, ib);
      } else if (a > 0) {
        coeff *= twisted(w, k, kappa_plus_[ia * n + ib]);
      } else {
        coeff *= twisted(w, k, kappa_minus_[ia * n + ib]);
      }
      std::swap(w[k], w[k + 1]);
    }
  }
  if (coeff.is_zero()) w.clear();
  return {coeff, w};
}

TgwcElement Construction::normal_form(const TgwcElement& e, Strategy s) const {
  TgwcElement out;
  for (const auto& [w, c] : e.terms()) {
    auto [coeff, word] = reduce_term(c, w, s);
    out.add_term(coeff, word);
  }
  return out;
}

TgwcElement Construction::multiply(const TgwcElement& a, const TgwcElement& b) const {
  TgwcElement out;
  for (const auto& [u, c] : a.terms()) {
    Degree du = degree(u, rank());
    for (const auto& [v, d] : b.terms()) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      auto [coeff, word] = reduce_term(c * sigma(du, d), std::move(w));
      out.add_term(coeff, word);
    }
  }
  return out;
}

TgwcElement normal_form(const Construction& c, const TgwcElement& e, Strategy s) { return c.normal_form(e, s); }

TgwcElement multiply(const Construction& c, const TgwcElement& a, const TgwcElement& b) { return c.multiply(a, b); }

}  // namespace tgwa
