#pragma once

// Independent reference computations and random generators for the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "nashcar/resolution.hpp"
#include "nashcar/series.hpp"

namespace oracle {

using nashcar::Rat;
using nashcar::Term;

inline std::int64_t mod(std::int64_t x, std::int64_t r) { return ((x % r) + r) % r; }

// m_k straight from the definition over the listed monomials z^(r i) u^j.
inline std::int64_t mk(const std::vector<Term>& f, std::int64_t k) {
  std::int64_t best = INT64_MAX;
  for (const auto& t : f)
    if (!t.c.is_zero()) best = std::min(best, k * t.i + t.j);
  return best;
}

// f(z u^(1/r), u) / u^(m_1) on the term list.
inline std::vector<Term> strict_transform(const std::vector<Term>& f) {
  const std::int64_t m = mk(f, 1);
  std::vector<Term> out;
  for (const auto& t : f) out.push_back({t.i, t.i + t.j - m, t.c});
  return out;
}

inline std::int64_t delta(const std::vector<Term>& f) {
  for (std::int64_t k = 1;; ++k)
    if (mk(f, k + 1) == mk(f, k)) return k;
}

inline std::string key(const nashcar::ExpVec& v, const Rat& disc) { return v.str() + " @ " + disc.str(); }

// Divisors of the economic resolution of 1/r(a, -a, 1): (1/r)(ia mod r, -ia mod r, i), discrepancy i/r.
inline std::vector<std::string> economic_closed_form(std::int64_t r, std::int64_t a) {
  std::vector<std::string> out;
  for (std::int64_t i = 1; i < r; ++i) {
    const auto v = nashcar::ExpVec::scaled(r, {mod(i * a, r), mod(-i * a, r), i});
    out.push_back(key(v, Rat(i, r)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Dense product of two term lists.
inline std::map<std::pair<std::int64_t, std::int64_t>, Rat> product(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::map<std::pair<std::int64_t, std::int64_t>, Rat> out;
  for (const auto& x : a)
    for (const auto& y : b) out[{x.i + y.i, x.j + y.j}] += x.c * y.c;
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

inline std::vector<Term> to_terms(const std::map<std::pair<std::int64_t, std::int64_t>, Rat>& m) {
  std::vector<Term> out;
  for (const auto& [e, c] : m) out.push_back({e.first, e.second, c});
  return out;
}

class Rng {
 public:
  explicit Rng(std::uint32_t seed) : g_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(g_); }
  Rat coefficient() {
    std::int64_t c = 0;
    while (c == 0) c = uniform(-5, 5);
    return Rat(static_cast<long>(c));
  }

 private:
  std::mt19937 g_;
};

struct GermSample {
  std::int64_t r = 1, a = 0;
  std::vector<Term> f;
};

// Random valid germ: r <= max_r, at most max_terms support terms, exponents <= max_exp.
inline GermSample random_germ(Rng& rng, std::int64_t min_r, std::int64_t max_r, std::size_t max_terms, std::int64_t max_exp,
                            std::int64_t trunc) {
  while (true) {
    GermSample g;
    g.r = rng.uniform(min_r, max_r);
    if (g.r > 1) {
      do g.a = rng.uniform(1, g.r - 1);
      while (std::gcd(g.a, g.r) != 1);
    }
    const std::int64_t m = rng.uniform(g.r == 1 ? 2 : 1, 4);
    std::map<std::pair<std::int64_t, std::int64_t>, Rat> terms;
    terms[{m, 0}] = rng.coefficient();
    terms[{0, rng.uniform(m, max_exp)}] = rng.coefficient();
    const std::size_t extra = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_terms) - 2));
    for (std::size_t t = 0; t < extra; ++t) {
      const std::int64_t i = rng.uniform(0, max_exp), j = rng.uniform(0, max_exp);
      if (i + j < m) continue;
      terms[{i, j}] = rng.coefficient();
    }
    g.f = to_terms(terms);
    try {
      nashcar::validate_germ(g.r, g.a, nashcar::InvariantSeries(g.r, g.f, trunc));
      return g;
    } catch (const nashcar::Error&) {
    }
  }
}

// w^d + c u^e with gcd(d, e) = 1 plus terms strictly above the segment: irreducible.
inline std::vector<Term> random_irreducible(Rng& rng, std::int64_t max_d, std::int64_t max_e) {
  std::int64_t d = 0, e = 0;
  do {
    d = rng.uniform(1, max_d);
    e = rng.uniform(1, max_e);
  } while (std::gcd(d, e) != 1);
  std::map<std::pair<std::int64_t, std::int64_t>, Rat> terms;
  terms[{d, 0}] = Rat(1);
  terms[{0, e}] = rng.coefficient();
  for (int t = 0; t < 2; ++t) {
    const std::int64_t i = rng.uniform(0, d), j = rng.uniform(0, 2 * e);
    if (e * i + d * j > d * e) terms[{i, j}] = rng.coefficient();
  }
  return to_terms(terms);
}

}  // namespace oracle
