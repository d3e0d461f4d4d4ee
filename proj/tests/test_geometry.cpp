#include "doctest.h"

#include <numeric>
#include <set>

#include "nashcar/catalog.hpp"
#include "nashcar/error.hpp"
#include "nashcar/qfactorial.hpp"
#include "nashcar/resolution.hpp"
#include "nashcar/toric.hpp"
#include "oracles.hpp"

using namespace nashcar;

namespace {

CArGerm germ(std::int64_t r, std::int64_t a, const std::vector<Term>& f, std::int64_t trunc = 128) {
  return validate_germ(r, a, InvariantSeries(r, f, trunc));
}

// (z^6 + u^11)(z^2 + u) in w = z^2.
const std::vector<Term> kProduct{{4, 0, Rat(1)}, {3, 1, Rat(1)}, {1, 11, Rat(1)}, {0, 12, Rat(1)}};

}  // namespace

TEST_CASE("quotient spaces compare by canonical form") {
  const QuotientSpace q(5, {2, 3, 1});
  CHECK(q.str() == "1/5(2,3,1)");
  CHECK(q == QuotientSpace(5, {4, 1, 2}));
  CHECK_FALSE(q == QuotientSpace(5, {1, 1, 3}));
  CHECK(QuotientSpace(6, {2, 4, 2}).r() == 3);
  CHECK(QuotientSpace::smooth(3).is_smooth());
}

TEST_CASE("chart quotients from the formula and from the lattice agree") {
  oracle::Rng rng(41);
  int compared = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t r = rng.uniform(2, 15);
    std::vector<std::int64_t> a(3), b(3);
    for (auto& x : a) x = rng.uniform(0, r - 1);
    for (auto& x : b) x = rng.uniform(1, 2 * r);
    const QuotientSpace space(r, a);
    BlowupWeight w;
    try {
      w = decompose_weight(space, b);
    } catch (const Error&) {
      continue;
    }
    for (std::size_t idx = 0; idx < 3; ++idx) {
      CAPTURE(space.str());
      CAPTURE(idx);
      QuotientSpace lattice;
      try {
        lattice = chart_quotient_by_lattice(space, w, idx);
      } catch (const Error&) {
        continue;  // non-cyclic chart group
      }
      ++compared;
      CHECK(blowup_chart(space, w, idx).space == lattice);
    }
  }
  CHECK(compared > 200);
}

TEST_CASE("the standard weighted blow-up of a terminal quotient has discrepancy 1/r") {
  for (std::int64_t r = 2; r <= 12; ++r)
    for (std::int64_t a = 1; a < r; ++a) {
      if (std::gcd(a, r) != 1) continue;
      const QuotientSpace q(r, {a, r - a, 1});
      const BlowupWeight w = decompose_weight(q, {a, r - a, 1});
      CHECK(discrepancy(q, w, {}) == Rat(1, r));
      CHECK(terminal_weight(q).has_value());
    }
}

TEST_CASE("economic resolution of a terminal point") {
  for (std::int64_t r = 2; r <= 20; ++r)
    for (std::int64_t a = 1; a < r; ++a) {
      if (std::gcd(a, r) != 1) continue;
      const auto divisors = economic_resolution(QuotientSpace(r, {a, r - a, 1}));
      std::vector<std::string> got;
      for (const auto& d : divisors) got.push_back(oracle::key(d.values, d.discrepancy));
      std::sort(got.begin(), got.end());
      CHECK(got == oracle::economic_closed_form(r, a));
    }
}

TEST_CASE("germ validation") {
  CHECK_THROWS_AS(germ(2, 2, {{1, 0, Rat(1)}, {0, 4, Rat(1)}}), Error);  // gcd(a, r) > 1
  CHECK_THROWS_AS(germ(2, 1, {{2, 0, Rat(1)}}), Error);                  // not isolated
  const CArGerm smooth = germ(1, 0, {{1, 0, Rat(1)}, {0, 1, Rat(1)}});
  CHECK(smooth.smooth);
  CHECK(closed_form_catalog(smooth).empty());
}

TEST_CASE("m_k table of the product example") {
  const CArGerm g = germ(2, 1, kProduct);
  CHECK(mk_table(g, 5) == std::vector<std::int64_t>{4, 7, 10, 12, 12});
  CHECK(g.m1 == 4);
  CHECK(delta(g.f) == 4);
  CHECK(nash_valuations(g).size() == 10);
}

TEST_CASE("the z^3 + u^6 family member") {
  const CArGerm g = germ(3, 1, {{1, 0, Rat(1)}, {0, 6, Rat(1)}});
  CHECK(nash_valuations(g).size() == 5);
  const EssentialResult res = essential_valuations(g, is_q_factorial(g));
  std::size_t yes = 0;
  for (const auto& v : res.valuations) yes += v.essential == Tri::yes;
  CHECK(yes == 9);
  CHECK(res.verdict.surjective == Tri::no);
  CHECK_FALSE(res.verdict.witnesses.empty());
}

TEST_CASE("catalog invariants on random germs") {
  oracle::Rng rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const auto sample = oracle::random_germ(rng, 2, 6, 5, 10, 128);
    const CArGerm g = germ(sample.r, sample.a, sample.f);
    CAPTURE(g.f.str());
    const auto catalog = closed_form_catalog(g);
    std::set<std::string> keys;
    for (const auto& v : catalog) {
      CHECK(v.discrepancy > Rat(0));
      keys.insert(oracle::key(v.values, v.discrepancy));
    }
    CHECK(keys.size() == catalog.size());

    std::int64_t counted = 0;
    for (const auto& [disc, n] : count_by_discrepancy(g)) counted += n;
    CHECK(counted == static_cast<std::int64_t>(catalog.size()));

    for (const auto& v : nash_valuations(g)) {
      CHECK(v.nash);
      CHECK(keys.count(oracle::key(v.values, v.discrepancy)) == 1);
    }

    const EssentialResult res = essential_valuations(g, Tri::yes);
    for (const auto& v : res.valuations) {
      if (v.nash) CHECK(v.essential == Tri::yes);
      if (v.essential == Tri::yes) CHECK(v.discrepancy <= Rat(2));
      if (below_previous_weight(g, v.values)) CHECK(v.essential == Tri::no);
    }
    const bool has_witness = std::any_of(res.valuations.begin(), res.valuations.end(),
                                         [](const auto& v) { return !v.nash && v.essential == Tri::yes; });
    CHECK((res.verdict.surjective == Tri::no) == has_witness);
  }
}
