#include "doctest.h"

#include "nashcar/error.hpp"
#include "nashcar/series.hpp"
#include "oracles.hpp"

using namespace nashcar;

namespace {

std::vector<Term> random_terms(oracle::Rng& rng, std::int64_t r, std::int64_t trunc, int count) {
  std::map<Exponent, Rat> m;
  for (int t = 0; t < count; ++t) {
    const std::int64_t i = rng.uniform(0, trunc / r), j = rng.uniform(0, trunc - r * i);
    m[{i, j}] = rng.coefficient();
  }
  return oracle::to_terms(m);
}

}  // namespace

TEST_CASE("construction rejects malformed term lists") {
  CHECK_THROWS_AS(InvariantSeries(2, {{1, 0, Rat(0)}}, 10), Error);
  CHECK_THROWS_AS(InvariantSeries(2, {{-1, 0, Rat(1)}}, 10), Error);
  CHECK_THROWS_AS(InvariantSeries(2, {{1, 0, Rat(1)}, {1, 0, Rat(2)}}, 10), Error);
  CHECK_THROWS_AS(InvariantSeries(2, {{6, 0, Rat(1)}}, 10), Error);
  CHECK_THROWS_AS(InvariantSeries(0, {}, 10), Error);
  CHECK_NOTHROW(InvariantSeries(2, {{5, 0, Rat(1)}}, 10));
}

TEST_CASE("printing uses the original variables") {
  const InvariantSeries f(2, {{3, 0, Rat(1)}, {0, 11, Rat(1)}}, 64);
  CHECK(f.str() == "z^6 + u^11");
  const InvariantSeries g(1, {{1, 1, Rat(-2)}, {0, 0, Rat(1, 3)}}, 8);
  CHECK(g.str() == "-2*z*u + 1/3");
}

TEST_CASE("product agrees with the dense oracle on the known region") {
  oracle::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t r = rng.uniform(1, 4), trunc = rng.uniform(8, 30);
    const auto a = random_terms(rng, r, trunc, 5), b = random_terms(rng, r, trunc, 5);
    const InvariantSeries fa(r, a, trunc), fb(r, b, trunc);
    const InvariantSeries prod = fa * fb;
    const auto dense = oracle::product(a, b);
    for (const auto& [e, c] : dense)
      if (prod.known(e.first, e.second)) CHECK(prod.coefficient(e.first, e.second) == c);
    for (const auto& [e, c] : prod.terms()) CHECK(dense.count(e) == 1);
    CHECK(prod.trunc() >= trunc);
  }
}

TEST_CASE("m_k and delta agree with the definition") {
  oracle::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_germ(rng, 2, 6, 6, 12, 64);
    const InvariantSeries f(g.r, g.f, 64);
    for (std::int64_t k = 1; k <= 3 * g.r; ++k) CHECK(weight_order(f, k) == oracle::mk(g.f, k));
    CHECK(delta(f) == oracle::delta(g.f));
  }
}

TEST_CASE("strict transform drops m_k by m_1") {
  oracle::Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_germ(rng, 2, 6, 6, 12, 64);
    const InvariantSeries f(g.r, g.f, 64);
    const InvariantSeries fp = addm_transform(f);
    const auto want = oracle::strict_transform(g.f);
    CHECK(fp.term_list().size() == want.size());
    for (const auto& t : want) CHECK(fp.coefficient(t.i, t.j) == t.c);
    for (std::int64_t k = 2; k <= 2 * g.r; ++k)
      CHECK(weight_order(f, k) == weight_order(fp, k - 1) + weight_order(f, 1));
  }
}

TEST_CASE("substitution round trip") {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t trunc = rng.uniform(6, 20);
    const InvariantSeries f(1, random_terms(rng, 1, trunc, 6), trunc);
    UPoly phi, minus;
    for (int t = 0; t < 2; ++t) {
      const std::int64_t d = rng.uniform(1, 3);
      phi[d] += rng.coefficient();
    }
    for (const auto& [d, c] : phi) minus[d] = -c;
    CHECK(substitute(substitute(f, phi), minus) == f);
  }
}

TEST_CASE("minimum weight refuses when unknown terms could be smaller") {
  const InvariantSeries f(1, {{3, 0, Rat(1)}}, 3);
  CHECK(min_weight(f, Rat(1), Rat(1)) == Rat(3));
  CHECK_THROWS_AS(min_weight(f, Rat(2), Rat(1)), Error);
  CHECK_THROWS_AS(min_weight(InvariantSeries(1, {}, 3), Rat(1), Rat(1)), Error);
}

TEST_CASE("coordinate normalization") {
  SUBCASE("linear shift") {
    // (z + u)^2 + u^5
    const InvariantSeries f(1, {{2, 0, Rat(1)}, {1, 1, Rat(2)}, {0, 2, Rat(1)}, {0, 5, Rat(1)}}, 12);
    const auto n = normalize_coordinates(f);
    CHECK_FALSE(n.swapped);
    CHECK(n.phi == UPoly{{1, Rat(-1)}});
    CHECK(n.series.str() == "z^2 + u^5");
    CHECK(n.status == NormalizationStatus::maximal);
  }
  SUBCASE("swap") {
    const InvariantSeries f(1, {{0, 2, Rat(1)}, {5, 0, Rat(1)}}, 12);
    const auto n = normalize_coordinates(f);
    CHECK(n.swapped);
    CHECK(n.series.str() == "z^2 + u^5");
  }
  SUBCASE("already normal") {
    const InvariantSeries f(1, {{2, 0, Rat(1)}, {0, 3, Rat(1)}}, 12);
    CHECK(normalize_coordinates(f).series == f);
  }
}

TEST_CASE("weight-two condition") {
  CHECK_FALSE(weight_two_condition(InvariantSeries(1, {{2, 0, Rat(1)}, {0, 3, Rat(1)}}, 12)));
  CHECK(weight_two_condition(InvariantSeries(1, {{2, 0, Rat(1)}, {0, 4, Rat(1)}}, 12)));
  CHECK_THROWS_AS(weight_two_condition(InvariantSeries(1, {{2, 0, Rat(1)}}, 2)), Error);
}
